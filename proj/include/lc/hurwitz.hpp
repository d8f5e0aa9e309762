#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lc/complex_core.hpp"
#include "lc/rational.hpp"

namespace lc {

struct NonTransitive : Error {
    using Error::Error;
};
struct ProductNotIdentity : Error {
    using Error::Error;
};

// Permutation of {0..n-1}. Composition is in application order: (a * b) means
// "apply a, then b". Text form uses 1-based cycle notation, e.g. "(1 2 3)(4 5)".
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);
    explicit Perm(std::vector<int> images);

    static Perm identity(int n) { return Perm(n); }
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& one_based_cycles);
    static Perm parse(int n, const std::string& cycle_text);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[x]; }
    Perm inverse() const;
    Perm then(const Perm& next) const;  // apply *this first, then next
    bool is_identity() const;
    std::vector<std::vector<int>> cycles() const;  // 0-based, including fixed points
    std::string to_cycle_string() const;           // 1-based; "()" for identity

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<int> images_;
};

// Monodromy of a degree-n covering of the sphere branched over q values
// a_1..a_q in cyclic order: sigma[i] acts on sheets when crossing a small
// counterclockwise loop around a_{i+1}. Applying sigma[0], then sigma[1], ...,
// then sigma[q-1] must be the identity, and the generated group must act
// transitively on the sheets.
struct MonodromyDatum {
    int n = 1;
    int q = 2;
    std::vector<Perm> sigma;

    void check() const;  // throws ProductNotIdentity / NonTransitive / Error
};

struct CoveringSummary {
    int n = 1;
    int q = 2;
    std::uint64_t total_branching = 0;  // b = sum over all cycles of (len - 1)
    std::int64_t euler_characteristic = 2;
    std::int64_t genus = 0;
    Rational mean_ramification;          // b / n
    bool closed_sphere_identity = false;  // genus 0: mean == 2 - 2/n holds
};

// Builds the line complex of the covering: inner vertex j = half sheet J_j,
// outer vertex k = half sheet A_k (ids j and n + k). The edge in slot i joins
// J_j to A_{T_i(j)} where T_i is the monodromy picked up between the arc
// crossing side (a_{i+1} a_{i+2}) and the reference arc crossing (a_q a_1).
// Faces over a_i then correspond exactly to the cycles of sigma[i-1], a 2m-gon
// per length-m cycle; tests pin that bijection.
LineComplex build_from_monodromy(const MonodromyDatum& d);

CoveringSummary covering_summary(const MonodromyDatum& d);

// Random transitive datum with sigma[q-1] chosen as the inverse of the partial
// product, so the closure relation holds by construction.
MonodromyDatum random_transitive_monodromy(std::mt19937_64& rng, int n, int q);

}  // namespace lc
