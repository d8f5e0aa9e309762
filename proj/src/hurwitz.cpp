#include "lc/hurwitz.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace lc {

Perm::Perm(int n) : images_(n) {
    std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
            throw Error("Perm: image table is not a bijection");
        seen[x] = 1;
    }
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& one_based_cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : one_based_cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i] - 1;
            int b = cyc[(i + 1) % cyc.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw Error("Perm: cycle entry out of range 1.." + std::to_string(n));
            img[a] = b;
        }
    }
    return Perm(std::move(img));
}

Perm Perm::parse(int n, const std::string& cycle_text) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> current;
    bool in_cycle = false;
    std::size_t i = 0;
    while (i < cycle_text.size()) {
        char ch = cycle_text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            ++i;
        } else if (ch == '(') {
            if (in_cycle) throw Error("Perm::parse: nested '(' in \"" + cycle_text + "\"");
            in_cycle = true;
            current.clear();
            ++i;
        } else if (ch == ')') {
            if (!in_cycle) throw Error("Perm::parse: unmatched ')' in \"" + cycle_text + "\"");
            in_cycle = false;
            if (!current.empty()) cycles.push_back(current);
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            if (!in_cycle)
                throw Error("Perm::parse: digit outside cycle in \"" + cycle_text + "\"");
            int value = 0;
            while (i < cycle_text.size() && std::isdigit(static_cast<unsigned char>(cycle_text[i])))
                value = value * 10 + (cycle_text[i++] - '0');
            current.push_back(value);
        } else {
            throw Error(std::string("Perm::parse: unexpected character '") + ch + "' in \"" +
                        cycle_text + "\"");
        }
    }
    if (in_cycle) throw Error("Perm::parse: missing ')' in \"" + cycle_text + "\"");
    // Entries must be distinct across all cycles.
    std::vector<char> used(n + 1, 0);
    for (const auto& cyc : cycles)
        for (int x : cyc) {
            if (x < 1 || x > n)
                throw Error("Perm::parse: entry " + std::to_string(x) + " out of range 1.." +
                            std::to_string(n));
            if (used[x]) throw Error("Perm::parse: repeated entry " + std::to_string(x));
            used[x] = 1;
        }
    return from_cycles(n, cycles);
}

Perm Perm::inverse() const {
    std::vector<int> img(images_.size());
    for (int x = 0; x < size(); ++x) img[images_[x]] = x;
    return Perm(std::move(img));
}

Perm Perm::then(const Perm& next) const {
    if (size() != next.size()) throw Error("Perm::then: size mismatch");
    std::vector<int> img(images_.size());
    for (int x = 0; x < size(); ++x) img[x] = next.images_[images_[x]];
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int x = 0; x < size(); ++x)
        if (images_[x] != x) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[x] = 1;
            cyc.push_back(x);
            x = images_[x];
        } while (x != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Perm::to_cycle_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& cyc : cycles()) {
        if (cyc.size() < 2) continue;
        any = true;
        os << '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << ' ';
            os << cyc[i] + 1;
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

void MonodromyDatum::check() const {
    if (n < 1) throw Error("monodromy: sheet count n must be >= 1");
    if (q < 2) throw Error("monodromy: branch value count q must be >= 2");
    if (static_cast<int>(sigma.size()) != q)
        throw Error("monodromy: expected q = " + std::to_string(q) + " permutations, got " +
                    std::to_string(sigma.size()));
    for (const Perm& s : sigma)
        if (s.size() != n) throw Error("monodromy: permutation size != n");

    Perm product = Perm::identity(n);
    for (const Perm& s : sigma) product = product.then(s);
    if (!product.is_identity())
        throw ProductNotIdentity("monodromy: sigma_1 ... sigma_q != identity (covering not closed)");

    // Transitivity of the generated group: union-find over all sigma edges.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm& s : sigma)
        for (int x = 0; x < n; ++x) parent[find(x)] = find(s.apply(x));
    for (int x = 0; x < n; ++x)
        if (find(x) != find(0))
            throw NonTransitive("monodromy: generated group is not transitive on sheets");
}

LineComplex build_from_monodromy(const MonodromyDatum& d) {
    d.check();
    const int n = d.n;
    const int q = d.q;

    // T[i](j) = sheet of the outer half sheet reached from J_j across arc i.
    // T[q-1] = id (reference arc); T[i] = "apply sigma[i+1], then T[i+1]".
    std::vector<Perm> T(q, Perm::identity(n));
    for (int i = q - 2; i >= 0; --i) T[i] = d.sigma[i + 1].then(T[i + 1]);
    std::vector<Perm> Tinv(q, Perm::identity(n));
    for (int i = 0; i < q; ++i) Tinv[i] = T[i].inverse();

    LineComplex c;
    c.q = q;
    c.colors.resize(2 * n);
    c.rot.assign(2 * n, std::vector<HalfEdge>(q));
    auto inner = [&](int j) { return static_cast<VertexId>(j); };
    auto outer = [&](int k) { return static_cast<VertexId>(n + k); };
    for (int j = 0; j < n; ++j) c.colors[inner(j)] = Color::Inner;
    for (int k = 0; k < n; ++k) c.colors[outer(k)] = Color::Outer;

    // Inner rotations list arcs 0..q-1 counterclockwise; outer rotations see
    // the same arcs in reversed cyclic order (position p holds arc q-1-p).
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < q; ++i) {
            int k = T[i].apply(j);
            c.rot[inner(j)][i] = HalfEdge{outer(k), static_cast<std::uint32_t>(q - 1 - i)};
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int p = 0; p < q; ++p) {
            int i = q - 1 - p;
            int j = Tinv[i].apply(k);
            c.rot[outer(k)][p] = HalfEdge{inner(j), static_cast<std::uint32_t>(i)};
        }
    }
    return c;
}

CoveringSummary covering_summary(const MonodromyDatum& d) {
    d.check();
    CoveringSummary s;
    s.n = d.n;
    s.q = d.q;
    std::uint64_t b = 0;
    for (const Perm& sig : d.sigma)
        for (const auto& cyc : sig.cycles()) b += cyc.size() - 1;
    s.total_branching = b;
    s.euler_characteristic = 2 * static_cast<std::int64_t>(d.n) - static_cast<std::int64_t>(b);
    if ((2 - s.euler_characteristic) % 2 != 0)
        throw Error("covering_summary: odd Euler characteristic (data inconsistent)");
    s.genus = (2 - s.euler_characteristic) / 2;
    if (s.genus < 0) throw Error("covering_summary: negative genus (data inconsistent)");
    s.mean_ramification = Rational(BigInt(b), BigInt(d.n));
    s.closed_sphere_identity = (s.genus == 0);
    return s;
}

MonodromyDatum random_transitive_monodromy(std::mt19937_64& rng, int n, int q) {
    auto random_perm = [&](int size) {
        std::vector<int> img(size);
        std::iota(img.begin(), img.end(), 0);
        for (int i = size - 1; i > 0; --i) {
            std::uniform_int_distribution<int> dist(0, i);
            std::swap(img[i], img[dist(rng)]);
        }
        return Perm(std::move(img));
    };
    while (true) {
        MonodromyDatum d;
        d.n = n;
        d.q = q;
        d.sigma.reserve(q);
        Perm product = Perm::identity(n);
        for (int i = 0; i < q - 1; ++i) {
            d.sigma.push_back(random_perm(n));
            product = product.then(d.sigma.back());
        }
        d.sigma.push_back(product.inverse());
        try {
            d.check();
            return d;
        } catch (const NonTransitive&) {
            // retry
        }
    }
}

}  // namespace lc
