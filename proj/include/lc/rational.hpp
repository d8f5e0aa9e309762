#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lc {

// Exact arithmetic everywhere the theory demands identities (V_P + E_P = 2,
// mean ramification 2 - 2/n). Generation counts of tree-backed complexes grow
// like (q-1)^depth, so fixed-width integers are not an option.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace lc
