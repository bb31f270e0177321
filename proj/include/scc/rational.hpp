#ifndef SCC_RATIONAL_HPP
#define SCC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace scc {

// Exact rational scalar. Everything numeric in this library (graded lengths,
// curvature, parameter identities) is computed in Q; floating point never
// enters any checked identity.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(Integer(num), Integer(den));
}

// Accepts "p/q", plain integers, and terminating decimals ("0.25"), all exact.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when q == 1) form, matching parse_rational.
std::string rational_str(const Rational& q);

// Least integer >= q.
Integer rational_ceil(const Rational& q);

}  // namespace scc

#endif
