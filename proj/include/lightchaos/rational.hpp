#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lightchaos {

// Arbitrary-precision rational scalar. Always canonical: reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int rat_sign(const Rational& q) {
    if (q < 0) return -1;
    if (q > 0) return 1;
    return 0;
}

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a > b ? a : b; }

// Largest integer n with n <= q.
inline BigInt rat_floor(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

// q reduced into [0, 1).
inline Rational rat_mod1(const Rational& q) {
    Rational r = q - Rational(rat_floor(q));
    if (r < 0) r += 1;  // guard against any rounding-direction surprise
    if (r >= 1) r -= 1;
    return r;
}

inline Rational rat_pow2(long exponent) {
    BigInt p = 1;
    p <<= (exponent < 0 ? -exponent : exponent);
    return exponent >= 0 ? Rational(p) : Rational(1, p);
}

inline double rat_to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string rat_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "p", "p/q" or a plain decimal such as "0.1" (exactly, as 1/10).
Rational rat_parse(const std::string& text);

// Total bit size of numerator plus denominator; used for budget guards.
std::size_t rat_bits(const Rational& q);

}  // namespace lightchaos
