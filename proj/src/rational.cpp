#include "lightchaos/rational.hpp"

#include <cctype>

namespace lightchaos {

Rational rat_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("rational with zero denominator: " + text);
        return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad rational literal: " + text);
        BigInt n(digits);
        BigInt d = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) d *= 10;
        return Rational(n, d);
    }
    return Rational(BigInt(s));
}

namespace {
std::size_t bits_of(const BigInt& n) {
    if (n == 0) return 1;
    return static_cast<std::size_t>(boost::multiprecision::msb(abs(n))) + 1;
}
}  // namespace

std::size_t rat_bits(const Rational& q) {
    return bits_of(numerator(q)) + bits_of(denominator(q));
}

}  // namespace lightchaos
