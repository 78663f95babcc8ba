#pragma once

#include "lightchaos/rational.hpp"

#include <cmath>
#include <string>

namespace lightchaos {

// A nonnegative-or-signed scalar that is either exact (rational) or a float
// probe value. Circle/cone metrics produce approximate values; everything on
// interval, line and sequence spaces stays exact.
struct Scalar {
    Rational exact;
    double approx = 0.0;
    bool is_exact = true;

    Scalar() = default;
    Scalar(Rational q) : exact(std::move(q)), approx(rat_to_double(exact)), is_exact(true) {}
    Scalar(long long n) : Scalar(Rational(n)) {}
    static Scalar approximate(double v) {
        Scalar s;
        s.is_exact = false;
        s.approx = v;
        return s;
    }

    double value() const { return is_exact ? rat_to_double(exact) : approx; }

    std::string str() const {
        if (is_exact) return rat_str(exact);
        return "~" + std::to_string(approx);
    }
};

inline bool scalar_geq(const Scalar& s, const Rational& threshold) {
    if (s.is_exact) return s.exact >= threshold;
    return s.approx >= rat_to_double(threshold);
}

}  // namespace lightchaos
