#pragma once

#include "lightchaos/rational.hpp"

#include <map>

namespace lightchaos {

// Exact sign computation for numbers of the form c0 + sum_d c_d * sqrt(d),
// with d ranging over distinct square-free integers > 1. Such a number is zero
// only when every coefficient is zero, so adaptive rational enclosures of the
// square roots always terminate with a sign.
class SurdSum {
  public:
    SurdSum() = default;
    explicit SurdSum(Rational rational_part) { add(1, std::move(rational_part)); }

    // Adds coeff * sqrt(d); d must be square-free (d = 1 means rational part).
    void add(unsigned d, Rational coeff);

    SurdSum& operator+=(const SurdSum& o);
    SurdSum scaled(const Rational& factor) const;

    bool is_zero() const;
    int sign() const;

    bool operator<(const SurdSum& o) const;
    bool operator>(const Rational& threshold) const;

  private:
    std::map<unsigned, Rational> coeffs_;  // keyed by radicand, 1 = rational
};

// Rational enclosure [lo, hi] of sqrt(d) with hi - lo <= 2^-precision_bits.
std::pair<Rational, Rational> sqrt_bounds(unsigned d, unsigned precision_bits);

}  // namespace lightchaos
