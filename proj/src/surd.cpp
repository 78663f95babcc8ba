#include "lightchaos/surd.hpp"

#include <stdexcept>

namespace lightchaos {

void SurdSum::add(unsigned d, Rational coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(d, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [d, c] : o.coeffs_) add(d, c);
    return *this;
}

SurdSum SurdSum::scaled(const Rational& factor) const {
    SurdSum r;
    if (factor == 0) return r;
    for (const auto& [d, c] : coeffs_) r.add(d, c * factor);
    return r;
}

bool SurdSum::is_zero() const { return coeffs_.empty(); }

std::pair<Rational, Rational> sqrt_bounds(unsigned d, unsigned precision_bits) {
    // Newton iteration from above; lower bound is d / hi.
    Rational hi(d >= 1 ? d : 1);
    if (hi < 1) hi = 1;
    Rational target = rat_pow2(-static_cast<long>(precision_bits));
    Rational dd(d);
    Rational lo = dd / hi;
    while (hi - lo > target) {
        hi = (hi + dd / hi) / 2;
        lo = dd / hi;
    }
    return {lo, hi};
}

int SurdSum::sign() const {
    if (coeffs_.empty()) return 0;
    // Fast path: all terms share a sign (sqrt(d) > 0).
    bool all_pos = true, all_neg = true;
    for (const auto& [d, c] : coeffs_) {
        if (c > 0) all_neg = false;
        if (c < 0) all_pos = false;
    }
    if (all_pos) return 1;
    if (all_neg) return -1;

    for (unsigned bits = 16; bits <= 4096; bits *= 2) {
        Rational lo_sum = 0, hi_sum = 0;
        for (const auto& [d, c] : coeffs_) {
            if (d == 1) {
                lo_sum += c;
                hi_sum += c;
                continue;
            }
            auto [lo, hi] = sqrt_bounds(d, bits);
            if (c >= 0) {
                lo_sum += c * lo;
                hi_sum += c * hi;
            } else {
                lo_sum += c * hi;
                hi_sum += c * lo;
            }
        }
        if (lo_sum > 0) return 1;
        if (hi_sum < 0) return -1;
    }
    // Unreachable for independent radicands with nonzero coefficients.
    throw std::runtime_error("SurdSum::sign: enclosure did not separate from zero");
}

bool SurdSum::operator<(const SurdSum& o) const {
    SurdSum diff = o;
    for (const auto& [d, c] : coeffs_) diff.add(d, -c);
    return diff.sign() > 0;
}

bool SurdSum::operator>(const Rational& threshold) const {
    SurdSum diff = *this;
    diff.add(1, -threshold);
    return diff.sign() > 0;
}

}  // namespace lightchaos
