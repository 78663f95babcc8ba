#pragma once

#include "lightchaos/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lightchaos {

// Extended endpoint: finite rational, or +/- infinity (for half-lines on R).
struct Endpoint {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rational value;

    static Endpoint neg_inf() { return {Kind::NegInf, 0}; }
    static Endpoint pos_inf() { return {Kind::PosInf, 0}; }
    static Endpoint at(Rational q) { return {Kind::Finite, std::move(q)}; }

    bool finite() const { return kind == Kind::Finite; }
};

int endpoint_cmp(const Endpoint& a, const Endpoint& b);

// One interval with open/closed flags. Infinite endpoints are always open.
struct Interval {
    Endpoint lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;

    bool empty() const;
    bool degenerate() const;  // single point [a,a]
    bool contains(const Rational& x) const;
    std::string str() const;

    static Interval closed(Rational a, Rational b) {
        return {Endpoint::at(std::move(a)), Endpoint::at(std::move(b)), true, true};
    }
    static Interval open(Rational a, Rational b) {
        return {Endpoint::at(std::move(a)), Endpoint::at(std::move(b)), false, false};
    }
    static Interval point(Rational a) { return closed(a, a); }
    static Interval left_ray(Rational b, bool closed = false) {  // (-inf, b)
        return {Endpoint::neg_inf(), Endpoint::at(std::move(b)), false, closed};
    }
    static Interval right_ray(Rational a, bool closed = false) {  // (a, +inf)
        return {Endpoint::at(std::move(a)), Endpoint::pos_inf(), closed, false};
    }
    static Interval whole_line() { return {Endpoint::neg_inf(), Endpoint::pos_inf(), false, false}; }
};

std::optional<Interval> interval_intersection(const Interval& a, const Interval& b);

// Ordered union of pairwise-disjoint, non-mergeable intervals.
class IntervalUnion {
  public:
    IntervalUnion() = default;
    explicit IntervalUnion(Interval iv) { push(std::move(iv)); }
    explicit IntervalUnion(std::vector<Interval> ivs) {
        for (auto& iv : ivs) push(std::move(iv));
        normalize();
    }

    void push(Interval iv) {
        if (!iv.empty()) parts_.push_back(std::move(iv));
        dirty_ = true;
    }

    const std::vector<Interval>& parts() const {
        const_cast<IntervalUnion*>(this)->normalize();
        return parts_;
    }

    bool empty() const { return parts().empty(); }
    bool contains(const Rational& x) const;
    bool meets(const IntervalUnion& other) const;
    bool subset_of(const IntervalUnion& other) const;

    IntervalUnion unite(const IntervalUnion& other) const;
    IntervalUnion intersect(const IntervalUnion& other) const;
    // Complement within a closed domain interval.
    IntervalUnion complement_within(const Interval& domain) const;

    bool operator==(const IntervalUnion& other) const;

    // Diameter of the convex hull; nullopt when unbounded or empty-as-zero.
    std::optional<Rational> diameter() const;

    // A deterministic representative point of the union (midpoint-flavored,
    // always strictly inside open endpoints). Throws when empty.
    Rational representative() const;

    std::string str() const;

  private:
    void normalize();
    std::vector<Interval> parts_;
    bool dirty_ = false;
};

}  // namespace lightchaos
