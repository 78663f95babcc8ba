#pragma once

#include "lightchaos/interval_union.hpp"
#include "lightchaos/rational.hpp"

#include <utility>
#include <vector>

namespace lightchaos {

// Continuous piecewise-linear self-map of a closed rational interval, given by
// its breakpoint graph. Breakpoint abscissae are strictly increasing and the
// first/last ones are the domain endpoints. All arithmetic is exact.
class PLMap {
  public:
    using Knot = std::pair<Rational, Rational>;

    PLMap() = default;
    explicit PLMap(std::vector<Knot> knots);

    static PLMap from_points(std::initializer_list<Knot> knots) {
        return PLMap(std::vector<Knot>(knots));
    }
    static PLMap constant(Rational lo, Rational hi, Rational value);
    static PLMap identity(Rational lo, Rational hi);

    const std::vector<Knot>& knots() const { return knots_; }
    Rational domain_lo() const { return knots_.front().first; }
    Rational domain_hi() const { return knots_.back().first; }
    Interval domain() const { return Interval::closed(domain_lo(), domain_hi()); }
    std::size_t piece_count() const { return knots_.size() - 1; }

    Rational eval(const Rational& x) const;

    // Exact forward image. `region` must lie inside the domain.
    IntervalUnion image(const IntervalUnion& region) const;
    IntervalUnion image_of_domain() const { return image(IntervalUnion(domain())); }

    // All solutions of f(x) = y: isolated points plus full plateau intervals.
    IntervalUnion preimage_of_value(const Rational& y) const;

    // Fixed-point solutions of f(x) = x (isolated points; identity pieces
    // contribute their whole segment as an interval part).
    IntervalUnion fixed_points() const;

    // Drops interior knots that are collinear with their neighbors.
    PLMap canonical() const;

    bool operator==(const PLMap& other) const;

    // Slope of every linear piece, in order.
    std::vector<Rational> slopes() const;

    // True when |slope| <= 1 on every piece (hence globally 1-Lipschitz).
    bool nonexpansive() const;

    std::string str() const;

  private:
    std::size_t piece_for(const Rational& x) const;
    std::vector<Knot> knots_;
};

// Exact composition outer(inner(.)). Requires range(inner) inside domain(outer).
// Throws std::domain_error on range violation, std::length_error when the
// breakpoint count would exceed `max_knots`.
PLMap pl_compose(const PLMap& outer, const PLMap& inner, std::size_t max_knots = 1u << 22);

// k-fold self-composition.
PLMap pl_iterate(const PLMap& map, unsigned k, std::size_t max_knots = 1u << 22);

}  // namespace lightchaos
