#include "lightchaos/pl_map.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lightchaos {

PLMap::PLMap(std::vector<Knot> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) throw std::invalid_argument("PLMap needs at least two knots");
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (!(knots_[i - 1].first < knots_[i].first))
            throw std::invalid_argument("PLMap knot abscissae must be strictly increasing");
}

PLMap PLMap::constant(Rational lo, Rational hi, Rational value) {
    return PLMap({{std::move(lo), value}, {std::move(hi), value}});
}

PLMap PLMap::identity(Rational lo, Rational hi) {
    return PLMap({{lo, lo}, {hi, hi}});
}

std::size_t PLMap::piece_for(const Rational& x) const {
    // Largest i with knots_[i].x <= x (clamped to a valid piece index).
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                               [](const Rational& v, const Knot& k) { return v < k.first; });
    std::size_t idx = static_cast<std::size_t>(it - knots_.begin());
    if (idx == 0) throw std::domain_error("PLMap::eval: point below domain");
    if (idx >= knots_.size()) {
        if (x == knots_.back().first) return knots_.size() - 2;
        throw std::domain_error("PLMap::eval: point above domain");
    }
    return idx - 1;
}

Rational PLMap::eval(const Rational& x) const {
    std::size_t i = piece_for(x);
    const auto& [x0, y0] = knots_[i];
    const auto& [x1, y1] = knots_[i + 1];
    Rational m = (y1 - y0) / (x1 - x0);
    return y0 + m * (x - x0);
}

IntervalUnion PLMap::image(const IntervalUnion& region) const {
    IntervalUnion result;
    for (const auto& iv : region.parts()) {
        if (!iv.lo.finite() || !iv.hi.finite())
            throw std::domain_error("PLMap::image: unbounded region");
        if (iv.lo.value < domain_lo() || iv.hi.value > domain_hi())
            throw std::domain_error("PLMap::image: region outside domain");
        // Split at interior knots; split points are closed on both halves.
        std::vector<Rational> cuts{iv.lo.value};
        for (const auto& k : knots_)
            if (k.first > iv.lo.value && k.first < iv.hi.value) cuts.push_back(k.first);
        cuts.push_back(iv.hi.value);
        for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
            const Rational& a = cuts[s];
            const Rational& b = cuts[s + 1];
            bool a_cl = (s == 0) ? iv.lo_closed : true;
            bool b_cl = (s + 2 == cuts.size()) ? iv.hi_closed : true;
            if (a == b && !(a_cl && b_cl)) continue;
            Rational fa = eval(a), fb = eval(b);
            Interval out;
            if (fa < fb) {
                out = {Endpoint::at(fa), Endpoint::at(fb), a_cl, b_cl};
            } else if (fb < fa) {
                out = {Endpoint::at(fb), Endpoint::at(fa), b_cl, a_cl};
            } else {
                out = Interval::point(fa);  // constant piece
            }
            result.push(out);
        }
    }
    return result;
}

IntervalUnion PLMap::preimage_of_value(const Rational& y) const {
    IntervalUnion result;
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        const auto& [x0, y0] = knots_[i];
        const auto& [x1, y1] = knots_[i + 1];
        if (y0 == y1) {
            if (y == y0) result.push(Interval::closed(x0, x1));
            continue;
        }
        Rational m = (y1 - y0) / (x1 - x0);
        Rational x = x0 + (y - y0) / m;
        if (x >= x0 && x <= x1) result.push(Interval::point(x));
    }
    return result;
}

IntervalUnion PLMap::fixed_points() const {
    IntervalUnion result;
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        const auto& [x0, y0] = knots_[i];
        const auto& [x1, y1] = knots_[i + 1];
        Rational m = (y1 - y0) / (x1 - x0);
        if (m == 1) {
            if (y0 == x0) result.push(Interval::closed(x0, x1));
            continue;
        }
        // f(x) - x = (y0 - x0) + (m - 1)(x - x0)
        Rational x = x0 + (x0 - y0) / (m - 1);
        if (x >= x0 && x <= x1) result.push(Interval::point(x));
    }
    return result;
}

PLMap PLMap::canonical() const {
    std::vector<Knot> out;
    out.push_back(knots_.front());
    for (std::size_t i = 1; i + 1 < knots_.size(); ++i) {
        const auto& [xa, ya] = out.back();
        const auto& [xb, yb] = knots_[i];
        const auto& [xc, yc] = knots_[i + 1];
        // keep (xb,yb) unless collinear with neighbors
        if ((yb - ya) * (xc - xb) != (yc - yb) * (xb - xa)) out.push_back(knots_[i]);
    }
    out.push_back(knots_.back());
    return PLMap(std::move(out));
}

bool PLMap::operator==(const PLMap& other) const {
    return canonical().knots() == other.canonical().knots();
}

std::vector<Rational> PLMap::slopes() const {
    std::vector<Rational> out;
    out.reserve(piece_count());
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
        out.push_back((knots_[i + 1].second - knots_[i].second) /
                      (knots_[i + 1].first - knots_[i].first));
    return out;
}

bool PLMap::nonexpansive() const {
    for (const auto& m : slopes())
        if (rat_abs(m) > 1) return false;
    return true;
}

std::string PLMap::str() const {
    std::string s = "PL[";
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (i) s += ", ";
        s += "(" + rat_str(knots_[i].first) + "," + rat_str(knots_[i].second) + ")";
    }
    return s + "]";
}

PLMap pl_compose(const PLMap& outer, const PLMap& inner, std::size_t max_knots) {
    IntervalUnion range = inner.image_of_domain();
    if (!range.subset_of(IntervalUnion(outer.domain())))
        throw std::domain_error("pl_compose: inner range leaves outer domain");

    std::set<Rational> xs;
    for (const auto& k : inner.knots()) xs.insert(k.first);
    for (const auto& k : outer.knots()) {
        IntervalUnion pre = inner.preimage_of_value(k.first);
        for (const auto& iv : pre.parts()) {
            // plateau preimages need no interior splits; endpoints suffice
            xs.insert(iv.lo.value);
            xs.insert(iv.hi.value);
        }
    }
    if (xs.size() > max_knots) throw std::length_error("pl_compose: knot budget exceeded");

    std::vector<PLMap::Knot> knots;
    knots.reserve(xs.size());
    for (const auto& x : xs) knots.emplace_back(x, outer.eval(inner.eval(x)));
    return PLMap(std::move(knots)).canonical();
}

PLMap pl_iterate(const PLMap& map, unsigned k, std::size_t max_knots) {
    if (k == 0) return PLMap::identity(map.domain_lo(), map.domain_hi());
    PLMap acc = map;
    for (unsigned i = 1; i < k; ++i) acc = pl_compose(map, acc, max_knots);
    return acc;
}

}  // namespace lightchaos
