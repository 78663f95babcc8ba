#include "lightchaos/catalog_map.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace lightchaos {

namespace {

constexpr std::size_t kIterateBitCap = 1u << 20;

Rational expect_exact_real(const PhasePoint& p, const char* who) {
    if (p.kind != PhasePoint::Kind::Real || !p.real.is_exact)
        throw std::domain_error(std::string(who) + ": expected exact real point");
    return p.real.exact;
}

}  // namespace

PhasePoint map_eval(const CatalogMap& map, const PhasePoint& p) {
    switch (map.tag) {
        case CatalogMap::Tag::Negation: {
            if (p.kind != PhasePoint::Kind::Real) throw std::domain_error("negation: real point expected");
            if (p.real.is_exact) return PhasePoint::real_exact(-p.real.exact);
            return PhasePoint::real_approx(-p.real.approx);
        }
        case CatalogMap::Tag::AbsoluteValue: {
            if (p.kind != PhasePoint::Kind::Real) throw std::domain_error("abs: real point expected");
            if (p.real.is_exact) return PhasePoint::real_exact(rat_abs(p.real.exact));
            return PhasePoint::real_approx(std::fabs(p.real.approx));
        }
        case CatalogMap::Tag::Contraction: {
            Rational x = expect_exact_real(p, "contraction");
            if (x < -1 || x > 1) throw std::domain_error("contraction: point outside [-1, 1]");
            return PhasePoint::real_exact(x / (rat_abs(x) + 1));
        }
        case CatalogMap::Tag::CircleRotation: {
            if (p.kind != PhasePoint::Kind::Circle) throw std::domain_error("rotation: circle point expected");
            if (map.rotation_irr != IrrationalMark::None)
                return PhasePoint::circle(p.angle.advanced_by_irrational(map.rotation_irr, 1));
            return PhasePoint::circle(p.angle.advanced_by(map.rotation_angle));
        }
        case CatalogMap::Tag::Shift: {
            if (p.kind != PhasePoint::Kind::Sequence) throw std::domain_error("shift: sequence point expected");
            return PhasePoint::sequence(p.seq.shifted());
        }
        case CatalogMap::Tag::Glissorotation: {
            if (p.kind != PhasePoint::Kind::Cone) throw std::domain_error("glissorotation: cone point expected");
            return PhasePoint::cone(p.angle.advanced_by(map.gliss_angle()), -p.altitude);
        }
        case CatalogMap::Tag::Piecewise: {
            Rational x = expect_exact_real(p, "pl map");
            return PhasePoint::real_exact(map.pl.eval(x));
        }
    }
    throw std::domain_error("map_eval: unknown tag");
}

PhasePoint iterate_eval(const CatalogMap& map, std::uint64_t k, const PhasePoint& p) {
    if (k == 0) throw std::invalid_argument("iterate_eval: k must be >= 1");
    switch (map.tag) {
        case CatalogMap::Tag::Negation:
            return (k % 2 == 0) ? p : map_eval(map, p);
        case CatalogMap::Tag::AbsoluteValue:
            return map_eval(map, p);  // idempotent
        case CatalogMap::Tag::Contraction: {
            Rational y = expect_exact_real(p, "contraction");
            // closed form: f^k(y) = y / (k|y| + 1)
            return PhasePoint::real_exact(y / (Rational(BigInt(k)) * rat_abs(y) + 1));
        }
        case CatalogMap::Tag::CircleRotation: {
            if (p.kind != PhasePoint::Kind::Circle) throw std::domain_error("rotation: circle point expected");
            if (map.rotation_irr != IrrationalMark::None)
                return PhasePoint::circle(
                    p.angle.advanced_by_irrational(map.rotation_irr, static_cast<long long>(k)));
            return PhasePoint::circle(p.angle.advanced_by(map.rotation_angle * Rational(BigInt(k))));
        }
        case CatalogMap::Tag::Shift: {
            if (p.kind != PhasePoint::Kind::Sequence) throw std::domain_error("shift: sequence point expected");
            SeqPoint s = p.seq;
            std::uint64_t drop = std::min<std::uint64_t>(k, s.prefix.size());
            s.prefix.erase(s.prefix.begin(), s.prefix.begin() + static_cast<std::ptrdiff_t>(drop));
            if (s.tail == SeqPoint::Tail::Stream) s.stream_offset += (k - drop);
            return PhasePoint::sequence(s);
        }
        case CatalogMap::Tag::Glissorotation: {
            if (p.kind != PhasePoint::Kind::Cone) throw std::domain_error("glissorotation: cone point expected");
            Rational theta_shift = map.gliss_angle() * Rational(BigInt(k));
            Rational t = (k % 2 == 0) ? p.altitude : Rational(-p.altitude);
            return PhasePoint::cone(p.angle.advanced_by(theta_shift), t);
        }
        case CatalogMap::Tag::Piecewise: {
            PhasePoint q = p;
            for (std::uint64_t i = 0; i < k; ++i) {
                q = map_eval(map, q);
                if (rat_bits(q.real.exact) > kIterateBitCap)
                    throw BudgetExhausted("iterate_eval: coefficient size after " +
                                          std::to_string(i + 1) + " steps");
            }
            return q;
        }
    }
    throw std::domain_error("iterate_eval: unknown tag");
}

OrbitResult orbit(const CatalogMap& map, const PhasePoint& p, std::size_t n) {
    OrbitResult result;
    result.points.reserve(n + 1);
    result.points.push_back(p);
    std::map<std::string, std::size_t> seen;
    if (p.is_exact()) seen[p.str()] = 0;
    PhasePoint cur = p;
    for (std::size_t i = 1; i <= n; ++i) {
        cur = map_eval(map, cur);
        result.points.push_back(cur);
        if (!result.cycle_found && cur.is_exact()) {
            auto [it, inserted] = seen.try_emplace(cur.str(), i);
            if (!inserted) {
                result.cycle_found = true;
                result.cycle_start = it->second;
                result.cycle_period = i - it->second;
            }
        }
    }
    return result;
}

namespace {

Interval reflect(const Interval& iv) {
    Interval r;
    r.lo = iv.hi.finite() ? Endpoint::at(-iv.hi.value) : Endpoint::neg_inf();
    r.hi = iv.lo.finite() ? Endpoint::at(-iv.lo.value) : Endpoint::pos_inf();
    r.lo_closed = iv.hi_closed;
    r.hi_closed = iv.lo_closed;
    return r;
}

}  // namespace

IntervalUnion forward_image(const CatalogMap& map, const IntervalUnion& region) {
    switch (map.tag) {
        case CatalogMap::Tag::Piecewise:
            return map.pl.image(region);
        case CatalogMap::Tag::Negation: {
            IntervalUnion out;
            for (const auto& iv : region.parts()) out.push(reflect(iv));
            return out;
        }
        case CatalogMap::Tag::AbsoluteValue: {
            IntervalUnion out;
            Interval neg_half = Interval::left_ray(0, true);
            Interval pos_half = Interval::right_ray(0, true);
            for (const auto& iv : region.parts()) {
                if (auto lo_part = interval_intersection(iv, neg_half)) out.push(reflect(*lo_part));
                if (auto hi_part = interval_intersection(iv, pos_half)) out.push(*hi_part);
            }
            return out;
        }
        case CatalogMap::Tag::Contraction: {
            // strictly increasing on [-1, 1]
            auto f = [](const Rational& x) { return x / (rat_abs(x) + 1); };
            IntervalUnion out;
            for (const auto& iv : region.parts()) {
                if (!iv.lo.finite() || !iv.hi.finite())
                    throw std::domain_error("contraction image: unbounded region");
                Interval img{Endpoint::at(f(iv.lo.value)), Endpoint::at(f(iv.hi.value)),
                             iv.lo_closed, iv.hi_closed};
                out.push(img);
            }
            return out;
        }
        default:
            throw std::domain_error("forward_image: map does not act on interval regions");
    }
}

IntervalUnion forward_image_k(const CatalogMap& map, const IntervalUnion& region, unsigned k) {
    IntervalUnion cur = region;
    for (unsigned i = 0; i < k; ++i) cur = forward_image(map, cur);
    return cur;
}

std::optional<Rational> preimage_in(const CatalogMap& map, const Rational& y,
                                    const IntervalUnion& within) {
    switch (map.tag) {
        case CatalogMap::Tag::Piecewise: {
            IntervalUnion candidates = map.pl.preimage_of_value(y).intersect(within);
            if (candidates.empty()) return std::nullopt;
            return candidates.representative();
        }
        case CatalogMap::Tag::Negation: {
            Rational x = -y;
            if (within.contains(x)) return x;
            return std::nullopt;
        }
        case CatalogMap::Tag::AbsoluteValue: {
            if (y < 0) return std::nullopt;
            if (within.contains(y)) return y;
            Rational neg = -y;
            if (within.contains(neg)) return neg;
            return std::nullopt;
        }
        case CatalogMap::Tag::Contraction: {
            if (rat_abs(y) >= 1) return std::nullopt;
            Rational x = y / (Rational(1) - rat_abs(y));
            if (x >= -1 && x <= 1 && within.contains(x)) return x;
            return std::nullopt;
        }
        default:
            throw std::domain_error("preimage_in: map does not act on interval regions");
    }
}

PeriodicStructure periodic_structure(const CatalogMap& map) {
    PeriodicStructure s;
    switch (map.tag) {
        case CatalogMap::Tag::Negation:
            s.kind = PeriodicStructure::Kind::AllPeriodic;
            s.max_period = 2;
            s.argument = "involution: f(f(x)) = x for every x";
            return s;
        case CatalogMap::Tag::AbsoluteValue:
            s.kind = PeriodicStructure::Kind::Region;
            s.region = IntervalUnion(Interval::right_ray(0, true));
            s.argument =
                "idempotent: f^k = f for k >= 1, so x is periodic iff f(x) = x iff x >= 0";
            return s;
        case CatalogMap::Tag::Contraction:
            s.kind = PeriodicStructure::Kind::FiniteSet;
            s.points = {PhasePoint::real_exact(0)};
            s.argument =
                "|f^k(y)| = |y|/(k|y|+1) < |y| for y != 0, so only the fixed point 0 returns";
            return s;
        case CatalogMap::Tag::CircleRotation:
            if (map.rotation_irr != IrrationalMark::None) {
                s.kind = PeriodicStructure::Kind::Empty;
                s.argument = "irrational rotation: k*alpha mod 1 != 0 for every k >= 1";
            } else {
                s.kind = PeriodicStructure::Kind::AllPeriodic;
                s.max_period = static_cast<unsigned>(rat_den(map.rotation_angle).convert_to<unsigned long long>());
                s.argument = "rational rotation: q*alpha is an integer";
            }
            return s;
        case CatalogMap::Tag::Shift:
            s.kind = PeriodicStructure::Kind::FiniteSet;
            s.points = {PhasePoint::sequence(SeqPoint::constant(0)),
                        PhasePoint::sequence(SeqPoint::constant(1))};
            s.argument =
                "periodic shift points are periodic sequences; in S u O(s*) those are the two "
                "constant sequences (the stream is aperiodic)";
            return s;
        case CatalogMap::Tag::Glissorotation:
            s.kind = PeriodicStructure::Kind::AllPeriodic;
            s.max_period = static_cast<unsigned>(2 * map.gliss_q);
            s.argument = "closed form: f^(2q)(theta, t) = (theta + 2p, t) = (theta, t)";
            return s;
        case CatalogMap::Tag::Piecewise:
            s.kind = PeriodicStructure::Kind::Unknown;
            s.argument = "decided per exponent by the exact per-piece solver";
            return s;
    }
    return s;
}

bool map_nonexpansive(const CatalogMap& map) {
    switch (map.tag) {
        case CatalogMap::Tag::Negation:
        case CatalogMap::Tag::AbsoluteValue:
        case CatalogMap::Tag::Contraction:
        case CatalogMap::Tag::CircleRotation:
        case CatalogMap::Tag::Glissorotation:
            return true;
        case CatalogMap::Tag::Shift:
            return false;
        case CatalogMap::Tag::Piecewise:
            return map.pl.nonexpansive();
    }
    return false;
}

bool map_isometry(const CatalogMap& map) {
    switch (map.tag) {
        case CatalogMap::Tag::Negation:
        case CatalogMap::Tag::CircleRotation:
        case CatalogMap::Tag::Glissorotation:  // rotation composed with altitude reflection
            return true;
        case CatalogMap::Tag::Piecewise: {
            // affine with slope +-1
            auto ms = map.pl.slopes();
            return ms.size() == 1 && rat_abs(ms[0]) == 1;
        }
        default:
            return false;
    }
}

PLMap make_tent() {
    return PLMap::from_points({{0, 0}, {Rational(1, 2), 1}, {1, 0}});
}

PLMap make_truncated_tent() {
    return PLMap::from_points(
        {{0, 0}, {Rational(1, 4), Rational(1, 2)}, {Rational(3, 4), Rational(1, 2)}, {1, 0}});
}

PLMap make_f37() {
    return PLMap::from_points(
        {{0, 1}, {Rational(1, 4), Rational(1, 2)}, {Rational(3, 4), Rational(1, 2)}, {1, 1}});
}

namespace {

System pl_system(const std::string& tag, PLMap pl, Rational lo, Rational hi) {
    CatalogMap m;
    m.tag = CatalogMap::Tag::Piecewise;
    m.name = tag;
    m.pl = std::move(pl);
    return {tag, PhaseSpace::interval(std::move(lo), std::move(hi)), std::move(m)};
}

}  // namespace

System make_system(const std::string& tag) {
    if (tag == "tent") return pl_system(tag, make_tent(), 0, 1);
    if (tag == "truncated_tent") return pl_system(tag, make_truncated_tent(), 0, 1);
    if (tag == "f_3_7") return pl_system(tag, make_f37(), 0, 1);
    if (tag == "identity") return pl_system(tag, PLMap::identity(0, 1), 0, 1);
    if (tag == "negation_interval")
        return pl_system(tag, PLMap::from_points({{-2, 2}, {2, -2}}), -2, 2);
    if (tag == "negation") {
        CatalogMap m;
        m.tag = CatalogMap::Tag::Negation;
        m.name = tag;
        return {tag, PhaseSpace::real_line(), std::move(m)};
    }
    if (tag == "absolute_value") {
        CatalogMap m;
        m.tag = CatalogMap::Tag::AbsoluteValue;
        m.name = tag;
        return {tag, PhaseSpace::real_line(), std::move(m)};
    }
    if (tag == "contraction_3_6") {
        CatalogMap m;
        m.tag = CatalogMap::Tag::Contraction;
        m.name = tag;
        return {tag, PhaseSpace::interval(-1, 1), std::move(m)};
    }
    if (tag == "rotation_golden") {
        CatalogMap m;
        m.tag = CatalogMap::Tag::CircleRotation;
        m.name = tag;
        m.rotation_irr = IrrationalMark::Golden;
        return {tag, PhaseSpace::circle(), std::move(m)};
    }
    if (tag == "rotation_1_3") {
        CatalogMap m;
        m.tag = CatalogMap::Tag::CircleRotation;
        m.name = tag;
        m.rotation_angle = Rational(1, 3);
        return {tag, PhaseSpace::circle(), std::move(m)};
    }
    if (tag == "shift_subsystem") {
        CatalogMap m;
        m.tag = CatalogMap::Tag::Shift;
        m.name = tag;
        return {tag, PhaseSpace::shift_subsystem(), std::move(m)};
    }
    if (tag == "cantor_shift") {
        CatalogMap m;
        m.tag = CatalogMap::Tag::Shift;
        m.name = tag;
        return {tag, PhaseSpace::cantor(), std::move(m)};
    }
    if (tag == "gliss_1_3" || tag == "gliss_2_5") {
        CatalogMap m;
        m.tag = CatalogMap::Tag::Glissorotation;
        m.name = tag;
        m.gliss_p = (tag == "gliss_1_3") ? 1 : 2;
        m.gliss_q = (tag == "gliss_1_3") ? 3 : 5;
        return {tag, PhaseSpace::double_cone(), std::move(m)};
    }
    throw std::invalid_argument("unknown system tag: " + tag);
}

std::vector<std::string> system_tags() {
    return {"tent",          "truncated_tent", "f_3_7",           "identity",
            "negation",      "negation_interval", "absolute_value", "contraction_3_6",
            "rotation_golden", "rotation_1_3",  "shift_subsystem", "cantor_shift",
            "gliss_1_3",     "gliss_2_5"};
}

}  // namespace lightchaos
