#include "lightchaos/subbase.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lightchaos {

std::string CompactK::str() const {
    if (kind == Kind::ClosedInterval) return "[" + rat_str(lo) + "," + rat_str(hi) + "]";
    std::string s = "{";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) s += ",";
        s += rat_str(points[i]);
    }
    return s + "}";
}

SubbasicSet SubbasicSet::half_line_left(Rational a) {
    SubbasicSet s;
    s.kind = Kind::HalfLineLeft;
    s.a = std::move(a);
    s.label = "(-inf, " + rat_str(s.a) + ")";
    return s;
}

SubbasicSet SubbasicSet::half_line_right(Rational b) {
    SubbasicSet s;
    s.kind = Kind::HalfLineRight;
    s.b = std::move(b);
    s.label = "(" + rat_str(s.b) + ", +inf)";
    return s;
}

SubbasicSet SubbasicSet::end_low(Rational domain_lo, Rational a) {
    SubbasicSet s;
    s.kind = Kind::EndLow;
    s.b = std::move(domain_lo);
    s.a = std::move(a);
    s.label = "[" + rat_str(s.b) + ", " + rat_str(s.a) + ")";
    return s;
}

SubbasicSet SubbasicSet::end_high(Rational b, Rational domain_hi) {
    SubbasicSet s;
    s.kind = Kind::EndHigh;
    s.b = std::move(b);
    s.a = std::move(domain_hi);
    s.label = "(" + rat_str(s.b) + ", " + rat_str(s.a) + "]";
    return s;
}

SubbasicSet SubbasicSet::open_interval(Rational a, Rational b) {
    SubbasicSet s;
    s.kind = Kind::OpenInterval;
    s.a = std::move(a);
    s.b = std::move(b);
    s.label = "(" + rat_str(s.a) + ", " + rat_str(s.b) + ")";
    return s;
}

SubbasicSet SubbasicSet::cylinder(int index, int value) {
    SubbasicSet s;
    s.kind = Kind::Cylinder;
    s.cyl_index = index;
    s.cyl_value = value;
    s.label = "cyl[" + std::to_string(index) + "]=" + std::to_string(value);
    return s;
}

SubbasicSet SubbasicSet::prefix_cylinder(std::vector<std::uint8_t> w) {
    SubbasicSet s;
    s.kind = Kind::PrefixCylinder;
    s.word = std::move(w);
    s.label = "[";
    for (auto c : s.word) s.label += c ? '1' : '0';
    s.label += "]";
    return s;
}

SubbasicSet SubbasicSet::half_space(std::array<Rational, 3> n, Rational c) {
    SubbasicSet s;
    s.kind = Kind::HalfSpace;
    s.normal = std::move(n);
    s.offset = std::move(c);
    s.label = "{" + rat_str(s.normal[0]) + "x+" + rat_str(s.normal[1]) + "y+" +
              rat_str(s.normal[2]) + "z > " + rat_str(s.offset) + "}";
    return s;
}

SubbasicSet SubbasicSet::co_set(CompactK K, IntervalUnion G, bool on_circle) {
    SubbasicSet s;
    s.kind = Kind::CoSet;
    s.K = std::move(K);
    s.G = std::move(G);
    s.on_circle = on_circle;
    s.label = "[" + s.K.str() + "; " + s.G.str() + "]";
    return s;
}

SubbasicSet SubbasicSet::po_set(Rational x, IntervalUnion G, bool on_circle) {
    SubbasicSet s;
    s.kind = Kind::PoSet;
    s.po_x = std::move(x);
    s.G = std::move(G);
    s.on_circle = on_circle;
    s.label = "[{" + rat_str(s.po_x) + "}; " + s.G.str() + "]";
    return s;
}

SubbaseScheme::Tag scheme_tag_from_string(const std::string& name) {
    if (name == "half_lines") return SubbaseScheme::Tag::HalfLines;
    if (name == "endpoint_intervals") return SubbaseScheme::Tag::EndpointIntervals;
    if (name == "basic_intervals") return SubbaseScheme::Tag::BasicIntervals;
    if (name == "cylinders") return SubbaseScheme::Tag::Cylinders;
    if (name == "half_spaces") return SubbaseScheme::Tag::HalfSpaces;
    if (name == "compact_open") return SubbaseScheme::Tag::CompactOpen;
    if (name == "point_open") return SubbaseScheme::Tag::PointOpen;
    if (name == "point_open_on_A") return SubbaseScheme::Tag::PointOpenOnA;
    throw std::invalid_argument("unknown scheme tag: " + name);
}

std::string scheme_tag_to_string(SubbaseScheme::Tag tag) {
    switch (tag) {
        case SubbaseScheme::Tag::HalfLines: return "half_lines";
        case SubbaseScheme::Tag::EndpointIntervals: return "endpoint_intervals";
        case SubbaseScheme::Tag::BasicIntervals: return "basic_intervals";
        case SubbaseScheme::Tag::Cylinders: return "cylinders";
        case SubbaseScheme::Tag::HalfSpaces: return "half_spaces";
        case SubbaseScheme::Tag::CompactOpen: return "compact_open";
        case SubbaseScheme::Tag::PointOpen: return "point_open";
        case SubbaseScheme::Tag::PointOpenOnA: return "point_open_on_A";
    }
    return "?";
}

namespace {

// cos(2 pi k / 24) as an exact surd expression, index taken mod 24.
SurdSum surd_cos24(long long k) {
    k %= 24;
    if (k < 0) k += 24;
    if (k > 12) k = 24 - k;
    SurdSum s;
    switch (k) {
        case 0: s.add(1, 1); break;
        case 1: s.add(6, Rational(1, 4)); s.add(2, Rational(1, 4)); break;
        case 2: s.add(3, Rational(1, 2)); break;
        case 3: s.add(2, Rational(1, 2)); break;
        case 4: s.add(1, Rational(1, 2)); break;
        case 5: s.add(6, Rational(1, 4)); s.add(2, Rational(-1, 4)); break;
        case 6: break;
        case 7: s.add(6, Rational(-1, 4)); s.add(2, Rational(1, 4)); break;
        case 8: s.add(1, Rational(-1, 2)); break;
        case 9: s.add(2, Rational(-1, 2)); break;
        case 10: s.add(3, Rational(-1, 2)); break;
        case 11: s.add(6, Rational(-1, 4)); s.add(2, Rational(-1, 4)); break;
        case 12: s.add(1, -1); break;
    }
    return s;
}

SurdSum surd_sin24(long long k) { return surd_cos24(6 - k); }

// Lattice index of a rational angle when its denominator divides 24.
std::optional<long long> angle_lattice_index(const CircleAngle& angle) {
    if (angle.irr_mult != 0) return std::nullopt;
    Rational scaled = angle.base * 24;
    if (rat_den(scaled) != 1) return std::nullopt;
    return rat_num(scaled).convert_to<long long>();
}

}  // namespace

std::optional<SurdSum> halfspace_margin_exact(const SubbasicSet& set, const PhasePoint& p) {
    if (set.kind != SubbasicSet::Kind::HalfSpace || p.kind != PhasePoint::Kind::Cone)
        return std::nullopt;
    auto idx = angle_lattice_index(p.angle);
    if (!idx) return std::nullopt;
    Rational radius = Rational(1) - rat_abs(p.altitude);
    SurdSum margin;
    margin += surd_cos24(*idx).scaled(set.normal[0] * radius);
    margin += surd_sin24(*idx).scaled(set.normal[1] * radius);
    margin.add(1, set.normal[2] * p.altitude - set.offset);
    return margin;
}

std::optional<bool> contains_exact(const SubbasicSet& set, const PhasePoint& p) {
    switch (set.kind) {
        case SubbasicSet::Kind::HalfLineLeft:
            if (p.kind != PhasePoint::Kind::Real || !p.real.is_exact) return std::nullopt;
            return p.real.exact < set.a;
        case SubbasicSet::Kind::HalfLineRight:
            if (p.kind != PhasePoint::Kind::Real || !p.real.is_exact) return std::nullopt;
            return p.real.exact > set.b;
        case SubbasicSet::Kind::EndLow:
            if (p.kind != PhasePoint::Kind::Real || !p.real.is_exact) return std::nullopt;
            return p.real.exact >= set.b && p.real.exact < set.a;
        case SubbasicSet::Kind::EndHigh:
            if (p.kind != PhasePoint::Kind::Real || !p.real.is_exact) return std::nullopt;
            return p.real.exact > set.b && p.real.exact <= set.a;
        case SubbasicSet::Kind::OpenInterval:
            if (p.kind != PhasePoint::Kind::Real || !p.real.is_exact) return std::nullopt;
            return p.real.exact > set.a && p.real.exact < set.b;
        case SubbasicSet::Kind::Cylinder:
            if (p.kind != PhasePoint::Kind::Sequence) return std::nullopt;
            return p.seq.coordinate(static_cast<std::uint64_t>(set.cyl_index)) == set.cyl_value;
        case SubbasicSet::Kind::PrefixCylinder: {
            if (p.kind != PhasePoint::Kind::Sequence) return std::nullopt;
            for (std::size_t i = 0; i < set.word.size(); ++i)
                if (p.seq.coordinate(i) != set.word[i]) return false;
            return true;
        }
        case SubbasicSet::Kind::HalfSpace: {
            if (p.kind != PhasePoint::Kind::Cone) return std::nullopt;
            auto margin = halfspace_margin_exact(set, p);
            if (!margin) return std::nullopt;
            return margin->sign() > 0;
        }
        case SubbasicSet::Kind::CoSet:
        case SubbasicSet::Kind::PoSet:
            throw std::domain_error("contains: function-space set queried with a phase point");
    }
    return std::nullopt;
}

bool contains(const SubbasicSet& set, const PhasePoint& p) {
    if (auto exact = contains_exact(set, p)) return *exact;
    // float fallback, used by cone probes off the surd lattice
    if (set.kind == SubbasicSet::Kind::HalfSpace && p.kind == PhasePoint::Kind::Cone) {
        Vec3 v = cone_embedding(p);
        double m = rat_to_double(set.normal[0]) * v.x + rat_to_double(set.normal[1]) * v.y +
                   rat_to_double(set.normal[2]) * v.z - rat_to_double(set.offset);
        return m > 1e-12;
    }
    if (p.kind == PhasePoint::Kind::Real) {
        double x = p.real.value();
        switch (set.kind) {
            case SubbasicSet::Kind::HalfLineLeft: return x < rat_to_double(set.a);
            case SubbasicSet::Kind::HalfLineRight: return x > rat_to_double(set.b);
            case SubbasicSet::Kind::EndLow:
                return x >= rat_to_double(set.b) && x < rat_to_double(set.a);
            case SubbasicSet::Kind::EndHigh:
                return x > rat_to_double(set.b) && x <= rat_to_double(set.a);
            case SubbasicSet::Kind::OpenInterval:
                return x > rat_to_double(set.a) && x < rat_to_double(set.b);
            default: break;
        }
    }
    throw std::domain_error("contains: no membership rule for this set/point combination");
}

namespace {

std::vector<SubbasicSet> generate_interval_family(const PhaseSpace& space,
                                                  const SubbaseScheme& scheme) {
    std::vector<SubbasicSet> out;
    const Rational lo = space.lo, hi = space.hi;
    const Rational w = (hi - lo) / scheme.resolution;
    const int r = scheme.resolution;
    switch (scheme.tag) {
        case SubbaseScheme::Tag::EndpointIntervals: {
            for (int i = 1; i <= r; ++i) out.push_back(SubbasicSet::end_low(lo, lo + w * i));
            for (int i = 0; i < r; ++i) out.push_back(SubbasicSet::end_high(lo + w * i, hi));
            break;
        }
        case SubbaseScheme::Tag::BasicIntervals: {
            for (int i = 1; i <= r; ++i) out.push_back(SubbasicSet::end_low(lo, lo + w * i));
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j <= r; ++j)
                    out.push_back(SubbasicSet::open_interval(lo + w * i, lo + w * j));
            for (int i = 0; i < r; ++i) out.push_back(SubbasicSet::end_high(lo + w * i, hi));
            break;
        }
        default:
            throw std::invalid_argument("scheme not defined over an interval space");
    }
    return out;
}

std::vector<SubbasicSet> generate_line_family(const SubbaseScheme& scheme) {
    std::vector<SubbasicSet> out;
    const int r = scheme.resolution;
    switch (scheme.tag) {
        case SubbaseScheme::Tag::HalfLines: {
            for (int c = -(r - 1); c <= r - 1; ++c) {
                out.push_back(SubbasicSet::half_line_left(Rational(c)));
                out.push_back(SubbasicSet::half_line_right(Rational(c)));
            }
            break;
        }
        case SubbaseScheme::Tag::BasicIntervals: {
            // grid -r, -r + 2/r, ..., r
            std::vector<Rational> grid;
            for (int i = 0; i <= r * r; ++i) grid.push_back(Rational(-r) + Rational(2 * i, r));
            for (std::size_t i = 0; i < grid.size(); ++i)
                for (std::size_t j = i + 1; j < grid.size(); ++j)
                    out.push_back(SubbasicSet::open_interval(grid[i], grid[j]));
            break;
        }
        default:
            throw std::invalid_argument("scheme not defined over the real line");
    }
    return out;
}

std::vector<SubbasicSet> generate_sequence_family(const SubbaseScheme& scheme) {
    std::vector<SubbasicSet> out;
    const int r = scheme.resolution;
    switch (scheme.tag) {
        case SubbaseScheme::Tag::Cylinders: {
            for (int k = 0; k < r; ++k)
                for (int v = 0; v <= 1; ++v) out.push_back(SubbasicSet::cylinder(k, v));
            break;
        }
        case SubbaseScheme::Tag::BasicIntervals: {
            // basic sets of the product topology: prefix cylinders of length r
            for (std::uint64_t wbits = 0; wbits < (1ull << r); ++wbits) {
                std::vector<std::uint8_t> word;
                for (int b = r - 1; b >= 0; --b)
                    word.push_back(static_cast<std::uint8_t>((wbits >> b) & 1));
                out.push_back(SubbasicSet::prefix_cylinder(std::move(word)));
            }
            break;
        }
        default:
            throw std::invalid_argument("scheme not defined over a sequence space");
    }
    return out;
}

std::vector<SubbasicSet> generate_halfspace_family(const SubbaseScheme& scheme) {
    std::vector<SubbasicSet> out;
    const int r = scheme.resolution;
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
            for (int c = -r; c <= r; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                int g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
                if (g != 1) continue;  // dedup by direction
                int s = std::max({std::abs(a), std::abs(b), std::abs(c)});
                for (int oi = -1; oi <= 1; ++oi)
                    out.push_back(SubbasicSet::half_space(
                        {Rational(a), Rational(b), Rational(c)}, Rational(oi * s, 2)));
            }
    return out;
}

IntervalUnion arc_region(const Rational& from, const Rational& to) {
    // open arc (from, to) on [0,1), possibly wrapping
    Rational a = rat_mod1(from), b = rat_mod1(to);
    IntervalUnion g;
    if (a < b) {
        g.push(Interval::open(a, b));
    } else {
        g.push(Interval{Endpoint::at(a), Endpoint::at(1), false, false});
        g.push(Interval{Endpoint::at(0), Endpoint::at(b), true, false});
    }
    return g;
}

std::vector<SubbasicSet> generate_function_space_family(const PhaseSpace& base,
                                                        const SubbaseScheme& scheme) {
    std::vector<SubbasicSet> out;
    const int r = scheme.resolution;
    const bool circle = base.kind == PhaseSpace::Kind::Circle;
    const Rational lo = circle ? Rational(0) : base.lo;
    const Rational w = circle ? Rational(1, r) : (base.hi - base.lo) / r;

    std::vector<IntervalUnion> targets;
    if (circle) {
        for (int i = 0; i < r; ++i) targets.push_back(arc_region(w * i, w * (i + 2)));
    } else {
        for (int i = 0; i + 2 <= r; ++i)
            targets.push_back(IntervalUnion(Interval::open(lo + w * i, lo + w * (i + 2))));
        targets.push_back(IntervalUnion(Interval::open(lo, base.hi)));
    }

    if (scheme.tag == SubbaseScheme::Tag::CompactOpen) {
        std::vector<CompactK> compacts;
        for (int i = 0; i < r; ++i) {
            CompactK k = CompactK::closed_interval(lo + w * i, lo + w * (i + 1));
            k.on_circle = circle;
            compacts.push_back(std::move(k));
        }
        for (int i = 0; i <= (circle ? r - 1 : r); ++i) {
            CompactK k = CompactK::finite({rat_mod1(lo + w * i)});
            if (!circle) k.points = {lo + w * i};
            k.on_circle = circle;
            compacts.push_back(std::move(k));
        }
        for (const auto& K : compacts)
            for (const auto& G : targets) out.push_back(SubbasicSet::co_set(K, G, circle));
        return out;
    }
    if (scheme.tag == SubbaseScheme::Tag::PointOpen) {
        for (int i = 0; i <= (circle ? r - 1 : r); ++i)
            for (const auto& G : targets)
                out.push_back(SubbasicSet::po_set(circle ? rat_mod1(w * i) : lo + w * i, G, circle));
        return out;
    }
    // PointOpenOnA
    for (const auto& x : scheme.sample_A)
        for (const auto& G : targets) out.push_back(SubbasicSet::po_set(x, G, circle));
    return out;
}

}  // namespace

std::vector<SubbasicSet> generate_family(const PhaseSpace& space, const SubbaseScheme& scheme) {
    std::vector<SubbasicSet> out = scheme.pinned;
    std::vector<SubbasicSet> generated;
    switch (scheme.tag) {
        case SubbaseScheme::Tag::HalfLines:
            if (space.kind != PhaseSpace::Kind::RealLine)
                throw std::invalid_argument("half_lines requires the real line");
            generated = generate_line_family(scheme);
            break;
        case SubbaseScheme::Tag::EndpointIntervals:
            if (space.kind != PhaseSpace::Kind::Interval)
                throw std::invalid_argument("endpoint_intervals requires an interval space");
            generated = generate_interval_family(space, scheme);
            break;
        case SubbaseScheme::Tag::BasicIntervals:
            if (space.kind == PhaseSpace::Kind::Interval)
                generated = generate_interval_family(space, scheme);
            else if (space.kind == PhaseSpace::Kind::RealLine)
                generated = generate_line_family(scheme);
            else if (space.sequence_like())
                generated = generate_sequence_family(scheme);
            else
                throw std::invalid_argument("basic_intervals: unsupported space");
            break;
        case SubbaseScheme::Tag::Cylinders:
            if (!space.sequence_like())
                throw std::invalid_argument("cylinders require a sequence space");
            generated = generate_sequence_family(scheme);
            break;
        case SubbaseScheme::Tag::HalfSpaces:
            if (space.kind != PhaseSpace::Kind::DoubleCone)
                throw std::invalid_argument("half_spaces require the double cone");
            generated = generate_halfspace_family(scheme);
            break;
        case SubbaseScheme::Tag::CompactOpen:
        case SubbaseScheme::Tag::PointOpen:
        case SubbaseScheme::Tag::PointOpenOnA:
            generated = generate_function_space_family(space, scheme);
            break;
    }
    out.insert(out.end(), generated.begin(), generated.end());
    return out;
}

RegionOrNet realize_region(const SubbasicSet& set, const PhaseSpace& space) {
    RegionOrNet r;
    switch (set.kind) {
        case SubbasicSet::Kind::HalfLineLeft:
            r.exact = true;
            r.region = IntervalUnion(Interval::left_ray(set.a));
            return r;
        case SubbasicSet::Kind::HalfLineRight:
            r.exact = true;
            r.region = IntervalUnion(Interval::right_ray(set.b));
            return r;
        case SubbasicSet::Kind::EndLow:
            r.exact = true;
            r.region = IntervalUnion(Interval{Endpoint::at(set.b), Endpoint::at(set.a), true, false});
            return r;
        case SubbasicSet::Kind::EndHigh:
            r.exact = true;
            r.region = IntervalUnion(Interval{Endpoint::at(set.b), Endpoint::at(set.a), false, true});
            return r;
        case SubbasicSet::Kind::OpenInterval:
            r.exact = true;
            r.region = IntervalUnion(Interval::open(set.a, set.b));
            if (space.kind == PhaseSpace::Kind::Interval)
                r.region = r.region.intersect(space.full_region());
            return r;
        case SubbasicSet::Kind::Cylinder: {
            // depth-d prefix representatives with constant tails
            int depth = std::max(4, set.cyl_index + 2);
            for (std::uint64_t bits = 0; bits < (1ull << depth); ++bits) {
                std::vector<std::uint8_t> word;
                for (int b = depth - 1; b >= 0; --b)
                    word.push_back(static_cast<std::uint8_t>((bits >> b) & 1));
                if (word[static_cast<std::size_t>(set.cyl_index)] != set.cyl_value) continue;
                r.net.push_back(PhasePoint::sequence(SeqPoint::word_then_constant(word, 0)));
            }
            r.epsilon = std::pow(2.0, -depth);
            return r;
        }
        case SubbasicSet::Kind::PrefixCylinder: {
            r.net.push_back(PhasePoint::sequence(SeqPoint::word_then_constant(set.word, 0)));
            r.net.push_back(PhasePoint::sequence(SeqPoint::word_then_constant(set.word, 1)));
            r.epsilon = std::pow(2.0, -static_cast<double>(set.word.size()));
            return r;
        }
        case SubbasicSet::Kind::HalfSpace: {
            for (long long k = 0; k < 24; ++k) {
                for (int ti = -4; ti <= 4; ++ti) {
                    PhasePoint p = PhasePoint::cone(CircleAngle::exact(Rational(k, 24)),
                                                    Rational(ti, 4));
                    if (contains_exact(set, p).value_or(false)) r.net.push_back(p);
                }
            }
            r.epsilon = 0.27;  // max distance to the angle/altitude lattice
            return r;
        }
        case SubbasicSet::Kind::CoSet:
        case SubbasicSet::Kind::PoSet:
            throw std::domain_error("realize_region: function-space sets realize via the envelope");
    }
    return r;
}

bool meets(const SubbasicSet& set, const IntervalUnion& region, const PhaseSpace& space) {
    RegionOrNet r = realize_region(set, space);
    if (!r.exact) throw std::domain_error("meets: set has no exact realization");
    return r.region.meets(region);
}

PhasePoint family_witness(const SubbasicSet& set, const PhaseSpace& space) {
    switch (set.kind) {
        case SubbasicSet::Kind::HalfLineLeft:
        case SubbasicSet::Kind::HalfLineRight:
        case SubbasicSet::Kind::EndLow:
        case SubbasicSet::Kind::EndHigh:
        case SubbasicSet::Kind::OpenInterval: {
            RegionOrNet r = realize_region(set, space);
            return PhasePoint::real_exact(r.region.representative());
        }
        case SubbasicSet::Kind::Cylinder: {
            std::vector<std::uint8_t> word(static_cast<std::size_t>(set.cyl_index) + 1, 0);
            word.back() = static_cast<std::uint8_t>(set.cyl_value);
            return PhasePoint::sequence(SeqPoint::word_then_constant(word, 0));
        }
        case SubbasicSet::Kind::PrefixCylinder:
            return PhasePoint::sequence(SeqPoint::word_then_constant(set.word, 0));
        case SubbasicSet::Kind::HalfSpace: {
            RegionOrNet r = realize_region(set, space);
            if (r.net.empty()) throw std::domain_error("half-space with no lattice witness");
            return r.net.front();
        }
        case SubbasicSet::Kind::CoSet:
        case SubbasicSet::Kind::PoSet:
            throw std::domain_error("family_witness: function-space sets witness by constant maps");
    }
    throw std::domain_error("family_witness: unknown set kind");
}

}  // namespace lightchaos
