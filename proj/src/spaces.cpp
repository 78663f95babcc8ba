#include "lightchaos/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace lightchaos {

IntervalUnion PhaseSpace::full_region() const {
    switch (kind) {
        case Kind::Interval: return IntervalUnion(Interval::closed(lo, hi));
        case Kind::RealLine: return IntervalUnion(Interval::whole_line());
        default: throw std::domain_error("full_region: not a line-like space");
    }
}

bool PhaseSpace::contains(const PhasePoint& p) const {
    switch (kind) {
        case Kind::Interval:
            return p.kind == PhasePoint::Kind::Real && p.real.is_exact &&
                   p.real.exact >= lo && p.real.exact <= hi;
        case Kind::RealLine: return p.kind == PhasePoint::Kind::Real;
        case Kind::Circle: return p.kind == PhasePoint::Kind::Circle;
        case Kind::Cantor: return p.kind == PhasePoint::Kind::Sequence;
        case Kind::ShiftSubsystem:
            // eventually-constant sequences and shift-orbit points of s*
            return p.kind == PhasePoint::Kind::Sequence;
        case Kind::DoubleCone:
            return p.kind == PhasePoint::Kind::Cone && p.altitude >= -1 && p.altitude <= 1;
    }
    return false;
}

std::string PhaseSpace::str() const {
    switch (kind) {
        case Kind::Interval: return "[" + rat_str(lo) + ", " + rat_str(hi) + "]";
        case Kind::RealLine: return "R";
        case Kind::Circle: return "S1";
        case Kind::Cantor: return "{0,1}^N";
        case Kind::ShiftSubsystem: return "X = S u O(s*)";
        case Kind::DoubleCone: return "C+ u C-";
    }
    return "?";
}

namespace {

Scalar circle_metric(const CircleAngle& a, const CircleAngle& b) {
    if (a.irr_mult == b.irr_mult) {
        // symbolic parts cancel; arc distance is exact
        Rational d = rat_abs(rat_mod1(a.base - b.base));
        return Scalar(rat_min(d, Rational(1) - d));
    }
    double da = a.approx(), db = b.approx();
    double d = std::fabs(da - db);
    return Scalar::approximate(std::min(d, 1.0 - d));
}

}  // namespace

Scalar metric(const PhaseSpace& space, const PhasePoint& p, const PhasePoint& q) {
    switch (space.kind) {
        case PhaseSpace::Kind::Interval:
        case PhaseSpace::Kind::RealLine: {
            if (p.kind != PhasePoint::Kind::Real || q.kind != PhasePoint::Kind::Real)
                throw std::domain_error("metric: expected real points");
            if (p.real.is_exact && q.real.is_exact) return Scalar(rat_abs(p.real.exact - q.real.exact));
            return Scalar::approximate(std::fabs(p.real.value() - q.real.value()));
        }
        case PhaseSpace::Kind::Circle: {
            if (p.kind != PhasePoint::Kind::Circle || q.kind != PhasePoint::Kind::Circle)
                throw std::domain_error("metric: expected circle points");
            return circle_metric(p.angle, q.angle);
        }
        case PhaseSpace::Kind::Cantor:
        case PhaseSpace::Kind::ShiftSubsystem: {
            if (p.kind != PhasePoint::Kind::Sequence || q.kind != PhasePoint::Kind::Sequence)
                throw std::domain_error("metric: expected sequence points");
            auto diff = first_difference(p.seq, q.seq);
            if (!diff) return Scalar(Rational(0));
            return Scalar(rat_pow2(-static_cast<long>(*diff)));
        }
        case PhaseSpace::Kind::DoubleCone: {
            if (p.kind != PhasePoint::Kind::Cone || q.kind != PhasePoint::Kind::Cone)
                throw std::domain_error("metric: expected cone points");
            Vec3 a = cone_embedding(p), b = cone_embedding(q);
            double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
            return Scalar::approximate(std::sqrt(dx * dx + dy * dy + dz * dz));
        }
    }
    throw std::domain_error("metric: unknown space");
}

std::vector<PhasePoint> sample_grid(const PhaseSpace& space, int n) {
    std::vector<PhasePoint> out;
    out.reserve(static_cast<std::size_t>(n));
    switch (space.kind) {
        case PhaseSpace::Kind::Interval: {
            for (int i = 0; i < n; ++i)
                out.push_back(PhasePoint::real_exact(space.lo + (space.hi - space.lo) * Rational(i, n - 1 > 0 ? n - 1 : 1)));
            break;
        }
        case PhaseSpace::Kind::RealLine: {
            for (int i = 0; i < n; ++i)
                out.push_back(PhasePoint::real_exact(Rational(2 * i - (n - 1), 2)));
            break;
        }
        case PhaseSpace::Kind::Circle: {
            for (int i = 0; i < n; ++i) out.push_back(PhasePoint::circle(Rational(i, n)));
            break;
        }
        case PhaseSpace::Kind::Cantor:
        case PhaseSpace::Kind::ShiftSubsystem: {
            out.push_back(PhasePoint::sequence(SeqPoint::constant(0)));
            out.push_back(PhasePoint::sequence(SeqPoint::constant(1)));
            for (int i = 0; out.size() < static_cast<std::size_t>(n); ++i) {
                if (i % 2 == 0) {
                    std::vector<std::uint8_t> w;
                    for (int b = 0; b < 1 + i / 2; ++b) w.push_back(static_cast<std::uint8_t>((i >> b) & 1));
                    out.push_back(PhasePoint::sequence(SeqPoint::word_then_constant(w, i % 4 == 0)));
                } else {
                    out.push_back(PhasePoint::sequence(SeqPoint::stream(static_cast<std::uint64_t>(i))));
                }
            }
            break;
        }
        case PhaseSpace::Kind::DoubleCone: {
            int per_ring = 8;
            for (int i = 0; out.size() < static_cast<std::size_t>(n); ++i) {
                Rational t(((i / per_ring) % 9) - 4, 4);
                Rational theta(i % per_ring, per_ring);
                out.push_back(PhasePoint::cone(CircleAngle::exact(theta), t));
            }
            break;
        }
    }
    if (out.size() > static_cast<std::size_t>(n)) out.resize(static_cast<std::size_t>(n));
    return out;
}

}  // namespace lightchaos
