#include "lightchaos/points.hpp"

#include "lightchaos/stream_word.hpp"

#include <cmath>
#include <stdexcept>

namespace lightchaos {

double irrational_value(IrrationalMark mark) {
    switch (mark) {
        case IrrationalMark::None: return 0.0;
        case IrrationalMark::Golden: return 0.6180339887498948482;
    }
    return 0.0;
}

double CircleAngle::approx() const {
    double v = rat_to_double(base) + irr_mult * irrational_value(mark);
    v -= std::floor(v);
    return v;
}

std::string CircleAngle::str() const {
    std::string s = rat_str(base);
    if (irr_mult != 0) s += " + " + std::to_string(irr_mult) + "*alpha";
    return s;
}

int SeqPoint::coordinate(std::uint64_t n) const {
    if (n < prefix.size()) return prefix[static_cast<std::size_t>(n)];
    std::uint64_t m = n - prefix.size();
    switch (tail) {
        case Tail::Zeros: return 0;
        case Tail::Ones: return 1;
        case Tail::Stream: return stream_word::coordinate(stream_offset + m);
    }
    return 0;
}

SeqPoint SeqPoint::shifted() const {
    SeqPoint p = *this;
    if (!p.prefix.empty()) {
        p.prefix.erase(p.prefix.begin());
    } else if (p.tail == Tail::Stream) {
        ++p.stream_offset;
    }
    return p.canonical();
}

SeqPoint SeqPoint::canonical() const {
    SeqPoint p = *this;
    while (!p.prefix.empty()) {
        std::uint8_t last = p.prefix.back();
        if (p.tail == Tail::Zeros && last == 0) {
            p.prefix.pop_back();
        } else if (p.tail == Tail::Ones && last == 1) {
            p.prefix.pop_back();
        } else if (p.tail == Tail::Stream && p.stream_offset > 0 &&
                   stream_word::coordinate(p.stream_offset - 1) == last) {
            p.prefix.pop_back();
            --p.stream_offset;
        } else {
            break;
        }
    }
    return p;
}

bool SeqPoint::operator==(const SeqPoint& o) const {
    SeqPoint a = canonical(), b = o.canonical();
    return a.prefix == b.prefix && a.tail == b.tail &&
           (a.tail != Tail::Stream || a.stream_offset == b.stream_offset);
}

std::string SeqPoint::str() const {
    std::string s;
    for (auto c : prefix) s += c ? '1' : '0';
    switch (tail) {
        case Tail::Zeros: s += "0^w"; break;
        case Tail::Ones: s += "1^w"; break;
        case Tail::Stream: s += "s*[" + std::to_string(stream_offset) + ":]"; break;
    }
    return s;
}

std::optional<std::uint64_t> first_difference(const SeqPoint& a, const SeqPoint& b,
                                              std::uint64_t cap) {
    if (a == b) return std::nullopt;
    for (std::uint64_t n = 0; n < cap; ++n)
        if (a.coordinate(n) != b.coordinate(n)) return n;
    throw LookaheadExhausted();
}

PhasePoint PhasePoint::cone(CircleAngle theta, Rational t) {
    if (t < -1 || t > 1) throw std::domain_error("cone altitude outside [-1, 1]");
    PhasePoint p;
    p.kind = Kind::Cone;
    // vertices carry a canonical angle
    if (t == 1 || t == -1) theta = CircleAngle::exact(0);
    p.angle = std::move(theta);
    p.altitude = std::move(t);
    return p;
}

bool PhasePoint::is_exact() const {
    switch (kind) {
        case Kind::Real: return real.is_exact;
        case Kind::Circle: return angle.is_exact_rational();
        case Kind::Sequence: return true;
        case Kind::Cone: return angle.is_exact_rational();
    }
    return false;
}

bool PhasePoint::operator==(const PhasePoint& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Real:
            if (real.is_exact != o.real.is_exact) return false;
            return real.is_exact ? real.exact == o.real.exact : real.approx == o.real.approx;
        case Kind::Circle: return angle == o.angle;
        case Kind::Sequence: return seq == o.seq;
        case Kind::Cone: return angle == o.angle && altitude == o.altitude;
    }
    return false;
}

std::string PhasePoint::str() const {
    switch (kind) {
        case Kind::Real: return real.str();
        case Kind::Circle: return "angle " + angle.str();
        case Kind::Sequence: return seq.str();
        case Kind::Cone: return "(theta " + angle.str() + ", t " + rat_str(altitude) + ")";
    }
    return "?";
}

Vec3 cone_embedding(const PhasePoint& p) {
    if (p.kind != PhasePoint::Kind::Cone) throw std::domain_error("cone_embedding: not a cone point");
    double theta = p.angle.approx();
    double t = rat_to_double(p.altitude);
    double radius = 1.0 - std::fabs(t);
    return {radius * std::cos(2.0 * M_PI * theta), radius * std::sin(2.0 * M_PI * theta), t};
}

}  // namespace lightchaos
