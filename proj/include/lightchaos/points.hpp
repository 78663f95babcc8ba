#pragma once

#include "lightchaos/rational.hpp"
#include "lightchaos/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lightchaos {

// Symbolic marker for an irrational rotation angle. The only contract used is
// k * alpha mod 1 != 0 for every k >= 1.
enum class IrrationalMark : std::uint8_t { None = 0, Golden = 1 };

double irrational_value(IrrationalMark mark);

// Angle on the unit circle: base + mult * alpha_irr (mod 1), with rational
// base in [0,1). Purely rational angles have mark None and mult 0.
struct CircleAngle {
    Rational base;
    long long irr_mult = 0;
    IrrationalMark mark = IrrationalMark::None;

    static CircleAngle exact(Rational b) { return {rat_mod1(std::move(b)), 0, IrrationalMark::None}; }

    CircleAngle advanced_by(const Rational& delta) const {
        return {rat_mod1(base + delta), irr_mult, mark};
    }
    CircleAngle advanced_by_irrational(IrrationalMark m, long long times) const {
        return {base, irr_mult + times, m};
    }

    bool is_exact_rational() const { return mark == IrrationalMark::None || irr_mult == 0; }
    double approx() const;
    bool operator==(const CircleAngle& o) const {
        return base == o.base && irr_mult == o.irr_mult &&
               (irr_mult == 0 || mark == o.mark);
    }
    std::string str() const;
};

// Point of the sequence spaces: finite prefix plus a tail descriptor. Every
// coordinate is computable on demand; see stream_word for the transitive tail.
struct SeqPoint {
    enum class Tail : std::uint8_t { Zeros, Ones, Stream };
    std::vector<std::uint8_t> prefix;
    Tail tail = Tail::Zeros;
    std::uint64_t stream_offset = 0;

    int coordinate(std::uint64_t n) const;
    SeqPoint shifted() const;  // image under the one-sided shift
    SeqPoint canonical() const;
    bool eventually_constant() const { return tail != Tail::Stream; }
    bool operator==(const SeqPoint& o) const;
    std::string str() const;

    static SeqPoint constant(int value) {
        SeqPoint p;
        p.tail = value ? Tail::Ones : Tail::Zeros;
        return p;
    }
    static SeqPoint stream(std::uint64_t offset) {
        SeqPoint p;
        p.tail = Tail::Stream;
        p.stream_offset = offset;
        return p;
    }
    static SeqPoint word_then_constant(std::vector<std::uint8_t> w, int value) {
        SeqPoint p;
        p.prefix = std::move(w);
        p.tail = value ? Tail::Ones : Tail::Zeros;
        return p.canonical();
    }
};

// First index where the two sequences differ, searched up to `cap`.
// nullopt when the points agree (exactly, decided structurally).
// Throws LookaheadExhausted when the cap is hit without a decision.
struct LookaheadExhausted : std::runtime_error {
    LookaheadExhausted() : std::runtime_error("sequence lookahead cap exhausted") {}
};
std::optional<std::uint64_t> first_difference(const SeqPoint& a, const SeqPoint& b,
                                              std::uint64_t cap = 1u << 16);

// A point of any catalog phase space.
struct PhasePoint {
    enum class Kind : std::uint8_t { Real, Circle, Sequence, Cone };
    Kind kind = Kind::Real;

    Scalar real;        // Kind::Real
    CircleAngle angle;  // Kind::Circle and Kind::Cone
    Rational altitude;  // Kind::Cone, in [-1, 1]
    SeqPoint seq;       // Kind::Sequence

    static PhasePoint real_exact(Rational q) {
        PhasePoint p;
        p.kind = Kind::Real;
        p.real = Scalar(std::move(q));
        return p;
    }
    static PhasePoint real_approx(double v) {
        PhasePoint p;
        p.kind = Kind::Real;
        p.real = Scalar::approximate(v);
        return p;
    }
    static PhasePoint circle(CircleAngle a) {
        PhasePoint p;
        p.kind = Kind::Circle;
        p.angle = std::move(a);
        return p;
    }
    static PhasePoint circle(Rational a) { return circle(CircleAngle::exact(std::move(a))); }
    static PhasePoint sequence(SeqPoint s) {
        PhasePoint p;
        p.kind = Kind::Sequence;
        p.seq = s.canonical();
        return p;
    }
    static PhasePoint cone(CircleAngle theta, Rational t);

    bool is_exact() const;
    // Exact equality. Sequence comparison is structural on canonical forms.
    bool operator==(const PhasePoint& o) const;
    std::string str() const;
};

// R^3 embedding of a cone point, as doubles (probe use only).
struct Vec3 {
    double x, y, z;
};
Vec3 cone_embedding(const PhasePoint& p);

}  // namespace lightchaos
