#pragma once

#include "lightchaos/interval_union.hpp"
#include "lightchaos/points.hpp"
#include "lightchaos/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lightchaos {

// Search budget. The paper-side quantifiers ("there exists k") carry no
// bounds; every detector works inside one of these and says so in its verdict.
struct Budget {
    unsigned k_max = 64;           // max iterate exponent searched
    unsigned p_max = 16;           // max period searched
    Rational epsilon = rat_pow2(-10);  // net resolution for probes
    unsigned samples = 10000;      // sampling-based probe size
    unsigned wall_clock_ms = 60000;
    std::size_t max_pl_knots = 1u << 20;

    Budget& with_k_max(unsigned k) {
        k_max = k;
        return *this;
    }
    Budget& with_p_max(unsigned p) {
        p_max = p;
        return *this;
    }
};

// Replayable evidence for a HOLDS verdict.
struct Witness {
    enum class Kind : std::uint8_t { Transitivity, Periodic, Sensitivity };
    Kind kind = Kind::Transitivity;
    std::string U_label, V_label;
    PhasePoint point;      // q with f^k(q) in V / periodic point / separated y
    PhasePoint aux_point;  // f^k(q) / unused / the base point x
    unsigned k = 0;        // witness exponent, or the period
    Scalar distance;       // sensitivity separation achieved
    bool approximate = false;
};

// Replayable evidence for a FAILS verdict.
struct Certificate {
    enum class Kind : std::uint8_t {
        AbsorbingSet,       // f(J) subset J, orbit enters J by `entry_bound`, J misses target
        RangeBound,         // image of the whole space misses the target
        PeriodicSetCharacterization,  // exact description of P(f) missing the target
        PointwiseBound,     // closed-form inequality beating every (y, k) below delta
    };
    Kind kind = Kind::RangeBound;
    std::string description;

    IntervalUnion trap;           // J / full-space image / periodic region
    IntervalUnion source_region;  // what enters the trap (absorbing sets)
    unsigned entry_bound = 0;

    std::string target_label;      // subbasic set the certificate separates from
    IntervalUnion target_region;   // exact realization when available

    std::vector<PhasePoint> finite_points;  // finite periodic-set characterizations

    PhasePoint base_x;        // pointwise bounds: the obstructing point
    std::string nbhd_label;   // and its subbasic neighborhood
    IntervalUnion nbhd_region;
    Rational bound_value;     // certified sup bound
    Rational delta;           // the threshold it stays below

    std::string argument;     // structural argument tag, replayed by kind
    bool resolution_independent = false;
    bool approximate = false;  // evidence-level (float probes were involved)
};

struct Verdict {
    enum class Kind : std::uint8_t { Holds, Fails, Unknown };
    Kind kind = Kind::Unknown;
    std::vector<Witness> witnesses;
    std::optional<Certificate> certificate;
    std::string unknown_reason;  // budget snapshot note for UNKNOWN
    bool approximate = false;
    std::string note;

    static Verdict holds(std::vector<Witness> ws, std::string note = "") {
        Verdict v;
        v.kind = Kind::Holds;
        v.witnesses = std::move(ws);
        v.note = std::move(note);
        for (const auto& w : v.witnesses) v.approximate = v.approximate || w.approximate;
        return v;
    }
    static Verdict fails(Certificate cert, std::string note = "") {
        Verdict v;
        v.kind = Kind::Fails;
        v.approximate = cert.approximate;
        v.certificate = std::move(cert);
        v.note = std::move(note);
        return v;
    }
    static Verdict unknown(std::string reason) {
        Verdict v;
        v.kind = Kind::Unknown;
        v.unknown_reason = std::move(reason);
        return v;
    }
    bool is_holds() const { return kind == Kind::Holds; }
    bool is_fails() const { return kind == Kind::Fails; }
    bool is_unknown() const { return kind == Kind::Unknown; }
};

inline std::string verdict_kind_str(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Holds: return "HOLDS";
        case Verdict::Kind::Fails: return "FAILS";
        case Verdict::Kind::Unknown: return "UNKNOWN";
    }
    return "?";
}

struct PeriodicRecord {
    PhasePoint point;
    unsigned period = 1;  // least period
};

}  // namespace lightchaos
