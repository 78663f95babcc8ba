#pragma once

#include "lightchaos/catalog_map.hpp"
#include "lightchaos/detectors.hpp"
#include "lightchaos/subbase.hpp"
#include "lightchaos/verdict.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace lightchaos {

// A point of the envelope phase space S(X): a constant map, an exact PL map,
// a lazily iterated image F_f^n(g) = f^n o g, or (on the circle) a PL lift
// carrying a symbolic irrational shift.
struct FunctionElement {
    enum class Kind : std::uint8_t { Constant, PL, Iterated, CircleLift };
    Kind kind = Kind::Constant;

    PhasePoint constant_value;               // Constant
    PLMap graph;                             // PL; CircleLift stores the lift graph
    long long lift_irr_mult = 0;             // CircleLift: + mult * alpha_irr
    std::shared_ptr<FunctionElement> base;   // Iterated
    unsigned power = 0;                      // Iterated: f^power o base
    std::string label;

    static FunctionElement constant(PhasePoint x);
    static FunctionElement pl(PLMap m, std::string label = "");
    static FunctionElement circle_lift(PLMap lift, long long irr_mult, std::string label = "");
    bool is_constant_map() const { return kind == Kind::Constant; }
    std::string str() const { return label; }
};

struct EnvelopeSystem {
    enum class Topology : std::uint8_t { CompactOpen, PointOpen, PointOpenOnA };
    System base;
    Topology topology = Topology::CompactOpen;

    static EnvelopeSystem over(System base_system,
                               Topology topo = Topology::CompactOpen) {
        return {std::move(base_system), topo};
    }
};

// --- elementary operations -------------------------------------------------

// The canonical isometric embedding x -> const_x of Proposition-style
// constant-map subsystems.
FunctionElement constant_embedding(const PhasePoint& x);

// F_f(g) = f o g. Constants stay constants; PL composes eagerly while the
// knot budget allows and otherwise normalizes to an iterated element.
FunctionElement apply_envelope(const EnvelopeSystem& env, const FunctionElement& g);
FunctionElement apply_envelope_k(const EnvelopeSystem& env, const FunctionElement& g, unsigned k);

// g(x), exact.
Rational eval_element(const EnvelopeSystem& env, const FunctionElement& g, const Rational& x);

// Exact image of the whole base domain under g.
IntervalUnion element_image(const EnvelopeSystem& env, const FunctionElement& g);

// sup-distance. Exact whenever both elements expand to PL graphs (or are
// constants / circle lifts with matching symbolic shifts); throws
// std::domain_error otherwise.
Scalar uniform_distance(const EnvelopeSystem& env, const FunctionElement& g,
                        const FunctionElement& h);

// g in [K, G] (or [{x}, G]): exact containment of g(K) in G.
bool co_member(const EnvelopeSystem& env, const FunctionElement& g, const SubbasicSet& S);

// --- constructive content of the equivalence theorem ------------------------

struct EnvelopeWitness {
    std::string A_label, B_label;
    FunctionElement start;  // constant element in A
    FunctionElement end;    // F_f^k(start), member of B
    unsigned k = 0;
    Rational base_start;    // q
    Rational base_end;      // f^k(q)
    IntervalUnion certified_intersection;  // f^k(U) cap V in the base space
};

std::optional<EnvelopeWitness> transitivity_witness(const EnvelopeSystem& env,
                                                    const SubbasicSet& A, const SubbasicSet& B,
                                                    const Budget& budget);
std::optional<Certificate> transitivity_witness_certificate(const EnvelopeSystem& env,
                                                            const SubbasicSet& A,
                                                            const SubbasicSet& B,
                                                            const Budget& budget);

struct EnvelopePeriodicWitness {
    std::string A_label;
    FunctionElement element;  // const_{x0}
    unsigned period = 0;
    Rational base_point;
};

std::optional<EnvelopePeriodicWitness> periodic_witness(const EnvelopeSystem& env,
                                                        const SubbasicSet& A,
                                                        const Budget& budget);
std::optional<Certificate> periodic_witness_certificate(const EnvelopeSystem& env,
                                                        const SubbasicSet& A,
                                                        const Budget& budget);

// Converse direction: a base-transitivity witness extracted from a point-open
// envelope witness, verified exactly.
struct BaseWitness {
    Rational start;
    unsigned k = 0;
    Rational end;
    IntervalUnion certified_intersection;
};
BaseWitness base_from_envelope(const EnvelopeSystem& env, const IntervalUnion& U,
                               const IntervalUnion& V, const Rational& x0,
                               const EnvelopeWitness& ew);

// Aggregate checks over a generated function-space family.
Verdict envelope_transitivity_check(const EnvelopeSystem& env,
                                    const std::vector<SubbasicSet>& family, const Budget& budget);
Verdict envelope_periodic_density_check(const EnvelopeSystem& env,
                                        const std::vector<SubbasicSet>& family,
                                        const Budget& budget);

// --- obstructions (no dense orbit) ------------------------------------------

struct ObstructionEvidence {
    enum class Argument : std::uint8_t { NoConstants, OrbitInForbiddenSet };
    Argument argument = Argument::NoConstants;
    std::vector<SubbasicSet> obstruction;  // finite intersection of co_sets
    FunctionElement obstruction_member;    // nonemptiness witness
    unsigned checked_n = 0;                // explicit replay depth
    // OrbitInForbiddenSet data
    PhasePoint periodic_point;             // p in the interior of g(I)
    std::vector<PhasePoint> orbit;         // O_f(p), exact cycle
    Rational preimage;                     // q with g(q) = p
    std::string note;
};

std::optional<ObstructionEvidence> no_dense_orbit_evidence(const EnvelopeSystem& env,
                                                           const FunctionElement& g,
                                                           const Budget& budget);

// Replays every F_f^j(g), j <= n, against the obstruction.
bool replay_obstruction(const EnvelopeSystem& env, const FunctionElement& g,
                        const ObstructionEvidence& ev, unsigned n);

// --- periodic scans and onto-stability --------------------------------------

struct ScanEntry {
    FunctionElement element;
    bool periodic = false;
    unsigned period = 0;
    bool constant = false;
    bool image_in_periodic_set = false;  // cross-check for periodic entries
};

std::vector<ScanEntry> envelope_periodic_scan(const EnvelopeSystem& env,
                                              const std::vector<FunctionElement>& family,
                                              unsigned k_max);

// Deterministic scan family: constants on a rational grid plus seeded PL
// interpolants with at most `max_knots` interior knots.
std::vector<FunctionElement> scan_family(const System& base, int grid, int max_knots,
                                         std::size_t count, std::uint64_t seed);

bool onto_check(const EnvelopeSystem& env, const FunctionElement& g);

struct OntoBallEvidence {
    unsigned samples = 0;
    unsigned onto_count = 0;
    double onto_fraction = 0.0;
    bool periodic_element_found = false;
    unsigned periodic_checked_up_to = 0;
    Rational epsilon;
};
OntoBallEvidence onto_ball_probe(const EnvelopeSystem& env, const Rational& epsilon,
                                 unsigned count, std::uint64_t seed, const Budget& budget);

// --- envelope sensitivity (the constructive example) ------------------------

struct EnvelopeSensitivityResult {
    FunctionElement h;
    unsigned n = 0;
    Rational separation;   // exact pointwise lower bound on the sup-distance
    Rational base_x0;
    Rational y0;
};

std::optional<EnvelopeSensitivityResult> envelope_sensitivity_probe(
    const EnvelopeSystem& env, const FunctionElement& g, const std::vector<SubbasicSet>& Ug,
    const Rational& delta, const Budget& budget);

}  // namespace lightchaos
