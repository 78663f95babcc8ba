#pragma once

#include "lightchaos/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lightchaos {

inline constexpr const char* kToolkitVersion = "0.1.0";

// One verifiable claim inside an experiment.
struct ExperimentCheck {
    std::string name;              // e.g. "light_transitivity"
    std::string expected;          // HOLDS | FAILS | UNKNOWN (computed expectation)
    std::string paper_anchor;      // short anchor quote
    bool flagged = false;          // known discrepancy: report both sides, never reconcile
    std::string paper_claim;       // what the source claims, when flagged
};

struct ExperimentSpec {
    std::string name;
    std::string title;
    std::string system;    // system tag ("tent", ...) or base tag for envelope runs
    std::string scheme;    // scheme tag
    int resolution = 4;
    Rational delta = 0;    // sensitivity threshold when applicable
    Budget budget;
    std::vector<ExperimentCheck> checks;
};

struct CheckOutcome {
    std::string check;
    std::string expected;
    std::string computed;  // HOLDS | FAILS | UNKNOWN
    bool match = false;
    bool flagged = false;
    std::string paper_anchor;
    std::string paper_claim;
    std::string note;
    std::string unknown_reason;
    bool approximate = false;
    std::vector<Witness> witnesses;        // structured, for in-process consumers
    std::vector<Certificate> certificates;
    std::vector<std::string> details;  // extra replayable facts, rendered verbatim
    // Serialized evidence rows (single-line JSON objects). These are what the
    // canonical report carries; parse_report_json restores them verbatim so
    // that render(parse(render(r))) is byte-identical.
    std::vector<std::string> witness_rows;
    std::vector<std::string> certificate_rows;
};

struct RunReport {
    std::string experiment;
    std::string title;
    std::string system;
    std::string scheme;
    int resolution = 0;
    std::string delta;
    std::uint64_t seed = 0;
    Budget budget;
    std::string version;
    std::vector<CheckOutcome> outcomes;
    std::vector<std::string> flags;  // discrepancy banners
    bool all_match = false;
    bool any_unknown = false;
    long long wall_clock_ms = 0;  // volatile; excluded from canonical bytes
};

struct RunConfig {
    std::uint64_t seed = 7;
    std::optional<unsigned> k_max;
    std::optional<unsigned> p_max;
    std::optional<Rational> epsilon;
    std::optional<Rational> delta;
    std::optional<int> resolution;
    std::string out_dir;
};

// Registry. Deterministic order; lookup of an unknown name throws
// std::out_of_range.
const std::vector<ExperimentSpec>& list_experiments();
const ExperimentSpec& find_experiment(const std::string& name);

RunReport run_experiment(const std::string& name, const RunConfig& config = {});

// Canonical JSON (stable key order, no volatile fields) or markdown.
std::string render_report_json(const RunReport& report);
std::string render_report_markdown(const RunReport& report);

// Round-trips render_report_json output; throws on malformed input.
RunReport parse_report_json(const std::string& bytes);

// 0: all expected verdicts match; 1: a decided verdict mismatches;
// 2: an UNKNOWN blocks the decision.
int verify_claims(const std::vector<RunReport>& reports);

// Flat key = value configuration file. Unknown keys are rejected.
RunConfig load_config_file(const std::string& path);

// Writes report.json, replay.json and report.md into dir (created if needed),
// atomically. Returns the report.json path.
std::string persist_report(const RunReport& report, const std::string& dir);

// Single-line JSON rows for ad-hoc report assembly (the registry runners use
// these internally).
std::string witness_row_json(const Witness& w, const std::string& check);
std::string certificate_row_json(const Certificate& c, const std::string& check);

}  // namespace lightchaos
