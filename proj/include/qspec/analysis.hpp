#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qspec/theorems.hpp"

namespace qspec {

/// One fully analyzed instance: the shared context plus the evaluated
/// registry entries that were asked for.
struct InstanceAnalysis {
    std::string name;
    AnalysisContext ctx;
    std::vector<TheoremReport> theorems;
    bool mismatch = false;
};

/// Build the context and evaluate the given registry ids (all of them when
/// `ids` is empty). Unknown ids throw ParseError before any work happens.
InstanceAnalysis analyze_instance(std::string name, Quantale q,
                                  const std::vector<std::string>& ids);

/// Human-readable report. `topology` appends the per-space property tables.
std::string render_text(const InstanceAnalysis& a, bool topology);

/// The same content as JSON with stable key order and a trailing newline,
/// so runs are byte-diffable.
std::string render_json(const InstanceAnalysis& a, bool topology);

/// Write <dir>/<name>-hasse.dot (element order) and <dir>/<name>-spec.dot
/// (spectrum specialization order). Unwritable paths throw ParseError.
void write_dot_files(const InstanceAnalysis& a, const std::string& dir);

/// Family selection for the batch battery. Families are any of "zn",
/// "chain", "downset", "product", "random"; product pairs up the generated
/// base instances (capped at kMaxElements per product).
struct BatteryOptions {
    std::vector<std::string> families;
    int zn_max = 100;
    int chain_max = 8;
    int poset_points_max = 5;
    int random_seeds = 200;
    std::uint64_t seed_base = 1;
};

/// Tallies from one battery run. Failures carry one line each; vacuous
/// clause counts are keyed by "<id> <clause label>".
struct BatterySummary {
    long instances = 0;
    std::map<std::string, long> family_counts;
    long law_failures = 0;
    long duality_failures = 0;
    long closure_failures = 0;
    long degeneracy_failures = 0;
    long reports = 0;
    long verified = 0;
    long not_applicable = 0;
    long mismatches = 0;
    long skipped_clauses = 0;
    long random_misses = 0;  ///< seeds whose table search found nothing
    double law_seconds = 0;  ///< time in generation, validation and laws
    std::map<std::string, long> vacuous_clauses;
    std::vector<std::string> failures;
    std::vector<std::string> degeneracies;  ///< finite-scale ledger, always emitted

    bool clean() const {
        return law_failures == 0 && duality_failures == 0 &&
               closure_failures == 0 && degeneracy_failures == 0 &&
               mismatches == 0;
    }
};

/// Run every check battery over the generated family: the law batteries, the
/// reticulation transport (order isomorphisms and the three topology
/// homeomorphisms), the open-family closure oracle, the full registry, and
/// the finite-scale degeneracy facts. Verdict failures are tallied, not
/// thrown; InternalCheckError propagates since it always means an engine bug.
BatterySummary run_battery(const BatteryOptions& opts,
                           std::ostream* progress = nullptr);

std::string render_summary(const BatterySummary& s);

}  // namespace qspec
