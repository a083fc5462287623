#pragma once

#include <string>
#include <vector>

#include "qspec/classify.hpp"
#include "qspec/reticulation.hpp"
#include "qspec/spectra.hpp"
#include "qspec/topology.hpp"

namespace qspec {

/// Retraction-existence clauses enumerate order-compatible maps from the
/// spectrum onto its maximal (or minimal) layer; past this many spectrum
/// points the enumeration is skipped and the clause reported as such.
inline constexpr int kMaxRetractionSearchPoints = 12;

/// One clause of a registry entry, evaluated at definition level on a
/// concrete instance. Compactness clauses are always true on finite spaces
/// and carry no information, so they are flagged vacuous and excluded from
/// the verdict; clauses that would require a search past the size cap are
/// flagged skipped and likewise excluded.
struct ClauseReport {
    std::string label;
    bool holds = false;
    bool vacuous = false;
    bool skipped = false;
    std::string witness;  ///< failure detail when !holds
};

/// How a registry entry combines its clauses.
enum class TheoremShape {
    kEquivalence,  ///< informative clauses must share one truth value
    kFact,         ///< every informative clause must hold outright
};

enum class TheoremVerdict {
    kVerified,       ///< the claim checks out on this instance
    kMismatch,       ///< clauses disagree: engine defect or statement defect
    kNotApplicable,  ///< the instance fails the entry's hypothesis
};

struct TheoremReport {
    std::string id;
    std::string title;
    TheoremShape shape = TheoremShape::kEquivalence;
    TheoremVerdict verdict = TheoremVerdict::kVerified;
    std::string guard;  ///< failed hypothesis when verdict is kNotApplicable
    std::vector<ClauseReport> clauses;
};

/// Everything the registry reads about one instance, computed once up front:
/// the spectrum, center, reticulation, the radical-element frame with its own
/// spectrum and center, the two interval quantales above the radical of
/// bottom and above the Jacobson element, the spectrum topologies, the
/// center spectrum, and the class predicates.
struct AnalysisContext {
    Quantale q;
    SpectrumReport sr;
    ElemSet center;
    Reticulation ret;
    RadicalFrame radical;
    ElemSet radical_center;
    SpectrumReport radical_sr;
    IntervalQuantale above_radical;
    ElemSet above_radical_center;
    SpectrumReport above_radical_sr;
    IntervalQuantale above_jacobson;
    ElemSet above_jacobson_center;
    SpectralTopologies top;
    PierceSpectrum pierce;
    ClassReport classes;
};

/// Build the context for a validated instance.
AnalysisContext make_context(Quantale q);

/// Registry ids in presentation order.
const std::vector<std::string>& theorem_ids();

/// Verify one registry entry. Unknown ids throw ParseError. A returned
/// kMismatch verdict is a reportable defect, never silently passed.
TheoremReport verify_theorem(const AnalysisContext& ctx, const std::string& id);

/// The whole registry, in theorem_ids() order.
std::vector<TheoremReport> verify_all(const AnalysisContext& ctx);

/// Class predicates plus the full registry. Fills `reports` when non-null.
/// Cross-predicate invariants that hold by verified theorems (pf forces
/// semiprime and mp; b-normal forces normal; hyperarchimedean forces normal
/// and mp) are re-checked here and throw InternalCheckError on violation.
/// Registry mismatches do not throw: they stay visible in the reports.
ClassReport classify_all(const AnalysisContext& ctx,
                         std::vector<TheoremReport>* reports = nullptr);

}  // namespace qspec
