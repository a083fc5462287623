#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "qspec/errors.hpp"
#include "qspec/instances.hpp"
#include "qspec/theorems.hpp"

using namespace qspec;

namespace {

const TheoremReport& find_report(const std::vector<TheoremReport>& reports,
                                 const std::string& id) {
    for (const TheoremReport& r : reports)
        if (r.id == id) return r;
    REQUIRE_MESSAGE(false, "no report for ", id);
    return reports.front();
}

int informative_true(const TheoremReport& r) {
    int n = 0;
    for (const ClauseReport& c : r.clauses)
        if (!c.vacuous && !c.skipped && c.holds) ++n;
    return n;
}

int informative_false(const TheoremReport& r) {
    int n = 0;
    for (const ClauseReport& c : r.clauses)
        if (!c.vacuous && !c.skipped && !c.holds) ++n;
    return n;
}

}  // namespace

TEST_CASE("registry ids are stable") {
    const std::vector<std::string>& ids = theorem_ids();
    CHECK(ids.size() == 27);
    CHECK(ids.front() == "P6.2");
    CHECK(ids.back() == "T8.22");
    for (const char* id : {"T6.8", "T7.9", "L7.12", "C7.14", "T8.14", "L8.17",
                           "C8.21"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
}

TEST_CASE("unknown theorem ids are rejected") {
    AnalysisContext ctx = make_context(chain_frame(3));
    CHECK_THROWS_AS((void)verify_theorem(ctx, "T9.99"), ParseError);
    CHECK_THROWS_AS((void)verify_theorem(ctx, ""), ParseError);
    CHECK_NOTHROW((void)verify_theorem(ctx, "P6.2"));
}

TEST_CASE("full registry on the ideals of Z/12") {
    AnalysisContext ctx = make_context(zn_ideals(12));
    std::vector<TheoremReport> reports = verify_all(ctx);
    REQUIRE(reports.size() == theorem_ids().size());
    for (std::size_t i = 0; i < reports.size(); ++i)
        CHECK(reports[i].id == theorem_ids()[i]);

    for (const TheoremReport& r : reports) {
        CHECK(r.verdict != TheoremVerdict::kMismatch);
        CHECK_FALSE(r.clauses.empty());
        if (r.verdict == TheoremVerdict::kNotApplicable)
            CHECK_FALSE(r.guard.empty());
        else
            CHECK(r.guard.empty());
    }

    // Z/12 is not semiprime, so the semiprime-only entries are guarded out,
    // with their clauses still evaluated and reported.
    for (const char* id : {"C8.4", "T8.8", "C8.21"}) {
        const TheoremReport& r = find_report(reports, id);
        CHECK(r.verdict == TheoremVerdict::kNotApplicable);
        CHECK(r.guard.find("semiprime") != std::string::npos);
        CHECK_FALSE(r.clauses.empty());
    }

    // Z/12 is hyperarchimedean: T6.8 verifies with every clause true.
    const TheoremReport& hyper = find_report(reports, "T6.8");
    CHECK(hyper.verdict == TheoremVerdict::kVerified);
    CHECK(informative_false(hyper) == 0);
    CHECK(informative_true(hyper) > 0);
}

TEST_CASE("equivalences verify through the all-false branch") {
    // F5 is not PF, so every informative clause of the PF characterization
    // must come out false, with witnesses attached.
    AnalysisContext ctx = make_context(fixtures::f5());
    TheoremReport r = verify_theorem(ctx, "T8.14");
    CHECK(r.shape == TheoremShape::kEquivalence);
    CHECK(r.verdict == TheoremVerdict::kVerified);
    CHECK(informative_true(r) == 0);
    CHECK(informative_false(r) > 0);
    bool some_witness = false;
    for (const ClauseReport& c : r.clauses)
        if (!c.holds && !c.witness.empty()) some_witness = true;
    CHECK(some_witness);
}

TEST_CASE("normality-guarded entries report not applicable") {
    AnalysisContext ctx = make_context(fixtures::non_normal_frame());
    for (const char* id : {"T7.9", "L7.12", "C7.14"}) {
        TheoremReport r = verify_theorem(ctx, id);
        CHECK(r.verdict == TheoremVerdict::kNotApplicable);
        CHECK(r.guard.find("normal") != std::string::npos);
        CHECK_FALSE(r.clauses.empty());
    }
    // The unguarded entries still run cleanly.
    for (const TheoremReport& r : verify_all(ctx))
        CHECK(r.verdict != TheoremVerdict::kMismatch);
}

TEST_CASE("vacuous clauses are exactly the compactness statements") {
    std::set<std::string> vacuous_ids;
    for (Quantale q : {zn_ideals(12), zn_ideals(30), Quantale(chain_frame(4)),
                       Quantale(fixtures::f5())}) {
        AnalysisContext ctx = make_context(std::move(q));
        for (const TheoremReport& r : verify_all(ctx))
            for (const ClauseReport& c : r.clauses)
                if (c.vacuous) {
                    vacuous_ids.insert(r.id);
                    CHECK(c.label.find("compact") != std::string::npos);
                    CHECK(c.holds);
                }
    }
    CHECK(vacuous_ids == std::set<std::string>{"T7.3", "P7.5", "T7.9", "T8.8"});
}

TEST_CASE("oversized retraction searches are skipped, not guessed") {
    // chain:8 x chain:8 has a 14-point spectrum, past the search cap.
    AnalysisContext ctx =
        make_context(product_quantale(chain_frame(8), chain_frame(8)));
    REQUIRE(ctx.sr.spec.size() > std::size_t(kMaxRetractionSearchPoints));
    int skipped = 0;
    for (const TheoremReport& r : verify_all(ctx)) {
        CHECK(r.verdict != TheoremVerdict::kMismatch);
        for (const ClauseReport& c : r.clauses)
            if (c.skipped) {
                ++skipped;
                CHECK_FALSE(c.witness.empty());
            }
    }
    CHECK(skipped > 0);

    // A small spectrum skips nothing.
    AnalysisContext small = make_context(zn_ideals(12));
    for (const TheoremReport& r : verify_all(small))
        for (const ClauseReport& c : r.clauses) CHECK_FALSE(c.skipped);
}

TEST_CASE("classify_all agrees with the context predicates") {
    for (Quantale q : {zn_ideals(36), Quantale(fixtures::f5()),
                       Quantale(fixtures::non_normal_frame()),
                       Quantale(boolean_frame(3))}) {
        AnalysisContext ctx = make_context(std::move(q));
        std::vector<TheoremReport> reports;
        ClassReport all = classify_all(ctx, &reports);
        CHECK(reports.size() == theorem_ids().size());
        CHECK(all.hyperarchimedean == ctx.classes.hyperarchimedean);
        CHECK(all.normal == ctx.classes.normal);
        CHECK(all.b_normal == ctx.classes.b_normal);
        CHECK(all.mp == ctx.classes.mp);
        CHECK(all.pf == ctx.classes.pf);
        CHECK(all.semiprime == ctx.classes.semiprime);
    }
}
