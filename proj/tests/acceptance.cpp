// Acceptance battery: the six shipping criteria, one pass/fail line each.
// Exits nonzero when any criterion fails. Run from the repository root so
// the reference documents under data/ resolve.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qspec/analysis.hpp"
#include "qspec/document.hpp"
#include "qspec/instances.hpp"

using namespace qspec;

namespace {

constexpr double kLawBudgetSeconds = 120.0;

struct Checker {
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    std::string detail() const {
        std::string out;
        for (std::size_t i = 0; i < problems.size() && i < 3; ++i)
            out += (i ? "; " : "") + problems[i];
        if (problems.size() > 3)
            out += "; +" + std::to_string(problems.size() - 3) + " more";
        return out;
    }
};

std::vector<std::string> labels_of(const Quantale& q,
                                   const std::vector<Elem>& elems) {
    std::vector<std::string> out;
    for (Elem e : elems) out.push_back(q.label(e));
    return out;
}

std::vector<std::string> sorted_labels(const Quantale& q, const ElemSet& mask) {
    std::vector<std::string> out;
    for (Elem e = 0; e < q.size(); ++e)
        if (mask.test(e)) out.push_back(q.label(e));
    return out;
}

bool same_tables(const Quantale& a, const Quantale& b) {
    if (a.size() != b.size()) return false;
    for (Elem x = 0; x < a.size(); ++x) {
        if (a.label(x) != b.label(x)) return false;
        for (Elem y = 0; y < a.size(); ++y)
            if (a.leq(x, y) != b.leq(x, y) || a.mul(x, y) != b.mul(x, y))
                return false;
    }
    return true;
}

/// Criterion 4: the reference goldens, re-derived with the definitional
/// oracles and pinned to frozen literals, against the engine's own answers.
Checker check_goldens() {
    Checker c;
    using SV = std::vector<std::string>;

    {  // Ideals of Z/12.
        Quantale q = zn_ideals(12);
        c.expect(same_tables(q, load_document("data/z12.json").q),
                 "z12 document disagrees with the generator");

        std::vector<Elem> primes = oracle::naive_m_primes(q);
        c.expect(labels_of(q, primes) == SV{"2Z", "3Z"}, "z12 spectrum");
        SpectrumReport sr = compute_spectra(q);
        c.expect(sr.spec == primes, "z12 engine spectrum");
        c.expect(sr.max_elems == primes && sr.min_elems == primes,
                 "z12 max/min layers");

        Elem rho0 = oracle::naive_radical(q, q.bottom(), primes);
        c.expect(q.label(rho0) == "6Z", "z12 radical of bottom");
        c.expect(sr.radical_map[q.bottom()] == rho0 && !sr.semiprime,
                 "z12 engine radical");

        std::vector<Elem> comp = oracle::naive_complemented(q.lattice());
        c.expect(labels_of(q, comp) == SV{"1Z", "3Z", "4Z", "12Z"},
                 "z12 boolean center");
        c.expect(sorted_labels(q, boolean_center(q)) == labels_of(q, comp),
                 "z12 engine center");

        // Reticulation: four radical classes forming a Boolean lattice.
        std::set<Elem> radicals;
        for (Elem a = 0; a < q.size(); ++a)
            radicals.insert(oracle::naive_radical(q, a, primes));
        c.expect(radicals.size() == 4, "z12 radical class count");
        Reticulation ret = build_reticulation(q, sr);
        c.expect(ret.lat.size() == 4, "z12 reticulation size");
        c.expect(oracle::naive_complemented(ret.lat).size() == 4,
                 "z12 reticulation not boolean");

        // Pierce points: maximal proper joins of complemented elements.
        std::set<Elem> regular;
        for (std::size_t pick = 0; pick < (std::size_t(1) << comp.size());
             ++pick) {
            Elem j = q.bottom();
            for (std::size_t i = 0; i < comp.size(); ++i)
                if (pick >> i & 1) j = q.join(j, comp[i]);
            regular.insert(j);
        }
        std::vector<Elem> pierce_points;
        for (Elem r : regular) {
            if (r == q.top()) continue;
            bool maximal = true;
            for (Elem o : regular)
                if (o != r && o != q.top() && q.leq(r, o)) maximal = false;
            if (maximal) pierce_points.push_back(r);
        }
        c.expect(labels_of(q, pierce_points) == SV{"3Z", "4Z"},
                 "z12 pierce points");
        SpectralTopologies top = build_topologies(q, sr);
        PierceSpectrum pc = build_pierce(q, sr, boolean_center(q), top);
        c.expect(labels_of(q, pc.points) == SV{"3Z", "4Z"},
                 "z12 engine pierce points");

        ClassReport r = classify_basic(q, sr, boolean_center(q));
        c.expect(oracle::naive_hyperarchimedean(q) && r.hyperarchimedean,
                 "z12 hyperarchimedean flag");
        c.expect(oracle::naive_normal(q) && r.normal, "z12 normal flag");
        c.expect(oracle::naive_mp(q) && r.mp, "z12 mp flag");
        c.expect(!oracle::naive_pf(q) && !r.pf, "z12 pf flag");
    }

    {  // The five-element frame.
        Quantale q = fixtures::f5();
        std::vector<Elem> primes = oracle::naive_m_primes(q);
        c.expect(labels_of(q, primes) == SV{"a", "b", "c"}, "f5 spectrum");
        SpectrumReport sr = compute_spectra(q);
        c.expect(sr.spec == primes, "f5 engine spectrum");
        c.expect(labels_of(q, sr.max_elems) == SV{"c"}, "f5 max layer");
        c.expect(labels_of(q, sr.min_elems) == SV{"a", "b"}, "f5 min layer");
        c.expect(oracle::naive_radical(q, q.bottom(), primes) == q.bottom() &&
                     sr.semiprime,
                 "f5 semiprime");
        c.expect(build_reticulation(q, sr).lat.size() == 5,
                 "f5 reticulation size");

        // D(a) = {b}: the only prime not above a.
        Elem a = 1;
        std::vector<std::string> d_of_a;
        for (Elem p : primes)
            if (!q.leq(a, p)) d_of_a.push_back(q.label(p));
        c.expect(d_of_a == SV{"b"}, "f5 D(a) oracle");
        SpectralTopologies top = build_topologies(q, sr);
        PointSet expect_mask = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (!q.leq(a, primes[i])) expect_mask |= PointSet(1) << i;
        c.expect(top.d_mask[a] == expect_mask, "f5 engine D(a)");

        ClassReport r = classify_basic(q, sr, boolean_center(q));
        c.expect(!oracle::naive_hyperarchimedean(q) && !r.hyperarchimedean,
                 "f5 hyperarchimedean flag");
        c.expect(oracle::naive_normal(q) && r.normal, "f5 normal flag");
        c.expect(!oracle::naive_mp(q) && !r.mp, "f5 mp flag");
        c.expect(!oracle::naive_pf(q) && !r.pf, "f5 pf flag");
        c.expect(r.mp_witness.find("c") != std::string::npos,
                 "f5 mp witness names c");
    }
    return c;
}

/// Criterion 5 spot check, independent of the battery: flat closures from
/// the spectrum order alone, on every subset.
Checker check_flat_closures() {
    Checker c;
    for (Quantale q : {Quantale(fixtures::f5()), zn_ideals(30),
                       Quantale(chain_frame(6))}) {
        SpectrumReport sr = compute_spectra(q);
        SpectralTopologies top = build_topologies(q, sr);
        const int np = int(sr.spec.size());
        for (PointSet s = 0; s < (PointSet(1) << np); ++s) {
            PointSet expect = 0;
            for (int i = 0; i < np; ++i)
                if (s >> i & 1)
                    for (int r = 0; r < np; ++r)
                        if (q.leq(sr.spec[r], sr.spec[i]))
                            expect |= PointSet(1) << r;
            if (closure(top.flat, s) != expect) {
                c.expect(false, "flat closure mismatch at mask " +
                                    std::to_string(s));
                break;
            }
        }
    }
    return c;
}

void report(int number, const std::string& name, bool ok,
            const std::string& detail) {
    std::cout << "criterion " << number << " (" << name << "): "
              << (ok ? "PASS" : "FAIL")
              << (detail.empty() ? "" : " -- " + detail) << "\n";
}

}  // namespace

int main() {
    std::cout << "acceptance battery over the full generated family\n";
    BatteryOptions opts;
    opts.families = {"zn", "chain", "downset", "product", "random"};

    const auto t0 = std::chrono::steady_clock::now();
    BatterySummary s = run_battery(opts, &std::cout);
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    std::cout << "\n" << render_summary(s) << "\n";

    char law_line[160];
    std::snprintf(law_line, sizeof law_line,
                  "%ld instances; %.1fs in generation+validation+laws "
                  "(budget %.0fs); %.1fs total",
                  s.instances, s.law_seconds, kLawBudgetSeconds, total);
    const bool c1 = s.law_failures == 0 && s.law_seconds < kLawBudgetSeconds;
    report(1, "axiom battery", c1, law_line);

    const bool c2 = s.duality_failures == 0;
    report(2, "reticulation duality", c2,
           std::to_string(s.duality_failures) + " failures");

    std::set<std::string> vacuous_ids;
    bool vacuous_shape = !s.vacuous_clauses.empty();
    for (const auto& [key, n] : s.vacuous_clauses) {
        vacuous_ids.insert(key.substr(0, key.find(' ')));
        if (key.find("compact") == std::string::npos || n <= 0)
            vacuous_shape = false;
    }
    const bool c3 =
        s.mismatches == 0 && vacuous_shape &&
        vacuous_ids == std::set<std::string>{"T7.3", "P7.5", "T7.9", "T8.8"} &&
        s.reports == s.instances * long(theorem_ids().size());
    report(3, "registry sweep", c3,
           std::to_string(s.reports) + " reports, " +
               std::to_string(s.mismatches) + " MISMATCH, " +
               std::to_string(vacuous_ids.size()) +
               " entries with vacuous compactness clauses");

    Checker goldens = check_goldens();
    report(4, "reference goldens", goldens.problems.empty(), goldens.detail());

    Checker closures = check_flat_closures();
    const bool c5 = s.closure_failures == 0 && closures.problems.empty();
    report(5, "flat-closure oracle", c5,
           std::to_string(s.closure_failures) + " battery failures" +
               (closures.problems.empty() ? "" : "; " + closures.detail()));

    const std::string summary = render_summary(s);
    const bool c6 = !s.degeneracies.empty() && s.degeneracy_failures == 0 &&
                    summary.find("degeneracies") != std::string::npos;
    report(6, "degeneracy ledger", c6,
           std::to_string(s.degeneracies.size()) + " ledger lines, " +
               std::to_string(s.degeneracy_failures) + " failures");

    const bool all = c1 && c2 && c3 && goldens.problems.empty() && c5 && c6;
    std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return all ? 0 : 1;
}
