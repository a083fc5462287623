#include "qspec/theorems.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

PointSet pbit(int i) { return PointSet(1) << i; }

ClauseReport clause(std::string label, bool holds, std::string witness = {}) {
    ClauseReport c;
    c.label = std::move(label);
    c.holds = holds;
    if (!holds) c.witness = std::move(witness);
    return c;
}

/// Compactness of a finite space: true with no information content.
ClauseReport compactness_clause(std::string label) {
    ClauseReport c;
    c.label = std::move(label);
    c.holds = true;
    c.vacuous = true;
    return c;
}

ClauseReport skipped_clause(std::string label, std::string why) {
    ClauseReport c;
    c.label = std::move(label);
    c.skipped = true;
    c.witness = std::move(why);
    return c;
}

TheoremVerdict combined_verdict(TheoremShape shape,
                                const std::vector<ClauseReport>& cs) {
    int expected = -1;
    for (const auto& c : cs) {
        if (c.vacuous || c.skipped) continue;
        if (shape == TheoremShape::kFact) {
            if (!c.holds) return TheoremVerdict::kMismatch;
            continue;
        }
        int v = c.holds ? 1 : 0;
        if (expected < 0)
            expected = v;
        else if (expected != v)
            return TheoremVerdict::kMismatch;
    }
    return TheoremVerdict::kVerified;
}

TheoremReport make_report(std::string id, std::string title, TheoremShape shape,
                          std::vector<ClauseReport> clauses,
                          std::string guard_failure = {}) {
    TheoremReport r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.shape = shape;
    r.clauses = std::move(clauses);
    if (!guard_failure.empty()) {
        r.verdict = TheoremVerdict::kNotApplicable;
        r.guard = std::move(guard_failure);
    } else {
        r.verdict = combined_verdict(shape, r.clauses);
    }
    return r;
}

/// For every unordered pair of distinct points, some pair (c, d) with
/// prod(c, d) == target has c outside the first point's down-set and d
/// outside the second's. Commutativity of prod covers the mirrored pair.
template <typename Prod>
bool pairs_split(const Lattice& lat, Prod prod, const std::vector<Elem>& points,
                 Elem target, std::string* witness) {
    const int n = lat.size();
    std::vector<ElemSet> kill(n, ElemSet(n));
    for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d)
            if (prod(c, d) == target) kill[c].set(d);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            ElemSet off_first = ~lat.down_set(points[i]);
            ElemSet off_second = ~lat.down_set(points[j]);
            bool split = false;
            for (std::size_t c = off_first.find_first(); c != kNoElem;
                 c = off_first.find_next(c)) {
                if ((kill[c] & off_second).any()) {
                    split = true;
                    break;
                }
            }
            if (!split) {
                if (witness)
                    *witness = "no splitting pair for " +
                               describe_elems(lat, {points[i], points[j]});
                return false;
            }
        }
    }
    return true;
}

bool primes_split_by_product(const Quantale& q, const std::vector<Elem>& points,
                             Elem target, std::string* witness) {
    return pairs_split(
        q.lattice(), [&](Elem c, Elem d) { return q.mul(c, d); }, points,
        target, witness);
}

bool lattice_primes_split_by_meet(const Lattice& lat, std::string* witness) {
    return pairs_split(
        lat, [&](Elem x, Elem y) { return lat.meet(x, y); }, meet_primes(lat),
        lat.bottom(), witness);
}

bool lattice_is_boolean(const Lattice& lat, std::string* witness) {
    ElemSet comp = lat.complemented();
    if (comp.count() == static_cast<std::size_t>(lat.size())) return true;
    ElemSet missing = ~comp;
    if (witness)
        *witness = "no complement for " +
                   lat.label(static_cast<Elem>(missing.find_first()));
    return false;
}

/// Zero-dimensionality for a finite frame: the join-closure of the central
/// elements exhausts the carrier.
bool join_generated_by_center(const Quantale& q, const ElemSet& center,
                              std::string* witness) {
    ElemSet reach = center;
    reach.set(q.bottom());
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = reach.find_first(); a != kNoElem;
             a = reach.find_next(a)) {
            for (std::size_t e = center.find_first(); e != kNoElem;
                 e = center.find_next(e)) {
                Elem j = q.join(static_cast<Elem>(a), static_cast<Elem>(e));
                if (!reach.test(j)) {
                    reach.set(j);
                    grew = true;
                }
            }
        }
    }
    if (reach.all()) return true;
    if (witness)
        *witness = q.label(static_cast<Elem>((~reach).find_first())) +
                   " is not a join of central elements";
    return false;
}

/// Continuity criterion for maps between finite spaces sharing ambient
/// indices: the image of each minimal neighborhood lands in the minimal
/// neighborhood of the image.
bool continuous_point_map(const FiniteSpace& src, const FiniteSpace& dst,
                          const std::vector<int>& gamma) {
    for (PointSet m = src.ground; m; m &= m - 1) {
        int x = std::countr_zero(m);
        PointSet allowed = dst.min_nbhd[gamma[x]];
        for (PointSet k = src.min_nbhd[x]; k; k &= k - 1) {
            if (!(allowed & pbit(gamma[std::countr_zero(k)]))) return false;
        }
    }
    return true;
}

struct RetractionSearch {
    bool found = false;
    bool skipped = false;
    std::string detail;
};

/// Exhaustive search for a continuous retraction of the inclusion of
/// `targets` into the spectrum, over maps fixing the targets and moving every
/// other point to a comparable target (upward for the maximal layer,
/// downward for the minimal one).
RetractionSearch find_order_retraction(const Quantale& q,
                                       const SpectralTopologies& top,
                                       const FiniteSpace& src,
                                       const FiniteSpace& dst, PointSet targets,
                                       bool upward) {
    RetractionSearch out;
    const int n = static_cast<int>(top.points.size());
    if (n > kMaxRetractionSearchPoints) {
        out.skipped = true;
        out.detail = "spectrum exceeds the retraction search cap";
        return out;
    }
    std::vector<std::vector<int>> choice(n);
    for (int i = 0; i < n; ++i) {
        if (targets & pbit(i)) {
            choice[i] = {i};
            continue;
        }
        for (PointSet m = targets; m; m &= m - 1) {
            int j = std::countr_zero(m);
            bool comparable = upward ? q.leq(top.points[i], top.points[j])
                                     : q.leq(top.points[j], top.points[i]);
            if (comparable) choice[i].push_back(j);
        }
        if (choice[i].empty()) {
            out.detail = "no admissible image for " + q.label(top.points[i]);
            return out;
        }
    }
    std::vector<int> pick(n, 0), gamma(n);
    while (true) {
        for (int i = 0; i < n; ++i) gamma[i] = choice[i][pick[i]];
        if (continuous_point_map(src, dst, gamma)) {
            out.found = true;
            return out;
        }
        int i = 0;
        while (i < n && ++pick[i] == static_cast<int>(choice[i].size()))
            pick[i++] = 0;
        if (i == n) {
            out.detail = "no continuous order-compatible retraction";
            return out;
        }
    }
}

ClauseReport retraction_clause(std::string label, const RetractionSearch& s) {
    if (s.skipped) return skipped_clause(std::move(label), s.detail);
    return clause(std::move(label), s.found, s.detail);
}

std::string point_set_difference(const AnalysisContext& ctx, PointSet got,
                                 PointSet want) {
    PointSet diff = got ^ want;
    if (!diff) return {};
    int i = std::countr_zero(diff);
    return ctx.q.label(ctx.top.points[i]) +
           ((got & pbit(i)) ? " satisfies the condition but is not minimal"
                            : " is minimal but fails the condition");
}

bool all_minimal_primes_pure(const AnalysisContext& ctx, std::string* witness) {
    for (Elem p : ctx.sr.min_elems) {
        if (!is_pure(ctx.q, p)) {
            if (witness) *witness = ctx.q.label(p) + " is not pure";
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Registry entries.
// ---------------------------------------------------------------------------

TheoremReport entry_p6_2(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("every element has a stabilized power in the center",
                        ctx.classes.hyperarchimedean,
                        ctx.classes.hyper_witness));
    std::string w;
    cs.push_back(clause("the reticulation is a Boolean lattice",
                        lattice_is_boolean(ctx.ret.lat, &w), w));
    cs.push_back(clause("every prime is maximal",
                        ctx.sr.spec_mask == ctx.sr.max_mask,
                        "some prime lies under another"));
    w.clear();
    cs.push_back(clause(
        "the interval above the radical of bottom is hyperarchimedean",
        is_hyperarchimedean(ctx.above_radical.q, ctx.above_radical_center, &w),
        w));
    w.clear();
    cs.push_back(
        clause("the radical-element frame is hyperarchimedean",
               is_hyperarchimedean(ctx.radical.q, ctx.radical_center, &w), w));
    w.clear();
    cs.push_back(clause(
        "every radical element is a join of central radical elements",
        join_generated_by_center(ctx.radical.q, ctx.radical_center, &w), w));
    return make_report("P6.2",
                       "algebraic characterizations of hyperarchimedean "
                       "quantales",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_p6_5(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("every element has a stabilized power in the center",
                        ctx.classes.hyperarchimedean,
                        ctx.classes.hyper_witness));
    std::string w;
    cs.push_back(clause("the reticulation is a Boolean lattice",
                        lattice_is_boolean(ctx.ret.lat, &w), w));
    w.clear();
    cs.push_back(
        clause("distinct meet-primes of the reticulation split by a disjoint "
               "pair",
               lattice_primes_split_by_meet(ctx.ret.lat, &w), w));
    w.clear();
    cs.push_back(
        clause("distinct primes split by a pair with product bottom",
               primes_split_by_product(ctx.q, ctx.sr.spec, ctx.q.bottom(), &w),
               w));
    return make_report("P6.5", "hyperarchimedean separation by orthogonal pairs",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_c6_6(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("every element has a stabilized power in the center",
                        ctx.classes.hyperarchimedean,
                        ctx.classes.hyper_witness));
    std::string w;
    Elem rho0 = ctx.sr.radical_map[ctx.q.bottom()];
    cs.push_back(clause(
        "distinct primes split by a pair whose product is the radical of "
        "bottom",
        primes_split_by_product(ctx.q, ctx.sr.spec, rho0, &w), w));
    return make_report("C6.6", "separation with product at the radical of bottom",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_t6_8(const AnalysisContext& ctx) {
    SpaceProperties zp = space_properties(ctx.top.zariski);
    SpaceProperties fp = space_properties(ctx.top.flat);
    std::vector<ClauseReport> cs;
    cs.push_back(clause("every element has a stabilized power in the center",
                        ctx.classes.hyperarchimedean,
                        ctx.classes.hyper_witness));
    std::string w;
    cs.push_back(
        clause("distinct primes split by a pair with product bottom",
               primes_split_by_product(ctx.q, ctx.sr.spec, ctx.q.bottom(), &w),
               w));
    cs.push_back(clause("the Zariski spectrum is Hausdorff", zp.hausdorff));
    cs.push_back(clause("the Zariski spectrum is a Boolean space",
                        zp.boolean_space));
    cs.push_back(clause("the Zariski and patch topologies coincide",
                        same_topology(ctx.top.zariski, ctx.top.patch)));
    cs.push_back(clause("the flat spectrum is Hausdorff", fp.hausdorff));
    cs.push_back(clause("the flat spectrum is a Boolean space",
                        fp.boolean_space));
    cs.push_back(clause("the flat and patch topologies coincide",
                        same_topology(ctx.top.flat, ctx.top.patch)));
    return make_report("T6.8",
                       "spectral characterizations of hyperarchimedean "
                       "quantales",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_t7_3(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(compactness_clause("the maximal flat spectrum is compact"));
    std::string w;
    cs.push_back(clause(
        "the interval above the Jacobson element is hyperarchimedean",
        is_hyperarchimedean(ctx.above_jacobson.q, ctx.above_jacobson_center,
                            &w),
        w));
    return make_report("T7.3", "compactness of the maximal flat spectrum",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_p7_4(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause(
        "every Zariski-open set of maximal elements is flat-open",
        finer(ctx.top.max_f, ctx.top.max_z)));
    return make_report("P7.4", "flat topology refines Zariski on maximal elements",
                       TheoremShape::kFact, std::move(cs));
}

TheoremReport entry_p7_5(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(compactness_clause("the maximal flat spectrum is compact"));
    cs.push_back(clause("the two maximal-spectrum topologies coincide",
                        same_topology(ctx.top.max_z, ctx.top.max_f)));
    std::string w;
    cs.push_back(clause(
        "the interval above the Jacobson element is hyperarchimedean",
        is_hyperarchimedean(ctx.above_jacobson.q, ctx.above_jacobson_center,
                            &w),
        w));
    return make_report("P7.5", "coincidence of the two maximal-spectrum topologies",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_p7_6(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("the quantale is normal", ctx.classes.normal,
                        ctx.classes.normal_witness));
    std::string w;
    cs.push_back(clause("the reticulation is a normal lattice",
                        is_normal_lattice(ctx.ret.lat, &w), w));
    return make_report("P7.6", "normality passes to the reticulation",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_p7_7(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("the quantale is normal", ctx.classes.normal,
                        ctx.classes.normal_witness));
    std::string w;
    cs.push_back(clause(
        "distinct maximal elements split by a pair with product bottom",
        primes_split_by_product(ctx.q, ctx.sr.max_elems, ctx.q.bottom(), &w),
        w));

    bool disjoint = true;
    std::string dw;
    for (PointSet m = ctx.top.max_mask; m && disjoint; m &= m - 1) {
        int i = std::countr_zero(m);
        for (PointSet k = m & (m - 1); k; k &= k - 1) {
            int j = std::countr_zero(k);
            if (ctx.top.zariski.min_nbhd[i] & ctx.top.zariski.min_nbhd[j]) {
                disjoint = false;
                dw = describe_elems(ctx.q.lattice(),
                                    {ctx.top.points[i], ctx.top.points[j]}) +
                     " share every Zariski neighborhood pair";
                break;
            }
        }
    }
    cs.push_back(clause(
        "distinct maximal elements have disjoint Zariski neighborhoods",
        disjoint, dw));

    bool unique_max = true;
    std::string uw;
    for (Elem p : ctx.sr.spec) {
        if ((ctx.q.lattice().up_set(p) & ctx.sr.max_mask).count() != 1) {
            unique_max = false;
            uw = ctx.q.label(p) + " lies under several maximal elements";
            break;
        }
    }
    cs.push_back(clause("every prime lies under exactly one maximal element",
                        unique_max, uw));

    cs.push_back(clause("the Zariski spectrum is a normal space",
                        space_properties(ctx.top.zariski).normal_space));

    cs.push_back(retraction_clause(
        "a continuous retraction onto the maximal Zariski spectrum exists",
        find_order_retraction(ctx.q, ctx.top, ctx.top.zariski, ctx.top.max_z,
                              ctx.top.max_mask, /*upward=*/true)));

    bool closed_downs = true;
    std::string cw;
    for (PointSet m = ctx.top.max_mask; m; m &= m - 1) {
        int i = std::countr_zero(m);
        if (!is_closed(ctx.top.zariski, ctx.top.lambda_mask[i])) {
            closed_downs = false;
            cw = "primes under " + ctx.q.label(ctx.top.points[i]) +
                 " are not Zariski-closed";
            break;
        }
    }
    cs.push_back(clause(
        "the primes under each maximal element form a Zariski-closed set",
        closed_downs, cw));

    return make_report("P7.7", "characterizations of normal quantales",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_t7_9(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(retraction_clause(
        "a flat-continuous retraction onto the maximal layer exists",
        find_order_retraction(ctx.q, ctx.top, ctx.top.flat, ctx.top.max_f,
                              ctx.top.max_mask, /*upward=*/true)));
    cs.push_back(compactness_clause("the maximal flat spectrum is compact"));
    std::string guard =
        ctx.classes.normal ? "" : "instance is not normal";
    return make_report("T7.9", "flat continuity of the maximal retraction",
                       TheoremShape::kEquivalence, std::move(cs), guard);
}

TheoremReport entry_p7_10(const AnalysisContext& ctx) {
    bool hyp = space_properties(ctx.top.max_z).hausdorff &&
               ctx.sr.radical_map[ctx.q.bottom()] == ctx.sr.jacobson;
    std::vector<ClauseReport> cs;
    cs.push_back(clause(
        "a Hausdorff maximal Zariski spectrum with radical of bottom equal "
        "to the Jacobson element forces normality",
        !hyp || ctx.classes.normal, ctx.classes.normal_witness));
    return make_report("P7.10", "Hausdorff maximal spectrum forces normality",
                       TheoremShape::kFact, std::move(cs));
}

TheoremReport entry_c7_11(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("the maximal Zariski spectrum is Hausdorff",
                        space_properties(ctx.top.max_z).hausdorff));
    std::string w;
    cs.push_back(
        clause("the interval above the Jacobson element is normal",
               is_normal(ctx.above_jacobson.q, &w), w));
    return make_report("C7.11",
                       "Hausdorff maximal spectrum via the interval above "
                       "the Jacobson element",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_l7_12(const AnalysisContext& ctx) {
    std::string guard = ctx.classes.normal ? "" : "instance is not normal";
    std::vector<ClauseReport> cs;
    std::string label =
        "central traces are exactly the clopen sets of the maximal Zariski "
        "spectrum";
    if (std::popcount(ctx.top.max_mask) > kMaxMaterializedPoints) {
        cs.push_back(skipped_clause(
            std::move(label), "maximal spectrum too large to enumerate"));
        return make_report("L7.12",
                           "clopen subsets of the maximal Zariski spectrum",
                           TheoremShape::kFact, std::move(cs), guard);
    }
    std::set<PointSet> traces;
    for (std::size_t e = ctx.center.find_first(); e != kNoElem;
         e = ctx.center.find_next(e))
        traces.insert(ctx.top.d_mask[e] & ctx.top.max_mask);
    std::vector<PointSet> clop = clopen_sets(ctx.top.max_z);
    std::set<PointSet> clop_set(clop.begin(), clop.end());
    bool equal = traces == clop_set;
    std::string w;
    if (!equal)
        w = "the central-trace family has " + std::to_string(traces.size()) +
            " sets against " + std::to_string(clop_set.size()) + " clopens";
    cs.push_back(clause(std::move(label), equal, w));
    return make_report("L7.12", "clopen subsets of the maximal Zariski spectrum",
                       TheoremShape::kFact, std::move(cs), guard);
}

TheoremReport entry_t7_13(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("covers split by central orthogonal pairs",
                        ctx.classes.b_normal, ctx.classes.b_normal_witness));
    std::string w;
    cs.push_back(clause(
        "the radical-element frame splits covers by central orthogonal pairs",
        is_b_normal(ctx.radical.q, ctx.radical_center, &w), w));
    w.clear();
    cs.push_back(clause(
        "the reticulation splits covers by complemented orthogonal pairs",
        is_b_normal_lattice(ctx.ret.lat, &w), w));

    bool pointwise = true;
    std::string pw;
    for (Elem p : ctx.sr.max_elems) {
        for (Elem m : ctx.sr.max_elems) {
            if (p == m) continue;
            bool found = false;
            for (std::size_t e = ctx.center.find_first(); e != kNoElem;
                 e = ctx.center.find_next(e)) {
                Elem ee = static_cast<Elem>(e);
                if (ctx.q.leq(ee, p) && ctx.q.leq(ctx.q.negation(ee), m)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                pointwise = false;
                pw = "no central element under " + ctx.q.label(p) +
                     " with complement under " + ctx.q.label(m);
                break;
            }
        }
        if (!pointwise) break;
    }
    cs.push_back(clause(
        "distinct maximal elements are told apart by a central element and "
        "its complement",
        pointwise, pw));

    SpaceProperties mz = space_properties(ctx.top.max_z);
    cs.push_back(clause(
        "the quantale is normal and the maximal Zariski spectrum is "
        "zero-dimensional",
        ctx.classes.normal && mz.zero_dimensional,
        ctx.classes.normal_witness));
    cs.push_back(clause(
        "the quantale is normal and the maximal Zariski spectrum is a "
        "Boolean space",
        ctx.classes.normal && mz.boolean_space, ctx.classes.normal_witness));

    bool basis = true;
    std::string bw;
    for (std::size_t e = ctx.center.find_first(); e != kNoElem && basis;
         e = ctx.center.find_next(e)) {
        if (!is_open(ctx.top.max_z, ctx.top.d_mask[e] & ctx.top.max_mask)) {
            basis = false;
            bw = "central trace of " + ctx.q.label(static_cast<Elem>(e)) +
                 " is not open";
        }
    }
    for (PointSet m = ctx.top.max_mask; m && basis; m &= m - 1) {
        int i = std::countr_zero(m);
        PointSet need = ctx.top.max_z.min_nbhd[i];
        bool hit = false;
        for (std::size_t e = ctx.center.find_first(); e != kNoElem;
             e = ctx.center.find_next(e)) {
            if ((ctx.top.d_mask[e] & ctx.top.max_mask) == need) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            basis = false;
            bw = "no central trace realizes the minimal neighborhood of " +
                 ctx.q.label(ctx.top.points[i]);
        }
    }
    cs.push_back(clause(
        "central traces form a basis of the maximal Zariski spectrum", basis,
        bw));

    std::vector<int> pmap(ctx.top.points.size(), -1);
    for (PointSet m = ctx.top.max_mask; m; m &= m - 1) {
        int i = std::countr_zero(m);
        pmap[i] = ctx.pierce.s_map[i];
    }
    std::string hw;
    cs.push_back(clause(
        "the canonical map restricts to a homeomorphism onto the center "
        "spectrum",
        homeomorphic_by(ctx.top.max_z, ctx.pierce.space, pmap, &hw), hw));

    return make_report("T7.13", "characterizations of B-normal quantales",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_c7_14(const AnalysisContext& ctx) {
    std::string guard = ctx.classes.normal ? "" : "instance is not normal";
    std::string w;
    bool interval_hyper = is_hyperarchimedean(ctx.above_jacobson.q,
                                              ctx.above_jacobson_center, &w);
    std::vector<ClauseReport> cs;
    cs.push_back(clause(
        "a hyperarchimedean interval above the Jacobson element forces "
        "central splitting",
        !interval_hyper || ctx.classes.b_normal,
        ctx.classes.b_normal_witness));
    return make_report("C7.14",
                       "B-normality from a hyperarchimedean interval above "
                       "the Jacobson element",
                       TheoremShape::kFact, std::move(cs), guard);
}

TheoremReport entry_p8_3(const AnalysisContext& ctx) {
    const Quantale& q = ctx.q;
    const Lattice& L = ctx.ret.lat;
    const auto& pts = ctx.top.points;

    std::vector<Elem> lp = meet_primes(L);
    ElemSet minimal_lp(L.size());
    for (Elem cand : lp) {
        bool least = true;
        for (Elem other : lp) {
            if (other != cand && L.leq(other, cand)) {
                least = false;
                break;
            }
        }
        if (least) minimal_lp.set(cand);
    }

    std::vector<Elem> ann(L.size());
    for (Elem x = 0; x < L.size(); ++x) {
        ElemSet zeroes(L.size());
        for (Elem y = 0; y < L.size(); ++y)
            if (L.meet(x, y) == L.bottom()) zeroes.set(y);
        ann[x] = L.join_of(zeroes);
    }

    Elem rho0 = ctx.sr.radical_map[q.bottom()];
    std::vector<Elem> to_radical(q.size());
    for (Elem c = 0; c < q.size(); ++c) to_radical[c] = q.residual(c, rho0);

    PointSet via_classes = 0, via_annihilators = 0, via_residuals = 0;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        Elem p = pts[i];
        Elem cls = ctx.ret.lambda[p];
        if (minimal_lp.test(cls)) via_classes |= pbit(i);
        bool escapes = true;
        for (Elem c = 0; c < q.size(); ++c) {
            Elem cc = ctx.ret.lambda[c];
            if (L.leq(cc, cls) && L.leq(ann[cc], cls)) {
                escapes = false;
                break;
            }
        }
        if (escapes) via_annihilators |= pbit(i);
        bool flips = true;
        for (Elem c = 0; c < q.size(); ++c) {
            if (q.leq(c, p) == q.leq(to_radical[c], p)) {
                flips = false;
                break;
            }
        }
        if (flips) via_residuals |= pbit(i);
    }

    PointSet definitional = ctx.top.min_mask;
    std::vector<ClauseReport> cs;
    cs.push_back(clause(
        "minimal primes are the primes whose class is a minimal meet-prime "
        "of the reticulation",
        via_classes == definitional,
        point_set_difference(ctx, via_classes, definitional)));
    cs.push_back(clause(
        "minimal primes are the primes where every class below escapes "
        "through its annihilator",
        via_annihilators == definitional,
        point_set_difference(ctx, via_annihilators, definitional)));
    cs.push_back(clause(
        "minimal primes are the primes where membership flips through the "
        "residual into the radical of bottom",
        via_residuals == definitional,
        point_set_difference(ctx, via_residuals, definitional)));
    return make_report("P8.3",
                       "reticulation and residual descriptions of minimal "
                       "primes",
                       TheoremShape::kFact, std::move(cs));
}

TheoremReport entry_c8_4(const AnalysisContext& ctx) {
    std::string guard = ctx.sr.semiprime ? "" : "instance is not semiprime";
    PointSet via = 0;
    for (int i = 0; i < static_cast<int>(ctx.top.points.size()); ++i) {
        Elem p = ctx.top.points[i];
        bool ok = true;
        for (Elem c = 0; c < ctx.q.size(); ++c) {
            if (ctx.q.leq(c, p) && ctx.q.leq(ctx.q.negation(c), p)) {
                ok = false;
                break;
            }
        }
        if (ok) via |= pbit(i);
    }
    std::vector<ClauseReport> cs;
    cs.push_back(clause(
        "minimal primes are the primes containing no element together with "
        "its annihilator",
        via == ctx.top.min_mask,
        point_set_difference(ctx, via, ctx.top.min_mask)));
    return make_report("C8.4", "annihilator description of minimal primes",
                       TheoremShape::kFact, std::move(cs), guard);
}

TheoremReport entry_t8_8(const AnalysisContext& ctx) {
    std::string guard = ctx.sr.semiprime ? "" : "instance is not semiprime";
    std::vector<ClauseReport> cs;
    cs.push_back(clause("the two minimal-spectrum topologies coincide",
                        same_topology(ctx.top.min_z, ctx.top.min_f)));
    cs.push_back(
        compactness_clause("the minimal Zariski spectrum is compact"));
    cs.push_back(clause("the minimal Zariski spectrum is a Boolean space",
                        space_properties(ctx.top.min_z).boolean_space));
    bool orthogonal = true;
    std::string w;
    for (Elem c = 0; c < ctx.q.size() && orthogonal; ++c) {
        bool found = false;
        for (Elem d = 0; d < ctx.q.size(); ++d) {
            if (ctx.q.mul(c, d) == ctx.q.bottom() &&
                ctx.q.negation(ctx.q.join(c, d)) == ctx.q.bottom()) {
                found = true;
                break;
            }
        }
        if (!found) {
            orthogonal = false;
            w = "no dense orthogonal partner for " + ctx.q.label(c);
        }
    }
    cs.push_back(clause(
        "every element has an orthogonal partner joining to a dense element",
        orthogonal, w));
    return make_report("T8.8",
                       "coincidence of the two minimal-spectrum topologies",
                       TheoremShape::kEquivalence, std::move(cs), guard);
}

TheoremReport entry_c8_10(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("every prime lies over exactly one minimal prime",
                        ctx.classes.mp, ctx.classes.mp_witness));
    std::string w;
    cs.push_back(clause("the reticulation is a conormal lattice",
                        is_conormal_lattice(ctx.ret.lat, &w), w));
    return make_report("C8.10", "mp-quantales have conormal reticulations",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_t8_14(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("every prime lies over exactly one minimal prime",
                        ctx.classes.mp, ctx.classes.mp_witness));

    bool comax = true;
    std::string w;
    for (std::size_t i = 0; i < ctx.sr.min_elems.size() && comax; ++i) {
        for (std::size_t j = i + 1; j < ctx.sr.min_elems.size(); ++j) {
            Elem p = ctx.sr.min_elems[i], r = ctx.sr.min_elems[j];
            if (ctx.q.join(p, r) != ctx.q.top()) {
                comax = false;
                w = describe_elems(ctx.q.lattice(), {p, r}) +
                    " join below top";
                break;
            }
        }
    }
    cs.push_back(clause("distinct minimal primes join to top", comax, w));

    w.clear();
    cs.push_back(clause(
        "the radical-element frame has unique minimal primes under each "
        "prime",
        is_mp(ctx.radical.q, ctx.radical_sr, &w), w));
    w.clear();
    cs.push_back(clause(
        "the interval above the radical of bottom has unique minimal primes "
        "under each prime",
        is_mp(ctx.above_radical.q, ctx.above_radical_sr, &w), w));

    cs.push_back(retraction_clause(
        "a flat-continuous retraction onto the minimal layer exists",
        find_order_retraction(ctx.q, ctx.top, ctx.top.flat, ctx.top.min_f,
                              ctx.top.min_mask, /*upward=*/false)));

    cs.push_back(clause("the flat spectrum is a normal space",
                        space_properties(ctx.top.flat).normal_space));

    bool closed_ups = true;
    std::string cw;
    for (Elem p : ctx.sr.min_elems) {
        if (!is_closed(ctx.top.flat, ctx.top.v_mask[p])) {
            closed_ups = false;
            cw = "primes over " + ctx.q.label(p) + " are not flat-closed";
            break;
        }
    }
    cs.push_back(clause(
        "the primes over each minimal prime form a flat-closed set",
        closed_ups, cw));

    return make_report("T8.14", "characterizations of mp-quantales",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_p8_16(const AnalysisContext& ctx) {
    const Lattice& L = ctx.ret.lat;
    std::vector<ClauseReport> cs;
    std::string w;
    cs.push_back(clause("the reticulation is a conormal lattice",
                        is_conormal_lattice(L, &w), w));

    bool ann_sigma = true;
    std::string aw;
    for (Elem x = 0; x < L.size(); ++x) {
        PrincipalIdeal ann = annihilator(ctx.ret, PrincipalIdeal{x});
        if (!is_sigma_ideal(ctx.ret, ann)) {
            ann_sigma = false;
            aw = "annihilator of " + L.label(x) + " is not a sigma-ideal";
            break;
        }
    }
    cs.push_back(clause("every annihilator ideal is a sigma-ideal", ann_sigma,
                        aw));

    std::vector<Elem> lp = meet_primes(L);
    bool min_sigma = true;
    std::string mw;
    for (Elem cand : lp) {
        bool least = true;
        for (Elem other : lp) {
            if (other != cand && L.leq(other, cand)) {
                least = false;
                break;
            }
        }
        if (least && !is_sigma_ideal(ctx.ret, PrincipalIdeal{cand})) {
            min_sigma = false;
            mw = "minimal meet-prime " + L.label(cand) +
                 " is not a sigma-ideal";
            break;
        }
    }
    cs.push_back(clause("every minimal meet-prime ideal is a sigma-ideal",
                        min_sigma, mw));
    return make_report("P8.16", "conormal lattices via sigma-ideals",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_l8_17(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("pure annihilators force a semiprime quantale",
                        !ctx.classes.pf || ctx.sr.semiprime,
                        "radical of bottom is not bottom"));
    return make_report("L8.17", "PF-quantales are semiprime",
                       TheoremShape::kFact, std::move(cs));
}

TheoremReport entry_p8_18(const AnalysisContext& ctx) {
    std::string w;
    bool conormal = is_conormal_lattice(ctx.ret.lat, &w);
    std::vector<ClauseReport> cs;
    cs.push_back(clause("pure annihilators force a conormal reticulation",
                        !ctx.classes.pf || conormal, w));
    return make_report("P8.18", "PF-quantales have conormal reticulations",
                       TheoremShape::kFact, std::move(cs));
}

TheoremReport entry_t8_19(const AnalysisContext& ctx) {
    std::vector<ClauseReport> cs;
    cs.push_back(clause("every annihilator is pure", ctx.classes.pf,
                        ctx.classes.pf_witness));
    cs.push_back(clause("the quantale is semiprime and mp",
                        ctx.sr.semiprime && ctx.classes.mp,
                        ctx.classes.mp_witness));
    return make_report("T8.19", "PF equals semiprime plus mp",
                       TheoremShape::kEquivalence, std::move(cs));
}

TheoremReport entry_t8_20(const AnalysisContext& ctx) {
    std::string w;
    bool allpure = all_minimal_primes_pure(ctx, &w);
    std::vector<ClauseReport> cs;
    cs.push_back(clause("pure minimal primes force mp",
                        !allpure || ctx.classes.mp, ctx.classes.mp_witness));
    cs.push_back(clause(
        "on a semiprime instance, mp forces pure minimal primes",
        !(ctx.sr.semiprime && ctx.classes.mp) || allpure, w));
    return make_report("T8.20", "pure minimal primes versus mp",
                       TheoremShape::kFact, std::move(cs));
}

TheoremReport entry_c8_21(const AnalysisContext& ctx) {
    std::string guard = ctx.sr.semiprime ? "" : "instance is not semiprime";
    std::string w;
    bool allpure = all_minimal_primes_pure(ctx, &w);
    std::vector<ClauseReport> cs;
    cs.push_back(clause("every annihilator is pure", ctx.classes.pf,
                        ctx.classes.pf_witness));
    cs.push_back(clause("every minimal prime is pure", allpure, w));
    return make_report("C8.21", "PF via pure minimal primes",
                       TheoremShape::kEquivalence, std::move(cs), guard);
}

TheoremReport entry_t8_22(const AnalysisContext& ctx) {
    const Quantale& q = ctx.q;
    std::vector<ClauseReport> cs;
    cs.push_back(clause("every annihilator is pure", ctx.classes.pf,
                        ctx.classes.pf_witness));
    cs.push_back(clause("the quantale is semiprime and mp",
                        ctx.sr.semiprime && ctx.classes.mp,
                        ctx.classes.mp_witness));

    bool split = true;
    std::string sw;
    for (Elem c = 0; c < q.size() && split; ++c) {
        for (Elem d = c; d < q.size(); ++d) {
            if (q.mul(c, d) == q.bottom() &&
                q.join(q.negation(c), q.negation(d)) != q.top()) {
                split = false;
                sw = "annihilators of " +
                     describe_elems(q.lattice(), {c, d}) + " join below top";
                break;
            }
        }
    }
    cs.push_back(clause(
        "orthogonal pairs have comaximal annihilators", split, sw));

    bool exchange = true;
    std::string ew;
    for (Elem c = 0; c < q.size() && exchange; ++c) {
        for (Elem d = c; d < q.size(); ++d) {
            if (q.negation(q.mul(c, d)) !=
                q.join(q.negation(c), q.negation(d))) {
                exchange = false;
                ew = "annihilator of the product of " +
                     describe_elems(q.lattice(), {c, d}) +
                     " differs from the join of annihilators";
                break;
            }
        }
    }
    cs.push_back(clause(
        "the annihilator of a product is the join of the annihilators",
        exchange, ew));

    bool pure_ann = true;
    std::string pw;
    for (Elem c = 0; c < q.size(); ++c) {
        if (!is_pure(q, q.negation(c))) {
            pure_ann = false;
            pw = "annihilator of " + q.label(c) + " is not pure";
            break;
        }
    }
    cs.push_back(clause("each annihilator element is pure", pure_ann, pw));

    return make_report("T8.22", "annihilator characterizations of PF-quantales",
                       TheoremShape::kEquivalence, std::move(cs));
}

struct RegistryRow {
    const char* id;
    TheoremReport (*fn)(const AnalysisContext&);
};

constexpr RegistryRow kRegistry[] = {
    {"P6.2", &entry_p6_2},   {"P6.5", &entry_p6_5},   {"C6.6", &entry_c6_6},
    {"T6.8", &entry_t6_8},   {"T7.3", &entry_t7_3},   {"P7.4", &entry_p7_4},
    {"P7.5", &entry_p7_5},   {"P7.6", &entry_p7_6},   {"P7.7", &entry_p7_7},
    {"T7.9", &entry_t7_9},   {"P7.10", &entry_p7_10}, {"C7.11", &entry_c7_11},
    {"L7.12", &entry_l7_12}, {"T7.13", &entry_t7_13}, {"C7.14", &entry_c7_14},
    {"P8.3", &entry_p8_3},   {"C8.4", &entry_c8_4},   {"T8.8", &entry_t8_8},
    {"C8.10", &entry_c8_10}, {"T8.14", &entry_t8_14}, {"P8.16", &entry_p8_16},
    {"L8.17", &entry_l8_17}, {"P8.18", &entry_p8_18}, {"T8.19", &entry_t8_19},
    {"T8.20", &entry_t8_20}, {"C8.21", &entry_c8_21}, {"T8.22", &entry_t8_22},
};

}  // namespace

AnalysisContext make_context(Quantale q) {
    SpectrumReport sr = compute_spectra(q);
    ElemSet center = boolean_center(q);
    Reticulation ret = build_reticulation(q, sr);
    RadicalFrame radical = radical_frame(q, sr);
    ElemSet radical_center = boolean_center(radical.q);
    SpectrumReport radical_sr = compute_spectra(radical.q);
    IntervalQuantale above_radical =
        interval_quantale(q, sr.radical_map[q.bottom()]);
    ElemSet above_radical_center = boolean_center(above_radical.q);
    SpectrumReport above_radical_sr = compute_spectra(above_radical.q);
    IntervalQuantale above_jacobson = interval_quantale(q, sr.jacobson);
    ElemSet above_jacobson_center = boolean_center(above_jacobson.q);
    SpectralTopologies top = build_topologies(q, sr);
    PierceSpectrum pierce = build_pierce(q, sr, center, top);
    ClassReport classes = classify_basic(q, sr, center);
    return AnalysisContext{std::move(q),
                           std::move(sr),
                           std::move(center),
                           std::move(ret),
                           std::move(radical),
                           std::move(radical_center),
                           std::move(radical_sr),
                           std::move(above_radical),
                           std::move(above_radical_center),
                           std::move(above_radical_sr),
                           std::move(above_jacobson),
                           std::move(above_jacobson_center),
                           std::move(top),
                           std::move(pierce),
                           std::move(classes)};
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& row : kRegistry) v.emplace_back(row.id);
        return v;
    }();
    return ids;
}

TheoremReport verify_theorem(const AnalysisContext& ctx,
                             const std::string& id) {
    for (const auto& row : kRegistry)
        if (id == row.id) return row.fn(ctx);
    throw ParseError("unknown theorem id: " + id);
}

std::vector<TheoremReport> verify_all(const AnalysisContext& ctx) {
    std::vector<TheoremReport> out;
    out.reserve(std::size(kRegistry));
    for (const auto& row : kRegistry) out.push_back(row.fn(ctx));
    return out;
}

ClassReport classify_all(const AnalysisContext& ctx,
                         std::vector<TheoremReport>* reports) {
    std::vector<TheoremReport> rs = verify_all(ctx);
    const ClassReport& c = ctx.classes;
    if (c.pf && !(c.semiprime && c.mp))
        throw InternalCheckError("ClassInvariant",
                                 "pf instance that is not semiprime mp");
    if (c.b_normal && !c.normal)
        throw InternalCheckError("ClassInvariant",
                                 "b-normal instance that is not normal");
    if (c.hyperarchimedean && !(c.normal && c.mp))
        throw InternalCheckError("ClassInvariant",
                                 "hyperarchimedean instance that is not "
                                 "normal and mp");
    if (reports) *reports = std::move(rs);
    return c;
}

}  // namespace qspec
