#include "qspec/classify.hpp"

namespace qspec {

namespace {

// Shared engine for the four separation predicates. A pair (a, b) with
// cover(a, b) == cover_target must admit separators e, f (within `allowed`
// when given) such that cover(a, e) == cover(b, f) == cover_target and
// sep(e, f) == sep_target. Bitset families keep the scan near-quadratic:
// compat[a] holds the usable partners of a, split[e] the elements separating
// from e, reach[a] everything reachable through some allowed partner of a.
template <typename CoverFn, typename SepFn>
bool separation_holds(const Lattice& lat, CoverFn cover, Elem cover_target,
                      SepFn sep, Elem sep_target, const ElemSet* restrict_to,
                      std::string* witness) {
    const int n = lat.size();
    std::vector<ElemSet> compat(n, ElemSet(n));
    std::vector<ElemSet> split(n, ElemSet(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem e = 0; e < n; ++e) {
            if (cover(a, e) == cover_target) compat[a].set(e);
            if (sep(a, e) == sep_target) split[a].set(e);
        }
    ElemSet everything(n);
    everything.set();
    const ElemSet& allowed = restrict_to ? *restrict_to : everything;

    std::vector<ElemSet> reach(n, ElemSet(n));
    for (Elem a = 0; a < n; ++a) {
        ElemSet es = compat[a];
        es &= allowed;
        for (std::size_t e = es.find_first(); e != kNoElem; e = es.find_next(e))
            reach[a] |= split[e];
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a; b < n; ++b) {
            if (cover(a, b) != cover_target) continue;
            ElemSet cand = reach[a];
            cand &= compat[b];
            cand &= allowed;
            if (cand.none()) {
                if (witness) *witness = describe_elems(lat, {a, b});
                return false;
            }
        }
    return true;
}

}  // namespace

bool is_hyperarchimedean(const Quantale& q, const ElemSet& center,
                         std::string* witness) {
    for (Elem c = 0; c < q.size(); ++c)
        if (!center.test(q.power_limit(c))) {
            if (witness) *witness = q.label(c);
            return false;
        }
    return true;
}

bool is_normal(const Quantale& q, std::string* witness) {
    const Lattice& lat = q.lattice();
    return separation_holds(
        lat, [&](Elem a, Elem b) { return lat.join(a, b); }, lat.top(),
        [&](Elem e, Elem f) { return q.mul(e, f); }, lat.bottom(), nullptr,
        witness);
}

bool is_b_normal(const Quantale& q, const ElemSet& center,
                 std::string* witness) {
    const Lattice& lat = q.lattice();
    return separation_holds(
        lat, [&](Elem a, Elem b) { return lat.join(a, b); }, lat.top(),
        [&](Elem e, Elem f) { return q.mul(e, f); }, lat.bottom(), &center,
        witness);
}

bool is_b_normal_verbatim(const Quantale& q, const ElemSet& center,
                          std::string* witness) {
    const Lattice& lat = q.lattice();
    // e = f = top always satisfies c∨e = d∨f = 1, so the only bite is cd = 0
    if (center.none()) return false;
    for (Elem c = 0; c < q.size(); ++c)
        for (Elem d = c; d < q.size(); ++d)
            if (q.mul(c, d) != lat.bottom()) {
                if (witness) *witness = describe_elems(lat, {c, d});
                return false;
            }
    return true;
}

bool is_mp(const Quantale& q, const SpectrumReport& sr, std::string* witness) {
    const Lattice& lat = q.lattice();
    for (Elem p : sr.spec) {
        ElemSet below = lat.down_set(p);
        below &= sr.min_mask;
        if (below.count() != 1) {
            if (witness) *witness = lat.label(p);
            return false;
        }
    }
    return true;
}

bool is_pf(const Quantale& q, std::string* witness) {
    for (Elem c = 0; c < q.size(); ++c)
        if (!is_pure(q, q.negation(c))) {
            if (witness) *witness = q.label(c);
            return false;
        }
    return true;
}

bool is_normal_lattice(const Lattice& lat, std::string* witness) {
    return separation_holds(
        lat, [&](Elem a, Elem b) { return lat.join(a, b); }, lat.top(),
        [&](Elem e, Elem f) { return lat.meet(e, f); }, lat.bottom(), nullptr,
        witness);
}

bool is_b_normal_lattice(const Lattice& lat, std::string* witness) {
    ElemSet center = lat.complemented();
    return separation_holds(
        lat, [&](Elem a, Elem b) { return lat.join(a, b); }, lat.top(),
        [&](Elem e, Elem f) { return lat.meet(e, f); }, lat.bottom(), &center,
        witness);
}

bool is_conormal_lattice(const Lattice& lat, std::string* witness) {
    return separation_holds(
        lat, [&](Elem a, Elem b) { return lat.meet(a, b); }, lat.bottom(),
        [&](Elem e, Elem f) { return lat.join(e, f); }, lat.top(), nullptr,
        witness);
}

ClassReport classify_basic(const Quantale& q, const SpectrumReport& sr,
                           const ElemSet& center) {
    ClassReport r;
    r.hyperarchimedean = is_hyperarchimedean(q, center, &r.hyper_witness);
    r.normal = is_normal(q, &r.normal_witness);
    r.b_normal = is_b_normal(q, center, &r.b_normal_witness);
    r.b_normal_verbatim = is_b_normal_verbatim(q, center, nullptr);
    r.mp = is_mp(q, sr, &r.mp_witness);
    r.pf = is_pf(q, &r.pf_witness);
    r.semiprime = sr.semiprime;
    return r;
}

}  // namespace qspec
