#include "qspec/spectra.hpp"

#include "qspec/errors.hpp"

namespace qspec {

std::vector<Elem> m_primes(const Quantale& q) {
    return prime_elements(q.lattice(), q.mul_table());
}

std::vector<Elem> max_elements(const Lattice& lat) {
    std::vector<Elem> out;
    for (Elem a = 0; a < lat.size(); ++a)
        if (lat.up_set(a).count() == 2) out.push_back(a);
    return out;
}

SpectrumReport compute_spectra(const Quantale& q) {
    const Lattice& lat = q.lattice();
    const int n = lat.size();
    SpectrumReport sr;

    sr.spec = m_primes(q);
    sr.spec_mask = ElemSet(n);
    for (Elem p : sr.spec) sr.spec_mask.set(p);

    sr.max_elems = max_elements(lat);
    sr.max_mask = ElemSet(n);
    for (Elem m : sr.max_elems) sr.max_mask.set(m);
    if (!sr.max_mask.is_subset_of(sr.spec_mask))
        throw InternalCheckError("SpectrumInvariant",
                                 "maximal element fails m-primality");

    sr.radical_map.resize(n);
    for (Elem a = 0; a < n; ++a) {
        ElemSet above = lat.up_set(a);
        above &= sr.spec_mask;
        Elem rho = lat.meet_of(above);
        // power route: sup of elements with some power below a; powers
        // descend, so the stabilized power decides the existential
        Elem alt = lat.bottom();
        for (Elem c = 0; c < n; ++c)
            if (lat.leq(q.power_limit(c), a)) alt = lat.join(alt, c);
        if (alt != rho)
            throw InternalCheckError("RadicalFormulaMismatch",
                                     "a=" + lat.label(a));
        sr.radical_map[a] = rho;
    }

    sr.radical_elements = ElemSet(n);
    for (Elem a = 0; a < n; ++a)
        if (sr.radical_map[a] == a) sr.radical_elements.set(a);
    sr.semiprime = sr.radical_map[lat.bottom()] == lat.bottom();

    sr.jacobson = lat.meet_of(sr.max_mask);
    if (!lat.leq(sr.radical_map[lat.bottom()], sr.jacobson))
        throw InternalCheckError("SpectrumInvariant", "rho(0) not below r(A)");

    sr.min_mask = ElemSet(n);
    for (Elem p : sr.spec) {
        ElemSet below = lat.down_set(p);
        below &= sr.spec_mask;
        if (below.count() == 1) sr.min_mask.set(p);
    }
    // independent route: p is minimal iff for every c, c <= p exactly when
    // the residual of c into rho(0) is not below p
    const Elem rho0 = sr.radical_map[lat.bottom()];
    std::vector<Elem> res0(n);
    for (Elem c = 0; c < n; ++c) res0[c] = q.residual(c, rho0);
    ElemSet alt_min(n);
    for (Elem p : sr.spec) {
        bool ok = true;
        for (Elem c = 0; c < n && ok; ++c)
            if (lat.leq(c, p) == lat.leq(res0[c], p)) ok = false;
        if (ok) alt_min.set(p);
    }
    if (alt_min != sr.min_mask) {
        ElemSet diff = alt_min ^ sr.min_mask;
        throw InternalCheckError(
            "CharacterizationMismatch",
            "p=" + lat.label(static_cast<Elem>(diff.find_first())));
    }
    for (Elem p : sr.spec)
        if (sr.min_mask.test(p)) sr.min_elems.push_back(p);

    for (Elem p : sr.spec) {
        ElemSet below = lat.down_set(p);
        below &= sr.min_mask;
        if (below.none())
            throw InternalCheckError("SpectrumInvariant",
                                     "no minimal prime below " + lat.label(p));
    }
    return sr;
}

RadicalFrame radical_frame(const Quantale& base) {
    return radical_frame(base, compute_spectra(base));
}

RadicalFrame radical_frame(const Quantale& base, const SpectrumReport& sr) {
    const Lattice& lat = base.lattice();
    std::vector<Elem> to_parent;
    std::vector<Elem> from_parent(lat.size(), -1);
    for (std::size_t x = sr.radical_elements.find_first(); x != kNoElem;
         x = sr.radical_elements.find_next(x)) {
        from_parent[x] = static_cast<Elem>(to_parent.size());
        to_parent.push_back(static_cast<Elem>(x));
    }
    const int m = static_cast<int>(to_parent.size());

    std::vector<ElemSet> leq(m, ElemSet(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = lat.label(to_parent[i]);
        for (int j = 0; j < m; ++j)
            if (lat.leq(to_parent[i], to_parent[j])) leq[i].set(j);
    }
    Lattice rlat = Lattice::from_order(std::move(leq), std::move(labels));

    // meets restrict and joins close up through the radical; from_order must
    // have derived exactly those tables
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Elem meet_parent = lat.meet(to_parent[i], to_parent[j]);
            Elem join_parent =
                sr.radical_map[lat.join(to_parent[i], to_parent[j])];
            if (from_parent[meet_parent] != rlat.meet(i, j) ||
                from_parent[join_parent] != rlat.join(i, j))
                throw InternalCheckError(
                    "RadicalFrameMismatch",
                    describe_elems(lat, {to_parent[i], to_parent[j]}));
        }
    if (!rlat.distributive(nullptr))
        throw InternalCheckError("RadicalFrameMismatch",
                                 "radical elements not distributive");

    return RadicalFrame{sr.radical_elements, std::move(to_parent),
                        std::move(from_parent), frame_quantale(std::move(rlat))};
}

bool check_radical_laws(const Quantale& q, const SpectrumReport& sr,
                        std::string* witness) {
    const Lattice& lat = q.lattice();
    const int n = lat.size();
    const auto& rho = sr.radical_map;
    auto fail = [&](const std::string& law, const std::string& w) {
        if (witness) *witness = law + " at " + w;
        return false;
    };

    for (Elem a = 0; a < n; ++a) {
        if (!lat.leq(a, rho[a]))
            return fail("radical-increasing", lat.label(a));
        if (rho[rho[a]] != rho[a])
            return fail("radical-idempotent", lat.label(a));
        if ((rho[a] == lat.top()) != (a == lat.top()))
            return fail("radical-top", lat.label(a));
        if (rho[q.power_limit(a)] != rho[a])
            return fail("radical-powers", lat.label(a));
        if (lat.up_set(a).count() > 1 && (lat.up_set(a) & sr.max_mask).none())
            return fail("maximal-above", lat.label(a));
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a; b < n; ++b) {
            if (lat.leq(a, b) && !lat.leq(rho[a], rho[b]))
                return fail("radical-monotone", describe_elems(lat, {a, b}));
            Elem both = lat.meet(rho[a], rho[b]);
            if (rho[lat.meet(a, b)] != both || rho[q.mul(a, b)] != both)
                return fail("radical-meet-product",
                            describe_elems(lat, {a, b}));
            if (rho[lat.join(a, b)] != rho[lat.join(rho[a], rho[b])])
                return fail("radical-join", describe_elems(lat, {a, b}));
            if ((lat.join(rho[a], rho[b]) == lat.top()) !=
                (lat.join(a, b) == lat.top()))
                return fail("radical-comaximal", describe_elems(lat, {a, b}));
        }
    return true;
}

}  // namespace qspec
