#include "qspec/reticulation.hpp"

#include <algorithm>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

Elem star_raw(const Quantale& q, const Reticulation& ret, Elem a) {
    Elem g = ret.lat.bottom();
    for (Elem c = 0; c < q.size(); ++c)
        if (q.leq(c, a)) g = ret.lat.join(g, ret.lambda[c]);
    return g;
}

Elem lower_raw(const Quantale& q, const Reticulation& ret, Elem gen) {
    Elem r = q.bottom();
    for (Elem c = 0; c < q.size(); ++c)
        if (ret.lat.leq(ret.lambda[c], gen)) r = q.join(r, c);
    return r;
}

}  // namespace

Reticulation build_reticulation(const Quantale& q) {
    return build_reticulation(q, compute_spectra(q));
}

Reticulation build_reticulation(const Quantale& q, const SpectrumReport& sr) {
    RadicalFrame rf = radical_frame(q, sr);
    const Lattice& lat = q.lattice();
    const int n = lat.size();

    std::vector<Elem> lambda(n);
    for (Elem a = 0; a < n; ++a) lambda[a] = rf.from_parent[sr.radical_map[a]];
    Reticulation ret{rf.q.lattice(), std::move(lambda), rf.to_parent};

    auto fail = [&](const std::string& axiom, const std::string& w) {
        throw InternalCheckError("AxiomFailure", axiom + " at " + w);
    };
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (ret.lambda[lat.join(a, b)] !=
                ret.lat.join(ret.lambda[a], ret.lambda[b]))
                fail("lambda-join", describe_elems(lat, {a, b}));
            if (ret.lambda[q.mul(a, b)] !=
                ret.lat.meet(ret.lambda[a], ret.lambda[b]))
                fail("lambda-product", describe_elems(lat, {a, b}));
            if (ret.lat.leq(ret.lambda[a], ret.lambda[b]) !=
                lat.leq(q.power_limit(a), b))
                fail("lambda-order", describe_elems(lat, {a, b}));
            if ((ret.lambda[a] == ret.lambda[b]) !=
                (sr.radical_map[a] == sr.radical_map[b]))
                fail("lambda-kernel", describe_elems(lat, {a, b}));
        }
    ElemSet hit(ret.lat.size());
    for (Elem a = 0; a < n; ++a) hit.set(ret.lambda[a]);
    if (!hit.all()) fail("lambda-surjective", "unreached class");
    for (Elem x = 0; x < ret.lat.size(); ++x)
        if (ret.lambda[ret.carrier[x]] != x)
            fail("section-inverse", ret.lat.label(x));
    return ret;
}

PrincipalIdeal star(const Quantale& q, const Reticulation& ret, Elem a) {
    Elem g = star_raw(q, ret, a);
    // generator is the class of a; contraction lands on the radical
    // representative; the representative maps back onto the same ideal
    if (g != ret.lambda[a] || lower_raw(q, ret, g) != ret.carrier[g] ||
        star_raw(q, ret, ret.carrier[g]) != g)
        throw InternalCheckError("TransferLawFailure",
                                 "star at a=" + q.label(a));
    return PrincipalIdeal{g};
}

Elem lower_star(const Quantale& q, const Reticulation& ret, PrincipalIdeal I) {
    Elem r = lower_raw(q, ret, I.generator);
    if (ret.carrier[ret.lambda[r]] != r || star_raw(q, ret, r) != I.generator)
        throw InternalCheckError(
            "TransferLawFailure",
            "lower_star at generator=" + ret.lat.label(I.generator));
    return r;
}

SpecTransfer spec_transfer_maps(const Quantale& q, const SpectrumReport& sr,
                                const Reticulation& ret) {
    SpecTransfer t;
    t.lattice_primes = meet_primes(ret.lat);
    auto fail = [&](const std::string& w) {
        throw InternalCheckError("BijectionFailure", w);
    };
    auto prime_pos = [&](Elem P) {
        auto it = std::find(t.lattice_primes.begin(), t.lattice_primes.end(), P);
        return it == t.lattice_primes.end()
                   ? -1
                   : static_cast<Elem>(it - t.lattice_primes.begin());
    };
    auto spec_pos = [&](Elem p) {
        auto it = std::find(sr.spec.begin(), sr.spec.end(), p);
        return it == sr.spec.end() ? -1
                                   : static_cast<Elem>(it - sr.spec.begin());
    };
    for (Elem p : sr.spec) {
        Elem pos = prime_pos(ret.lambda[p]);
        if (pos < 0) fail("image of " + q.label(p) + " not a lattice prime");
        t.u.push_back(pos);
    }
    for (Elem P : t.lattice_primes) {
        Elem pos = spec_pos(ret.carrier[P]);
        if (pos < 0)
            fail("contraction of " + ret.lat.label(P) + " not m-prime");
        t.v.push_back(pos);
    }
    if (t.u.size() != t.v.size()) fail("spectra sizes differ");
    for (std::size_t i = 0; i < t.u.size(); ++i)
        if (t.v[t.u[i]] != static_cast<Elem>(i) ||
            t.u[t.v[i]] != static_cast<Elem>(i))
            fail("maps not mutually inverse");
    for (std::size_t i = 0; i < sr.spec.size(); ++i)
        for (std::size_t j = 0; j < sr.spec.size(); ++j)
            if (q.leq(sr.spec[i], sr.spec[j]) !=
                ret.lat.leq(t.lattice_primes[t.u[i]], t.lattice_primes[t.u[j]]))
                fail("order not preserved between " + q.label(sr.spec[i]) +
                     " and " + q.label(sr.spec[j]));
    return t;
}

PrincipalIdeal annihilator(const Reticulation& ret, PrincipalIdeal I) {
    Elem g = ret.lat.bottom();
    for (Elem x = 0; x < ret.lat.size(); ++x)
        if (ret.lat.meet(x, I.generator) == ret.lat.bottom())
            g = ret.lat.join(g, x);
    return PrincipalIdeal{g};
}

bool is_pure(const Quantale& q, Elem a) {
    for (Elem c = 0; c < q.size(); ++c)
        if (q.leq(c, a) && q.join(a, q.negation(c)) != q.top()) return false;
    return true;
}

bool is_sigma_ideal(const Reticulation& ret, PrincipalIdeal I) {
    for (Elem x = 0; x < ret.lat.size(); ++x)
        if (ret.lat.leq(x, I.generator) &&
            ret.lat.join(I.generator,
                         annihilator(ret, PrincipalIdeal{x}).generator) !=
                ret.lat.top())
            return false;
    return true;
}

bool check_reticulation_map_laws(const Quantale& q, const SpectrumReport& sr,
                                 const Reticulation& ret,
                                 std::string* witness) {
    const Lattice& lat = q.lattice();
    const int n = lat.size();
    const auto& lam = ret.lambda;
    const Lattice& L = ret.lat;
    const Elem rho0 = sr.radical_map[lat.bottom()];
    auto fail = [&](const std::string& law, const std::string& w) {
        if (witness) *witness = law + " at " + w;
        return false;
    };

    for (Elem a = 0; a < n; ++a) {
        if ((lam[a] == L.top()) != (a == lat.top()))
            return fail("map-top", lat.label(a));
        if ((lam[a] == L.bottom()) != (q.power_limit(a) == lat.bottom()))
            return fail("map-nilpotent", lat.label(a));
        if ((lam[a] == L.bottom()) != lat.leq(a, rho0))
            return fail("map-radical-kernel", lat.label(a));
        if (lam[q.power_limit(a)] != lam[a])
            return fail("map-powers", lat.label(a));
        if (sr.semiprime && lam[a] == L.bottom() && a != lat.bottom())
            return fail("map-faithful", lat.label(a));
    }
    if (lam[lat.bottom()] != L.bottom()) return fail("map-bottom", "bottom");
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (lat.leq(a, b) && !L.leq(lam[a], lam[b]))
                return fail("map-monotone", describe_elems(lat, {a, b}));
            if (lam[lat.join(a, b)] != L.join(lam[a], lam[b]))
                return fail("map-join", describe_elems(lat, {a, b}));
            if ((sr.radical_map[a] == sr.radical_map[b]) !=
                (lam[a] == lam[b]))
                return fail("map-kernel", describe_elems(lat, {a, b}));
        }
    return true;
}

bool check_transfer_laws(const Quantale& q, const SpectrumReport& sr,
                         const Reticulation& ret, std::string* witness) {
    const Lattice& lat = q.lattice();
    const Lattice& L = ret.lat;
    const int n = lat.size();
    const int m = L.size();
    const Elem rho0 = sr.radical_map[lat.bottom()];
    auto fail = [&](const std::string& law, const std::string& w) {
        if (witness) *witness = law + " at " + w;
        return false;
    };

    // star/lower_star run their own per-call certificates
    std::vector<Elem> low(m);
    for (Elem x = 0; x < m; ++x)
        low[x] = lower_star(q, ret, PrincipalIdeal{x});
    for (Elem a = 0; a < n; ++a) {
        PrincipalIdeal st = star(q, ret, a);
        if (!lat.leq(a, low[st.generator]))
            return fail("star-unit", lat.label(a));
        if (sr.radical_map[a] != low[st.generator])
            return fail("star-radical", lat.label(a));
    }
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y)
            if (low[L.join(x, y)] != sr.radical_map[lat.join(low[x], low[y])])
                return fail("lower-join", describe_elems(L, {x, y}));
    for (Elem c = 0; c < n; ++c)
        for (Elem x = 0; x < m; ++x)
            if (lat.leq(c, low[x]) != L.leq(ret.lambda[c], x))
                return fail("membership-reflection",
                            lat.label(c) + ", class " + L.label(x));
    for (Elem c = 0; c < n; ++c)
        for (Elem p : sr.spec)
            if (lat.leq(c, p) != L.leq(ret.lambda[c], ret.lambda[p]))
                return fail("prime-membership", describe_elems(lat, {c, p}));

    spec_transfer_maps(q, sr, ret);

    for (Elem a = 0; a < n; ++a) {
        Elem ann = annihilator(ret, star(q, ret, a)).generator;
        if (ann != star(q, ret, q.residual(a, rho0)).generator)
            return fail("annihilator-residual", lat.label(a));
        if (sr.semiprime &&
            ann != star(q, ret, q.negation(a)).generator)
            return fail("annihilator-orthogonal", lat.label(a));
    }
    for (Elem x = 0; x < m; ++x) {
        Elem ann = annihilator(ret, PrincipalIdeal{x}).generator;
        if (low[ann] != q.residual(low[x], rho0))
            return fail("annihilator-contraction", L.label(x));
        if (sr.semiprime && low[ann] != q.negation(low[x]))
            return fail("annihilator-contraction-orthogonal", L.label(x));
    }
    for (Elem a = 0; a < n; ++a)
        if (is_pure(q, a) && !is_sigma_ideal(ret, star(q, ret, a)))
            return fail("pure-to-sigma", lat.label(a));
    if (sr.semiprime)
        for (Elem x = 0; x < m; ++x)
            if (is_sigma_ideal(ret, PrincipalIdeal{x}) && !is_pure(q, low[x]))
                return fail("sigma-to-pure", L.label(x));
    return true;
}

bool verify_center_isomorphism(const Quantale& q, const ElemSet& center,
                               const Reticulation& ret, std::string* witness) {
    const Lattice& L = ret.lat;
    ElemSet center_L = L.complemented();
    auto fail = [&](const std::string& law, const std::string& w) {
        if (witness) *witness = law + " at " + w;
        return false;
    };

    ElemSet image(L.size());
    for (std::size_t e = center.find_first(); e != kNoElem;
         e = center.find_next(e)) {
        Elem le = ret.lambda[e];
        if (!center_L.test(le))
            return fail("center-image", q.label(static_cast<Elem>(e)));
        if (image.test(le))
            return fail("center-injective", q.label(static_cast<Elem>(e)));
        image.set(le);
        // complement passes through the map
        Elem lf = ret.lambda[q.negation(static_cast<Elem>(e))];
        if (L.join(le, lf) != L.top() || L.meet(le, lf) != L.bottom())
            return fail("center-complement-image",
                        q.label(static_cast<Elem>(e)));
    }
    if (image != center_L) return fail("center-surjective", "class missed");

    for (Elem c = 0; c < q.size(); ++c)
        if (center_L.test(ret.lambda[c]) != center.test(q.power_limit(c)))
            return fail("center-power-detection", q.label(c));
    return true;
}

}  // namespace qspec
