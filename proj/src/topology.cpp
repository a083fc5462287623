#include "qspec/topology.hpp"

#include <algorithm>
#include <bit>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

inline PointSet pbit(int i) { return PointSet{1} << i; }

inline PointSet full_ground(int n) {
    return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

void materialize(FiniteSpace& t) {
    if (std::popcount(t.ground) > kMaxMaterializedPoints) {
        t.materialized = false;
        t.opens.clear();
        return;
    }
    t.opens.clear();
    PointSet s = t.ground;
    while (true) {
        if (is_open(t, s)) t.opens.push_back(s);
        if (s == 0) break;
        s = (s - 1) & t.ground;
    }
    std::sort(t.opens.begin(), t.opens.end());
    t.materialized = true;
}

void fill_closures(FiniteSpace& t) {
    t.point_closure.assign(t.n_points, 0);
    for (PointSet my = t.ground; my; my &= my - 1) {
        int y = std::countr_zero(my);
        for (PointSet mx = t.ground; mx; mx &= mx - 1) {
            int x = std::countr_zero(mx);
            if (t.min_nbhd[x] & pbit(y)) t.point_closure[y] |= pbit(x);
        }
    }
}

}  // namespace

FiniteSpace make_space(int n_points, PointSet ground,
                       const std::vector<PointSet>& basis_in) {
    if (n_points > kMaxSpectrumPoints)
        throw ValidationError("TooLarge",
                              "topology ground exceeds " +
                                  std::to_string(kMaxSpectrumPoints) + " points");
    FiniteSpace t;
    t.n_points = n_points;
    t.ground = ground;

    std::vector<PointSet> basis(basis_in);
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    for (PointSet b : basis)
        if (b & ~ground)
            throw InternalCheckError("TopologyConstruction",
                                     "basic open escapes the ground");

    t.min_nbhd.assign(n_points, 0);
    for (PointSet m = ground; m; m &= m - 1) {
        int x = std::countr_zero(m);
        PointSet nb = ground;
        bool covered = false;
        for (PointSet b : basis)
            if (b & pbit(x)) {
                nb &= b;
                covered = true;
            }
        if (!covered)
            throw InternalCheckError("TopologyConstruction",
                                     "point outside every basic open");
        t.min_nbhd[x] = nb;
    }

    auto open_by_nbhd = [&](PointSet s) {
        for (PointSet m = s; m; m &= m - 1)
            if (t.min_nbhd[std::countr_zero(m)] & ~s) return false;
        return true;
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!open_by_nbhd(basis[i] & basis[j]))
                throw InternalCheckError("TopologyConstruction",
                                         "basis not stable under intersection");

    fill_closures(t);
    materialize(t);
    return t;
}

FiniteSpace subspace(const FiniteSpace& t, PointSet keep) {
    FiniteSpace s;
    s.n_points = t.n_points;
    s.ground = t.ground & keep;
    s.min_nbhd.assign(t.n_points, 0);
    for (PointSet m = s.ground; m; m &= m - 1) {
        int x = std::countr_zero(m);
        s.min_nbhd[x] = t.min_nbhd[x] & s.ground;
    }
    fill_closures(s);
    materialize(s);
    return s;
}

bool is_open(const FiniteSpace& t, PointSet s) {
    if (s & ~t.ground) return false;
    for (PointSet m = s; m; m &= m - 1)
        if (t.min_nbhd[std::countr_zero(m)] & ~s) return false;
    return true;
}

bool is_closed(const FiniteSpace& t, PointSet s) {
    return (s & ~t.ground) == 0 && is_open(t, t.ground & ~s);
}

bool is_clopen(const FiniteSpace& t, PointSet s) {
    return is_open(t, s) && is_closed(t, s);
}

PointSet closure(const FiniteSpace& t, PointSet s) {
    PointSet r = 0;
    for (PointSet m = s & t.ground; m; m &= m - 1)
        r |= t.point_closure[std::countr_zero(m)];
    return r;
}

bool same_topology(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.ground != b.ground) return false;
    for (PointSet m = a.ground; m; m &= m - 1) {
        int x = std::countr_zero(m);
        if (a.min_nbhd[x] != b.min_nbhd[x]) return false;
    }
    return true;
}

bool finer(const FiniteSpace& fine, const FiniteSpace& coarse) {
    if (fine.ground != coarse.ground) return false;
    for (PointSet m = fine.ground; m; m &= m - 1) {
        int x = std::countr_zero(m);
        if (fine.min_nbhd[x] & ~coarse.min_nbhd[x]) return false;
    }
    return true;
}

std::vector<PointSet> clopen_sets(const FiniteSpace& t) {
    if (std::popcount(t.ground) > kMaxMaterializedPoints)
        throw ValidationError("TooLarge", "clopen enumeration over a ground of " +
                                              std::to_string(std::popcount(t.ground)) +
                                              " points");
    std::vector<PointSet> out;
    PointSet s = t.ground;
    while (true) {
        if (is_clopen(t, s)) out.push_back(s);
        if (s == 0) break;
        s = (s - 1) & t.ground;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool homeomorphic_by(const FiniteSpace& a, const FiniteSpace& b,
                     const std::vector<int>& pmap, std::string* witness) {
    auto fail = [&](const std::string& w) {
        if (witness) *witness = w;
        return false;
    };
    if (static_cast<int>(pmap.size()) != a.n_points)
        return fail("point map has wrong arity");
    PointSet image = 0;
    for (PointSet m = a.ground; m; m &= m - 1) {
        int x = std::countr_zero(m);
        int y = pmap[x];
        if (y < 0 || y >= b.n_points || !(b.ground & pbit(y)))
            return fail("point " + std::to_string(x) + " maps off the ground");
        if (image & pbit(y))
            return fail("point map not injective at " + std::to_string(y));
        image |= pbit(y);
    }
    if (image != b.ground) return fail("point map not onto");
    auto map_set = [&](PointSet s) {
        PointSet r = 0;
        for (PointSet m = s; m; m &= m - 1) r |= pbit(pmap[std::countr_zero(m)]);
        return r;
    };
    for (PointSet m = a.ground; m; m &= m - 1) {
        int x = std::countr_zero(m);
        if (map_set(a.min_nbhd[x]) != b.min_nbhd[pmap[x]])
            return fail("neighborhoods differ at point " + std::to_string(x));
    }
    return true;
}

SpaceProperties space_properties(const FiniteSpace& t) {
    SpaceProperties p;
    p.t0 = p.t1 = p.hausdorff = p.discrete = true;
    p.zero_dimensional = p.normal_space = true;
    for (PointSet m = t.ground; m; m &= m - 1) {
        int x = std::countr_zero(m);
        if (t.min_nbhd[x] != pbit(x)) p.discrete = false;
        if (t.point_closure[x] != pbit(x)) p.t1 = false;
        if (!is_open(t, t.ground & ~t.min_nbhd[x])) p.zero_dimensional = false;
        for (PointSet m2 = m & (m - 1); m2; m2 &= m2 - 1) {
            int y = std::countr_zero(m2);
            if (t.min_nbhd[x] == t.min_nbhd[y]) p.t0 = false;
            if (t.min_nbhd[x] & t.min_nbhd[y]) {
                p.hausdorff = false;
                // the smallest opens around two closed sets meet exactly when
                // such a point pair exists; normality needs the closures to
                // meet as well
                if (!(t.point_closure[x] & t.point_closure[y]))
                    p.normal_space = false;
            }
        }
    }
    p.compact = true;
    p.boolean_space = p.hausdorff && p.zero_dimensional && p.compact;
    return p;
}

SpectralTopologies build_topologies(const Quantale& q,
                                    const SpectrumReport& sr) {
    const Lattice& lat = q.lattice();
    const int n = lat.size();
    const int ns = static_cast<int>(sr.spec.size());
    if (ns > kMaxSpectrumPoints)
        throw ValidationError("TooLarge",
                              "spectrum exceeds " +
                                  std::to_string(kMaxSpectrumPoints) + " points");
    SpectralTopologies top;
    top.points = sr.spec;
    top.point_index.assign(n, -1);
    for (int i = 0; i < ns; ++i) top.point_index[sr.spec[i]] = i;
    const PointSet ground = full_ground(ns);

    top.d_mask.assign(n, 0);
    top.v_mask.assign(n, 0);
    for (Elem c = 0; c < n; ++c)
        for (int i = 0; i < ns; ++i) {
            if (lat.leq(c, sr.spec[i]))
                top.v_mask[c] |= pbit(i);
            else
                top.d_mask[c] |= pbit(i);
        }
    top.lambda_mask.assign(ns, 0);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j)
            if (lat.leq(sr.spec[j], sr.spec[i])) top.lambda_mask[i] |= pbit(j);

    for (Elem a = 0; a < n; ++a)
        for (Elem b = a; b < n; ++b) {
            if (top.d_mask[q.mul(a, b)] != (top.d_mask[a] & top.d_mask[b]))
                throw InternalCheckError("BasisIdentity",
                                         "D at " + describe_elems(lat, {a, b}));
            if (top.v_mask[lat.join(a, b)] != (top.v_mask[a] & top.v_mask[b]) ||
                top.v_mask[q.mul(a, b)] != (top.v_mask[a] | top.v_mask[b]))
                throw InternalCheckError("BasisIdentity",
                                         "V at " + describe_elems(lat, {a, b}));
        }

    std::vector<PointSet> dbasis(top.d_mask), vbasis(top.v_mask);
    std::sort(dbasis.begin(), dbasis.end());
    dbasis.erase(std::unique(dbasis.begin(), dbasis.end()), dbasis.end());
    std::sort(vbasis.begin(), vbasis.end());
    vbasis.erase(std::unique(vbasis.begin(), vbasis.end()), vbasis.end());
    std::vector<PointSet> pbasis;
    pbasis.reserve(dbasis.size() * vbasis.size());
    for (PointSet d : dbasis)
        for (PointSet v : vbasis) pbasis.push_back(d & v);

    top.zariski = make_space(ns, ground, dbasis);
    top.flat = make_space(ns, ground, vbasis);
    top.patch = make_space(ns, ground, pbasis);

    for (Elem a = 0; a < n; ++a)
        if (!is_closed(top.zariski, top.v_mask[a]))
            throw InternalCheckError("ZariskiClosedFamily",
                                     "V not closed at " + lat.label(a));
    for (int i = 0; i < ns; ++i) {
        if (top.zariski.point_closure[i] != top.v_mask[sr.spec[i]])
            throw InternalCheckError("ZariskiClosedFamily",
                                     "closure of point " + lat.label(sr.spec[i]));
        for (int j = 0; j < ns; ++j)
            if (top.v_mask[lat.meet(sr.spec[i], sr.spec[j])] !=
                (top.v_mask[sr.spec[i]] | top.v_mask[sr.spec[j]]))
                throw InternalCheckError(
                    "ZariskiClosedFamily",
                    "meet law at " + describe_elems(lat, {sr.spec[i], sr.spec[j]}));
        if (top.flat.point_closure[i] != top.lambda_mask[i])
            throw InternalCheckError("FlatClosure",
                                     "point " + lat.label(sr.spec[i]));
    }
    if (!finer(top.patch, top.zariski) || !finer(top.patch, top.flat))
        throw InternalCheckError("PatchRefinement", "patch fails to refine");
    if (!space_properties(top.patch).discrete)
        throw InternalCheckError("PatchNotDiscrete", "finite patch space");

    for (Elem m : sr.max_elems) top.max_mask |= pbit(top.point_index[m]);
    for (Elem m : sr.min_elems) top.min_mask |= pbit(top.point_index[m]);
    top.max_z = subspace(top.zariski, top.max_mask);
    top.max_f = subspace(top.flat, top.max_mask);
    top.min_z = subspace(top.zariski, top.min_mask);
    top.min_f = subspace(top.flat, top.min_mask);
    return top;
}

bool check_topology_facts(const Quantale& q, const SpectrumReport& sr,
                          const SpectralTopologies& top, std::string* witness) {
    const Lattice& lat = q.lattice();
    const int n = lat.size();
    const int ns = static_cast<int>(top.points.size());
    const PointSet ground = top.zariski.ground;
    auto fail = [&](const std::string& law, const std::string& w) {
        if (witness) *witness = law + " at " + w;
        return false;
    };

    for (int i = 0; i < ns; ++i)
        if (closure(top.flat, pbit(i)) != top.lambda_mask[i])
            return fail("flat-point-closure", lat.label(top.points[i]));

    // closures of arbitrary subsets; beyond 16 points fall back to pairs
    auto check_subset = [&](PointSet s) -> bool {
        PointSet down = 0;
        Elem meet_all = lat.top();
        for (PointSet m = s; m; m &= m - 1) {
            int i = std::countr_zero(m);
            down |= top.lambda_mask[i];
            meet_all = lat.meet(meet_all, top.points[i]);
        }
        return closure(top.flat, s) == down &&
               closure(top.zariski, s) == (top.v_mask[meet_all] & ground);
    };
    if (ns <= 16) {
        PointSet s = ground;
        while (true) {
            if (!check_subset(s)) return fail("subset-closure", "mask " + std::to_string(s));
            if (s == 0) break;
            s = (s - 1) & ground;
        }
    } else {
        for (int i = 0; i < ns; ++i)
            for (int j = i; j < ns; ++j)
                if (!check_subset(pbit(i) | pbit(j)))
                    return fail("subset-closure",
                                describe_elems(lat, {top.points[i], top.points[j]}));
    }

    for (Elem c = 0; c < n; ++c)
        if (!is_clopen(top.max_f, top.v_mask[c] & top.max_mask))
            return fail("max-flat-clopen", lat.label(c));
    SpaceProperties pf = space_properties(top.max_f);
    if (!pf.hausdorff || !pf.zero_dimensional)
        return fail("max-flat-separation", "flags");
    SpaceProperties mz = space_properties(top.min_z);
    if (!mz.hausdorff || !mz.zero_dimensional)
        return fail("min-zariski-separation", "flags");
    if (!space_properties(top.min_f).t1) return fail("min-flat-t1", "flags");
    if (!space_properties(top.patch).boolean_space)
        return fail("patch-boolean", "flags");
    (void)sr;
    return true;
}

PierceSpectrum build_pierce(const Quantale& q, const SpectrumReport& sr,
                            const ElemSet& center,
                            const SpectralTopologies& top) {
    const Lattice& lat = q.lattice();
    const int n = lat.size();
    PierceSpectrum ps;

    ElemSet reg(n);
    reg.set(lat.bottom());
    for (std::size_t e = center.find_first(); e != kNoElem;
         e = center.find_next(e))
        reg.set(e);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Elem> members;
        for (std::size_t a = reg.find_first(); a != kNoElem;
             a = reg.find_next(a))
            members.push_back(static_cast<Elem>(a));
        for (Elem a : members)
            for (Elem b : members) {
                Elem j = lat.join(a, b);
                if (!reg.test(j)) {
                    reg.set(j);
                    grew = true;
                }
            }
    }
    for (std::size_t a = reg.find_first(); a != kNoElem; a = reg.find_next(a))
        ps.regular.push_back(static_cast<Elem>(a));

    for (Elem a : ps.regular) {
        if (a == lat.top()) continue;
        bool maximal = true;
        for (Elem b : ps.regular)
            if (b != a && b != lat.top() && lat.leq(a, b)) maximal = false;
        if (maximal) ps.points.push_back(a);
    }
    const int np = static_cast<int>(ps.points.size());
    if (np > kMaxSpectrumPoints)
        throw ValidationError("TooLarge", "too many regular points");

    auto point_pos = [&](Elem a) {
        auto it = std::find(ps.points.begin(), ps.points.end(), a);
        return it == ps.points.end()
                   ? -1
                   : static_cast<int>(it - ps.points.begin());
    };
    PointSet hit = 0;
    for (Elem p : sr.spec) {
        Elem s = lat.bottom();
        for (std::size_t e = center.find_first(); e != kNoElem;
             e = center.find_next(e))
            if (lat.leq(static_cast<Elem>(e), p))
                s = lat.join(s, static_cast<Elem>(e));
        int pos = point_pos(s);
        if (pos < 0)
            throw InternalCheckError("MaxRegularFailure", "p=" + lat.label(p));
        ps.s_map.push_back(pos);
        hit |= pbit(pos);
    }
    if (hit != full_ground(np))
        throw InternalCheckError("MaxRegularFailure",
                                 "canonical map not onto");

    std::vector<PointSet> basis;
    std::vector<Elem> central;
    for (std::size_t e = center.find_first(); e != kNoElem;
         e = center.find_next(e))
        central.push_back(static_cast<Elem>(e));
    for (Elem e : central) {
        PointSet u = 0;
        for (int k = 0; k < np; ++k)
            if (!lat.leq(e, ps.points[k])) u |= pbit(k);
        basis.push_back(u);
    }
    ps.space = make_space(np, full_ground(np), basis);

    for (Elem e : central) {
        PointSet pre = 0;
        for (std::size_t i = 0; i < ps.s_map.size(); ++i)
            if (!lat.leq(e, ps.points[ps.s_map[i]]))
                pre |= pbit(static_cast<int>(i));
        if (pre != top.d_mask[e] ||
            pre != top.v_mask[q.negation(e)])
            throw InternalCheckError("PierceContinuity",
                                     "preimage at e=" + lat.label(e));
        if (!is_open(top.zariski, pre) || !is_open(top.flat, pre))
            throw InternalCheckError("PierceContinuity",
                                     "preimage not open at e=" + lat.label(e));
    }
    if (!space_properties(ps.space).boolean_space)
        throw InternalCheckError("PierceNotBoolean", "U(e) family");
    return ps;
}

}  // namespace qspec
