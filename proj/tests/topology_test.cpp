#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qspec/instances.hpp"
#include "qspec/topology.hpp"

using namespace qspec;

namespace {

std::vector<Quantale> sample_family() {
    std::vector<Quantale> out;
    out.push_back(fixtures::f5());
    out.push_back(fixtures::non_normal_frame());
    out.push_back(chain_frame(5));
    out.push_back(boolean_frame(3));
    out.push_back(zn_ideals(12));
    out.push_back(zn_ideals(30));
    out.push_back(product_quantale(zn_ideals(6), chain_frame(3)));
    return out;
}

Elem by_label(const Quantale& q, const std::string& want) {
    for (Elem a = 0; a < q.size(); ++a)
        if (q.label(a) == want) return a;
    FAIL("no element labelled ", want);
    return -1;
}

int point_of(const SpectralTopologies& top, Elem e) {
    return top.point_index[e];
}

void check_against_oracle(const FiniteSpace& sp) {
    REQUIRE(sp.materialized);
    SpaceProperties p = space_properties(sp);
    CHECK(p.t0 == oracle::naive_t0(sp));
    CHECK(p.t1 == oracle::naive_t1(sp));
    CHECK(p.hausdorff == oracle::naive_hausdorff(sp));
    CHECK(p.discrete == oracle::naive_discrete(sp));
    CHECK(p.zero_dimensional == oracle::naive_zero_dimensional(sp));
    CHECK(p.normal_space == oracle::naive_normal_space(sp));
    CHECK(p.compact);
    CHECK(p.boolean_space == (p.hausdorff && p.zero_dimensional));
    // Closure agrees with the complement-of-opens description on all subsets
    // (grounds here are small enough for the full sweep).
    std::vector<int> live = oracle::live_points(sp);
    REQUIRE(live.size() <= 12);
    for (PointSet pick = 0; pick < (PointSet(1) << live.size()); ++pick) {
        PointSet s = 0;
        for (std::size_t i = 0; i < live.size(); ++i)
            if (pick >> i & 1) s |= PointSet(1) << live[i];
        CHECK(closure(sp, s) == oracle::naive_closure(sp, s));
    }
}

}  // namespace

TEST_CASE("spaces built from a basis behave") {
    SUBCASE("discrete on three points") {
        FiniteSpace sp = make_space(3, 0b111, {0b001, 0b010, 0b100});
        CHECK(sp.opens.size() == 8);
        SpaceProperties p = space_properties(sp);
        CHECK(p.discrete);
        CHECK(p.hausdorff);
        CHECK(p.boolean_space);
        CHECK(clopen_sets(sp).size() == 8);
    }
    SUBCASE("indiscrete on three points") {
        FiniteSpace sp = make_space(3, 0b111, {0b111});
        CHECK(sp.opens.size() == 2);
        CHECK_FALSE(space_properties(sp).t0);
    }
    SUBCASE("two-point space with one open point") {
        FiniteSpace sp = make_space(2, 0b11, {0b01, 0b11});
        CHECK(is_open(sp, 0b01));
        CHECK_FALSE(is_open(sp, 0b10));
        CHECK(is_closed(sp, 0b10));
        CHECK(is_clopen(sp, 0b00));
        CHECK(is_clopen(sp, 0b11));
        CHECK(closure(sp, 0b01) == 0b11);
        SpaceProperties p = space_properties(sp);
        CHECK(p.t0);
        CHECK_FALSE(p.t1);
    }
    SUBCASE("subspace and refinement") {
        FiniteSpace sp = make_space(3, 0b111, {0b011, 0b110, 0b111});
        FiniteSpace sub = subspace(sp, 0b011);
        CHECK(is_open(sub, 0b011));
        CHECK(same_topology(sub, sub));
        FiniteSpace disc = make_space(3, 0b111, {0b001, 0b010, 0b100});
        CHECK(finer(disc, sp));
        CHECK_FALSE(finer(sp, disc));
        CHECK_FALSE(same_topology(sp, disc));
    }
}

TEST_CASE("spectrum topologies on the five-element frame") {
    Quantale q = fixtures::f5();
    SpectrumReport sr = compute_spectra(q);
    SpectralTopologies top = build_topologies(q, sr);

    Elem a = by_label(q, "a"), b = by_label(q, "b"), c = by_label(q, "c");
    REQUIRE(top.points == std::vector<Elem>{a, b, c});
    int pa = point_of(top, a), pb = point_of(top, b), pc = point_of(top, c);

    CHECK(top.d_mask[a] == PointSet(1) << pb);
    CHECK(top.d_mask[b] == PointSet(1) << pa);
    CHECK(top.d_mask[c] == ((PointSet(1) << pa) | (PointSet(1) << pb)));
    CHECK(top.d_mask[q.bottom()] == 0);
    CHECK(top.d_mask[q.top()] == 0b111);
    CHECK(top.v_mask[a] == ((PointSet(1) << pa) | (PointSet(1) << pc)));

    CHECK(closure(top.zariski, PointSet(1) << pa) ==
          ((PointSet(1) << pa) | (PointSet(1) << pc)));
    CHECK(closure(top.flat, PointSet(1) << pc) == 0b111);
    CHECK(closure(top.flat, PointSet(1) << pa) == PointSet(1) << pa);

    CHECK(clopen_sets(top.zariski).size() == 2);
    CHECK(space_properties(top.patch).discrete);
    CHECK(finer(top.patch, top.zariski));
    CHECK(finer(top.patch, top.flat));

    CHECK(top.max_mask == PointSet(1) << pc);
    CHECK(top.min_mask == ((PointSet(1) << pa) | (PointSet(1) << pb)));
    CHECK(space_properties(top.max_z).discrete);
    CHECK(space_properties(top.min_f).discrete);
}

TEST_CASE("space properties match the full-open-family oracles") {
    for (const Quantale& q : sample_family()) {
        SpectrumReport sr = compute_spectra(q);
        SpectralTopologies top = build_topologies(q, sr);
        for (const FiniteSpace* sp :
             {&top.zariski, &top.flat, &top.patch, &top.max_z, &top.max_f,
              &top.min_z, &top.min_f})
            check_against_oracle(*sp);
    }
}

TEST_CASE("flat closures are unions of spectrum down-sets") {
    for (const Quantale& q : sample_family()) {
        SpectrumReport sr = compute_spectra(q);
        SpectralTopologies top = build_topologies(q, sr);
        const int np = int(sr.spec.size());
        REQUIRE(np <= 12);
        for (PointSet s = 0; s < (PointSet(1) << np); ++s) {
            PointSet expect = 0;
            for (int i = 0; i < np; ++i)
                if (s >> i & 1) expect |= top.lambda_mask[i];
            CHECK(closure(top.flat, s) == expect);
        }
    }
}

TEST_CASE("topology fact battery accepts the sample") {
    for (const Quantale& q : sample_family()) {
        SpectrumReport sr = compute_spectra(q);
        SpectralTopologies top = build_topologies(q, sr);
        std::string w;
        CHECK_MESSAGE(check_topology_facts(q, sr, top, &w), w);
    }
}

TEST_CASE("pierce spectrum of the reference instances") {
    SUBCASE("ideals of Z/12") {
        Quantale q = zn_ideals(12);
        SpectrumReport sr = compute_spectra(q);
        SpectralTopologies top = build_topologies(q, sr);
        PierceSpectrum pc = build_pierce(q, sr, boolean_center(q), top);

        std::vector<std::string> reg;
        for (Elem e : pc.regular) reg.push_back(q.label(e));
        CHECK(reg == std::vector<std::string>{"1Z", "3Z", "4Z", "12Z"});

        std::vector<std::string> pts;
        for (Elem e : pc.points) pts.push_back(q.label(e));
        CHECK(pts == std::vector<std::string>{"3Z", "4Z"});

        // Spectrum points ascend as {2Z, 3Z}; the canonical map sends 2Z to
        // 4Z (the regular element it sits under) and 3Z to itself.
        REQUIRE(pc.s_map.size() == 2);
        CHECK(q.label(pc.points[pc.s_map[0]]) == "4Z");
        CHECK(q.label(pc.points[pc.s_map[1]]) == "3Z");

        SpaceProperties p = space_properties(pc.space);
        CHECK(p.boolean_space);
        CHECK(p.discrete);
    }
    SUBCASE("chains collapse to a point") {
        Quantale q = chain_frame(4);
        SpectrumReport sr = compute_spectra(q);
        SpectralTopologies top = build_topologies(q, sr);
        PierceSpectrum pc = build_pierce(q, sr, boolean_center(q), top);
        CHECK(pc.points.size() == 1);
        CHECK(pc.points[0] == q.bottom());
        for (int s : pc.s_map) CHECK(s == 0);
    }
    SUBCASE("boolean frames are their own pierce space") {
        Quantale q = boolean_frame(3);
        SpectrumReport sr = compute_spectra(q);
        SpectralTopologies top = build_topologies(q, sr);
        PierceSpectrum pc = build_pierce(q, sr, boolean_center(q), top);
        CHECK(pc.regular.size() == 8);
        CHECK(pc.points.size() == 3);
        // On a Boolean frame the canonical map is a bijection.
        std::vector<bool> hit(pc.points.size(), false);
        for (int s : pc.s_map) hit[s] = true;
        for (bool h : hit) CHECK(h);
    }
}
