#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qspec/errors.hpp"
#include "qspec/instances.hpp"

using namespace qspec;

namespace {

std::vector<Quantale> sample_family() {
    std::vector<Quantale> out;
    out.push_back(fixtures::f5());
    out.push_back(fixtures::non_normal_frame());
    out.push_back(chain_frame(5));
    out.push_back(boolean_frame(3));
    for (long n : {4, 12, 30, 36}) out.push_back(zn_ideals(n));
    out.push_back(product_quantale(zn_ideals(6), chain_frame(3)));
    return out;
}

}  // namespace

TEST_CASE("join and meet tables are the definitional bounds") {
    for (const Quantale& q : sample_family()) {
        const Lattice& lat = q.lattice();
        for (Elem a = 0; a < lat.size(); ++a)
            for (Elem b = 0; b < lat.size(); ++b) {
                auto lub = oracle::naive_lub(lat, a, b);
                auto glb = oracle::naive_glb(lat, a, b);
                REQUIRE(lub.has_value());
                REQUIRE(glb.has_value());
                CHECK(lat.join(a, b) == *lub);
                CHECK(lat.meet(a, b) == *glb);
            }
        CHECK(lat.leq(lat.bottom(), lat.top()));
    }
}

TEST_CASE("from_order rejects structures without bounds or joins") {
    // two incomparable points: no top at all
    CHECK_THROWS_AS(fixtures::from_rows({"10", "01"}), ValidationError);
    // bow tie: x and y have two minimal upper bounds
    CHECK_THROWS_AS(fixtures::from_rows({"111111",  //
                                         "010111",  //
                                         "001111",  //
                                         "000101",  //
                                         "000011",  //
                                         "000001"}),
                    ValidationError);
}

TEST_CASE("distributivity matches the cubic scan") {
    CHECK(fixtures::m3().distributive() == false);
    CHECK(fixtures::n5().distributive() == false);
    for (const Quantale& q : sample_family()) {
        CHECK(q.lattice().distributive() ==
              oracle::naive_distributive(q.lattice()));
        CHECK(q.lattice().distributive());
    }
    CHECK(oracle::naive_distributive(fixtures::m3()) == false);
}

TEST_CASE("complemented elements match the pair scan") {
    for (const Quantale& q : sample_family()) {
        const Lattice& lat = q.lattice();
        const auto naive = oracle::naive_complemented(lat);
        const ElemSet got = lat.complemented();
        CHECK(got.count() == naive.size());
        for (Elem a : naive) CHECK(got.test(a));
    }
    const Quantale z12 = zn_ideals(12);
    const ElemSet b = z12.lattice().complemented();
    for (Elem x = 0; x < z12.size(); ++x) {
        const std::string& l = z12.label(x);
        CHECK(b.test(x) ==
              (l == "1Z" || l == "3Z" || l == "4Z" || l == "12Z"));
    }
}

TEST_CASE("prime elements match the definitional scan") {
    for (const Quantale& q : sample_family()) {
        CHECK(prime_elements(q.lattice(), q.mul_table()) ==
              oracle::naive_m_primes(q));
        // meet-primes are the primes of the same lattice under meet
        CHECK(meet_primes(q.lattice()) ==
              oracle::naive_m_primes(frame_quantale(q.lattice())));
    }
}

TEST_CASE("cover pairs of a chain are the consecutive steps") {
    Quantale q = chain_frame(6);
    const Lattice& lat = q.lattice();
    const auto covers = lat.cover_pairs();
    REQUIRE(covers.size() == 5);
    for (auto [lo, hi] : covers) CHECK(hi == lo + 1);
}

TEST_CASE("join_irreducibles of the boolean frame are its atoms") {
    Quantale q = boolean_frame(3);
    const Lattice& lat = q.lattice();
    const auto ji = lat.join_irreducibles();
    CHECK(ji.size() == 3);
    for (Elem a : ji) CHECK(lat.down_set(a).count() == 2);
}
