#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qspec/classify.hpp"
#include "qspec/instances.hpp"

using namespace qspec;

namespace {

std::vector<Quantale> sample_family() {
    std::vector<Quantale> out;
    out.push_back(fixtures::f5());
    out.push_back(fixtures::non_normal_frame());
    out.push_back(chain_frame(3));
    out.push_back(boolean_frame(3));
    out.push_back(zn_ideals(12));
    out.push_back(zn_ideals(30));
    out.push_back(zn_ideals(36));
    out.push_back(product_quantale(zn_ideals(6), chain_frame(3)));
    return out;
}

ClassReport classify(const Quantale& q) {
    SpectrumReport sr = compute_spectra(q);
    return classify_basic(q, sr, boolean_center(q));
}

void expect_flags(const ClassReport& r, bool hyper, bool normal, bool b_normal,
                  bool mp, bool pf, bool semiprime) {
    CHECK(r.hyperarchimedean == hyper);
    CHECK(r.normal == normal);
    CHECK(r.b_normal == b_normal);
    CHECK(r.mp == mp);
    CHECK(r.pf == pf);
    CHECK(r.semiprime == semiprime);
}

}  // namespace

TEST_CASE("class flags on the reference instances") {
    // hyper, normal, b-normal, mp, pf, semiprime
    expect_flags(classify(zn_ideals(12)), true, true, true, true, false, false);
    expect_flags(classify(fixtures::f5()), false, true, true, false, false,
                 true);
    expect_flags(classify(chain_frame(3)), false, true, true, true, true, true);
    expect_flags(classify(fixtures::non_normal_frame()), false, false, false,
                 true, true, true);
    expect_flags(classify(zn_ideals(30)), true, true, true, true, true, true);
    expect_flags(classify(boolean_frame(3)), true, true, true, true, true,
                 true);
}

TEST_CASE("predicates agree with the quantifier-sweep oracles") {
    for (const Quantale& q : sample_family()) {
        SpectrumReport sr = compute_spectra(q);
        ElemSet center = boolean_center(q);
        std::string w;
        CHECK(is_hyperarchimedean(q, center, &w) ==
              oracle::naive_hyperarchimedean(q));
        CHECK(is_normal(q, &w) == oracle::naive_normal(q));
        CHECK(is_mp(q, sr, &w) == oracle::naive_mp(q));
        CHECK(is_pf(q, &w) == oracle::naive_pf(q));
    }
}

TEST_CASE("failing predicates carry witnesses") {
    Quantale q = fixtures::f5();
    ClassReport r = classify(q);
    CHECK_FALSE(r.hyperarchimedean);
    CHECK_FALSE(r.hyper_witness.empty());
    // The double point below c: both a and b are minimal primes under c.
    CHECK_FALSE(r.mp);
    CHECK(r.mp_witness.find("c") != std::string::npos);
    CHECK_FALSE(r.pf);
    CHECK_FALSE(r.pf_witness.empty());

    ClassReport nn = classify(fixtures::non_normal_frame());
    CHECK_FALSE(nn.normal);
    CHECK_FALSE(nn.normal_witness.empty());
    CHECK_FALSE(nn.b_normal);
}

TEST_CASE("printed separation condition collapses to orthogonality") {
    // The verbatim reading never constrains the separators, so it demands
    // cd = 0 for every pair -- and top*top = top already refutes that on
    // every instance here. The corrected reading stays informative.
    for (Quantale q : {chain_frame(2), chain_frame(3), zn_ideals(12),
                       Quantale(boolean_frame(2))}) {
        std::string w;
        CHECK_FALSE(is_b_normal_verbatim(q, boolean_center(q), &w));
        CHECK_FALSE(w.empty());
    }
    CHECK(classify(zn_ideals(12)).b_normal_verbatim == false);
    CHECK(classify(zn_ideals(12)).b_normal == true);
}

TEST_CASE("lattice-level separation predicates") {
    CHECK(is_normal_lattice(fixtures::f5().lattice(), nullptr));
    CHECK_FALSE(is_normal_lattice(fixtures::non_normal_frame().lattice(),
                                  nullptr));
    CHECK(is_b_normal_lattice(boolean_frame(3).lattice(), nullptr));
    CHECK(is_conormal_lattice(boolean_frame(3).lattice(), nullptr));
    // In F5 the meet a∧b = 0 cannot be split: the only u with a∧u = 0 is 0
    // or b, and b∨b = c stays short of the top.
    CHECK_FALSE(is_conormal_lattice(fixtures::f5().lattice(), nullptr));
    std::string w;
    CHECK_FALSE(is_normal_lattice(fixtures::non_normal_frame().lattice(), &w));
    CHECK_FALSE(w.empty());
}

TEST_CASE("normality of the quantale is separation in its lattice") {
    for (const Quantale& q : sample_family())
        if (q.is_frame())
            CHECK(is_normal(q, nullptr) == is_normal_lattice(q.lattice(),
                                                             nullptr));
}
