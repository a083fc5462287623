#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qspec/errors.hpp"
#include "qspec/instances.hpp"
#include "qspec/quantale.hpp"

using namespace qspec;

namespace {

std::vector<Quantale> sample_family() {
    std::vector<Quantale> out;
    out.push_back(fixtures::f5());
    out.push_back(fixtures::non_normal_frame());
    out.push_back(chain_frame(5));
    out.push_back(boolean_frame(3));
    out.push_back(zn_ideals(12));
    out.push_back(zn_ideals(36));
    out.push_back(product_quantale(zn_ideals(6), chain_frame(3)));
    return out;
}

Elem by_label(const Quantale& q, const std::string& want) {
    for (Elem a = 0; a < q.size(); ++a)
        if (q.label(a) == want) return a;
    FAIL("no element labelled ", want);
    return -1;
}

std::string law_name(const ValidationError& e) {
    const std::string what = e.what();
    return what.substr(0, what.find(':'));
}

}  // namespace

TEST_CASE("validation accepts every generated instance") {
    for (const Quantale& q : sample_family()) CHECK_NOTHROW(validate_quantale(q));
}

TEST_CASE("validation names the first broken law") {
    Lattice chain3 = fixtures::from_rows({"111", "011", "001"}, {"0", "a", "1"});

    // a*1 = a but 1*a = 0.
    Quantale skew(chain3, {0, 0, 0, 0, 0, 1, 0, 0, 2});
    CHECK_THROWS_WITH_AS(validate_quantale(skew),
                         doctest::Contains("NotCommutative"), ValidationError);

    // Symmetric, but a*1 = 0.
    Quantale shrunk(chain3, {0, 0, 0, 0, 0, 0, 0, 0, 2});
    CHECK_THROWS_WITH_AS(validate_quantale(shrunk),
                         doctest::Contains("NotIntegral"), ValidationError);

    // b*(a|b) = b*b = 0 while b*a | b*b = a.
    Lattice chain4 = fixtures::from_rows({"1111", "0111", "0011", "0001"},
                                         {"0", "a", "b", "1"});
    Quantale bent(chain4, {0, 0, 0, 0,  //
                           0, 0, 1, 1,  //
                           0, 1, 0, 2,  //
                           0, 1, 2, 3});
    CHECK_THROWS_WITH_AS(validate_quantale(bent),
                         doctest::Contains("NotJoinDistributive"),
                         ValidationError);

    try {
        validate_quantale(fixtures::broken_assoc());
        FAIL("broken table validated");
    } catch (const ValidationError& e) {
        CHECK(law_name(e) == "NotAssociative");
        CHECK(std::string(e.what()).find("a, b, b") != std::string::npos);
    }
}

TEST_CASE("residuals agree with the definitional join") {
    for (const Quantale& q : sample_family()) {
        for (Elem a = 0; a < q.size(); ++a) {
            for (Elem b = 0; b < q.size(); ++b)
                CHECK(q.residual(a, b) == oracle::naive_residual(q, a, b));
            CHECK(q.negation(a) == q.residual(a, q.bottom()));
        }
        // The adjunction itself, spot-checked through the oracle value.
        CHECK(q.residual(q.top(), q.bottom()) == q.bottom());
        CHECK(q.residual(q.bottom(), q.bottom()) == q.top());
    }
}

TEST_CASE("power chains descend and stabilize") {
    Quantale q = zn_ideals(8);  // 1Z > 2Z > 4Z > 8Z
    Elem two = by_label(q, "2Z");
    CHECK(q.power(two, 1) == two);
    CHECK(q.power(two, 2) == by_label(q, "4Z"));
    CHECK(q.power(two, 3) == by_label(q, "8Z"));
    CHECK(q.power(two, 4) == by_label(q, "8Z"));
    CHECK(q.power_limit(two) == by_label(q, "8Z"));
    CHECK(q.stabilization_index(two) == 3);
    CHECK(q.power_limit(q.top()) == q.top());
    CHECK(q.stabilization_index(q.top()) == 1);
    CHECK_THROWS_AS((void)q.power(two, 0), ValidationError);

    for (const Quantale& s : sample_family())
        for (Elem a = 0; a < s.size(); ++a) {
            int k = s.stabilization_index(a);
            CHECK(s.power(a, k) == s.power_limit(a));
            CHECK(s.mul(s.power_limit(a), a) == s.power_limit(a));
            if (k > 1) CHECK(s.power(a, k - 1) != s.power_limit(a));
        }
}

TEST_CASE("frames are exactly the meet-multiplied instances") {
    CHECK(fixtures::f5().is_frame());
    CHECK(chain_frame(4).is_frame());
    CHECK(zn_ideals(30).is_frame());   // squarefree modulus
    CHECK_FALSE(zn_ideals(12).is_frame());
    CHECK_FALSE(zn_ideals(36).is_frame());
}

TEST_CASE("boolean center matches raw complement search") {
    for (const Quantale& q : sample_family()) {
        ElemSet center = boolean_center(q);
        std::vector<Elem> raw = oracle::naive_complemented(q.lattice());
        ElemSet raw_mask(q.size());
        for (Elem e : raw) raw_mask.set(e);
        CHECK(center == raw_mask);
        for (Elem e = 0; e < q.size(); ++e)
            if (center.test(e)) {
                Elem c = center_complement(q, e);
                CHECK(q.join(e, c) == q.top());
                CHECK(q.meet(e, c) == q.bottom());
                CHECK(c == q.negation(e));
            }
    }

    Quantale z12 = zn_ideals(12);
    ElemSet center = boolean_center(z12);
    std::vector<std::string> got;
    for (Elem e = 0; e < z12.size(); ++e)
        if (center.test(e)) got.push_back(z12.label(e));
    CHECK(got == std::vector<std::string>{"1Z", "3Z", "4Z", "12Z"});
    CHECK(center_complement(z12, by_label(z12, "3Z")) == by_label(z12, "4Z"));

    CHECK(boolean_center(boolean_frame(3)).count() == 8);
    CHECK(boolean_center(fixtures::f5()).count() == 2);
    CHECK(boolean_center(chain_frame(5)).count() == 2);
}

TEST_CASE("per-instance law batteries accept the sample") {
    for (const Quantale& q : sample_family()) {
        std::string w;
        CHECK_MESSAGE(check_comaximal_laws(q, &w), w);
        CHECK_MESSAGE(check_residuation_laws(q, &w), w);
        CHECK_MESSAGE(check_center_laws(q, boolean_center(q), &w), w);
    }
}

TEST_CASE("intervals rejoin products above the floor") {
    Quantale z12 = zn_ideals(12);
    IntervalQuantale iv = interval_quantale(z12, by_label(z12, "6Z"));

    CHECK(iv.q.size() == 4);  // 1Z, 2Z, 3Z, 6Z
    CHECK(iv.floor == by_label(z12, "6Z"));
    CHECK(iv.q.label(iv.q.bottom()) == "6Z");
    CHECK(iv.q.label(iv.q.top()) == "1Z");
    CHECK(iv.q.is_frame());  // 2Z*2Z = 4Z rejoins to 2Z, so mul is meet here

    for (int i = 0; i < iv.q.size(); ++i)
        CHECK(iv.from_parent[iv.to_parent[i]] == i);
    for (Elem x = 0; x < z12.size(); ++x) {
        Elem lifted = raise_into(z12, iv, x);
        CHECK(iv.to_parent[lifted] == z12.join(x, iv.floor));
    }

    // Morphism property of the lift, stated directly.
    for (Elem x = 0; x < z12.size(); ++x)
        for (Elem y = 0; y < z12.size(); ++y) {
            Elem lhs = raise_into(z12, iv, z12.mul(x, y));
            Elem rhs = iv.q.mul(raise_into(z12, iv, x), raise_into(z12, iv, y));
            CHECK(lhs == rhs);
        }

    IntervalQuantale whole = interval_quantale(z12, z12.bottom());
    CHECK(whole.q.size() == z12.size());
    IntervalQuantale point = interval_quantale(z12, z12.top());
    CHECK(point.q.size() == 1);
}
