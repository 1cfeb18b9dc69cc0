#include "pignose/ansatz.hpp"

#include "doctest.h"
#include "pignose/errors.hpp"
#include "pignose/genfun.hpp"

using namespace pignose;

TEST_CASE("solution coefficients") {
    AnsatzSystem s1 = solution1(2);
    CHECK(s1.d.entry(0, 0) == MultiPoly::one());
    CHECK(s1.d.entry(0, 1) == MultiPoly::one() + MultiPoly::monomial({1, 1, 1}));
    CHECK(s1.d.entry(1, 0).is_zero());
    CHECK(s1.d.entry(1, 1) == MultiPoly::one() + MultiPoly::q(1));
    CHECK(s1.v == std::vector<MultiPoly>{MultiPoly::one(), MultiPoly::zero()});

    AnsatzSystem s2 = solution2(2);
    CHECK(s2.d.entry(0, 0) == MultiPoly::one());
    CHECK(s2.d.entry(0, 1) == MultiPoly::one());
    CHECK(s2.e.entry(1, 0) == MultiPoly::one());
    CHECK(s2.e.entry(1, 1) == MultiPoly::one());
    CHECK(s2.w[1] == MultiPoly::monomial({1, 1, 0}));
    CHECK(s2.v == std::vector<MultiPoly>{MultiPoly::one(), MultiPoly::zero()});
}

TEST_CASE("defining relations hold on the interior window") {
    CHECK(verify_relations(solution1(6)).ok);
    CHECK(verify_relations(solution2(6)).ok);

    // Negative control: perturb one band entry.
    AnsatzSystem bad = solution1(6);
    bad.e.main[2] += MultiPoly::one();
    RelationReport r = verify_relations(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.relation == "DE = qED + D + E");
}

TEST_CASE("moment evaluation") {
    MultiPoly b1 = MultiPoly::y(2) + MultiPoly::monomial({1, 1, 0});
    CHECK(ansatz_bn(1, 1) == b1);
    CHECK(ansatz_bn(1, 2) == b1);
    CHECK(ansatz_bn(2, 1) == b_poly_perms(2));
    CHECK(ansatz_bn(2, 2) == b_poly_perms(2));

    for (int n = 0; n <= 5; ++n)
        for (int which : {1, 2}) {
            MultiPoly base = ansatz_bn(n, which);
            AnsatzSystem sys = which == 1 ? solution1(n + 3) : solution2(n + 3);
            CHECK(ansatz_bn(n, sys) == base);
        }
    CHECK_THROWS_AS(ansatz_bn(3, solution1(3)), TruncationError);
}

TEST_CASE("q-derivative recurrence") {
    CHECK(recurrence_bn(0) == MultiPoly::one());
    CHECK(recurrence_bn(1) == MultiPoly::y(2) + MultiPoly::monomial({1, 1, 0}));
    for (int n = 0; n <= 5; ++n) CHECK(recurrence_bn(n) == b_poly_perms(n));
}

TEST_CASE("continued-fraction coefficients") {
    CHECK(cf_gamma(0) == MultiPoly::y(2) + MultiPoly::monomial({1, 1, 0}));
    MultiPoly lambda1 = MultiPoly::y() * (MultiPoly::y() + MultiPoly::t()) *
                        (MultiPoly::one() + MultiPoly::monomial({1, 1, 1}));
    CHECK(cf_lambda(1) == lambda1);

    AnsatzSystem s1 = solution1(8);
    MultiPoly y2 = MultiPoly::y(2);
    for (int h = 0; h <= 6; ++h) {
        CHECK(cf_gamma(h) == y2 * s1.d.entry(h, h) + s1.e.entry(h, h));
        CHECK(cf_lambda(h + 1) ==
              (y2 * s1.d.entry(h, h + 1) + s1.e.entry(h, h + 1)) * s1.e.entry(h + 1, h));
    }

    Series s = cf_series(2);
    CHECK(s[0] == MultiPoly::one());
    CHECK(s[1] == MultiPoly::y(2) + MultiPoly::monomial({1, 1, 0}));
    CHECK(s[2] == b_poly_perms(2));
}

TEST_CASE("closed forms at t = 1") {
    CHECK(closed_form_y1q(1, 1) == MultiPoly::y(2) + MultiPoly::y());
    MultiPoly expect2;  // y^4 + (2+q) y^3 + (q+2) y^2 + y
    expect2.add_term({4, 0, 0}, 1);
    expect2.add_term({3, 0, 0}, 2);
    expect2.add_term({3, 0, 1}, 1);
    expect2.add_term({2, 0, 1}, 1);
    expect2.add_term({2, 0, 0}, 2);
    expect2.add_term({1, 0, 0}, 1);
    CHECK(closed_form_y1q(2, 1) == expect2);
    for (int n = 0; n <= 5; ++n) {
        MultiPoly f1 = closed_form_y1q(n, 1);
        CHECK(f1 == closed_form_y1q(n, 2));
        CHECK(f1 == eval_subst(b_poly_perms(n), std::nullopt, 1));
    }
}

TEST_CASE("closed form at t = 0") {
    CHECK(closed_form_y0q(1) == MultiPoly::y(2));
    for (int n = 0; n <= 5; ++n)
        CHECK(closed_form_y0q(n) == eval_subst(b_poly_perms(n), std::nullopt, 0));
}

TEST_CASE("type B Narayana values") {
    CheckReport r2 = narayana_b_check(2);
    CHECK(r2.ok);
    MultiPoly b210 = eval_subst(b_poly_perms(2), std::nullopt, 1, 0);
    MultiPoly expect;  // y^4 + 2y^3 + 2y^2 + y
    expect.add_term({4, 0, 0}, 1);
    expect.add_term({3, 0, 0}, 2);
    expect.add_term({2, 0, 0}, 2);
    expect.add_term({1, 0, 0}, 1);
    CHECK(b210 == expect);
    for (int n = 1; n <= 5; ++n) CHECK(narayana_b_check(n).ok);
}

TEST_CASE("S-fraction lemmas") {
    CHECK(schroeder_lemma_check(0).ok);
    CHECK(schroeder_lemma_check(6).ok);
}

TEST_CASE("coefficients of the reverted series") {
    CHECK(lagrange_check(0, 2).ok);
    for (int k = 0; k <= 2; ++k) CHECK(lagrange_check(k, 6).ok);
}
