#include "pignose/genfun.hpp"

#include "doctest.h"
#include "pignose/errors.hpp"

using namespace pignose;

namespace {

MultiPoly b2_printed() {
    MultiPoly p;
    p.add_term({4, 0, 0}, 1);
    p.add_term({3, 1, 0}, 2);
    p.add_term({3, 1, 1}, 1);
    p.add_term({2, 2, 1}, 1);
    p.add_term({2, 2, 0}, 1);
    p.add_term({2, 0, 0}, 1);
    p.add_term({1, 1, 0}, 1);
    return p;
}

}  // namespace

TEST_CASE("master polynomial at small n") {
    CHECK(b_poly_perms(0) == MultiPoly::one());
    CHECK(b_poly_perms(1) == MultiPoly::y(2) + MultiPoly::monomial({1, 1, 0}));
    CHECK(b_poly_perms(2) == b2_printed());
}

TEST_CASE("coefficient slices") {
    CHECK(b_nk(1, 1) == MultiPoly::t());
    CHECK(b_nk(1, 2) == MultiPoly::one());
    CHECK(b_nk(1, 3).is_zero());
    CHECK(b_nk(0, 0) == MultiPoly::one());
    for (int k = 1; k <= 4; ++k) CHECK(b_nk(2, k) == coeff_extract(b_poly_perms(2), Var::y, k));
}

TEST_CASE("starred coefficients") {
    CHECK(b_star(1, 1) == MultiPoly::t());
    CHECK(b_star(1, 2) == MultiPoly::t());
    CHECK(b_star(1, 0).is_zero());
    CHECK(b_star(1, 3).is_zero());
    // t = 1 kills the extra chi factor.
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 2 * n; ++k)
            CHECK(eval_subst(b_star(n, k), std::nullopt, 1) ==
                  eval_subst(b_nk(n, k), std::nullopt, 1));
}

TEST_CASE("type B q-Eulerian polynomials") {
    MultiPoly e21 = eulerian_b_poly(2, 1);
    MultiPoly expect = MultiPoly::constant(4) + MultiPoly::q(1).scaled(2);
    CHECK(e21 == expect);
    CHECK(eval_subst(e21, std::nullopt, std::nullopt, -1).coeff({0, 0, 0}) == 2);
    CHECK(eval_subst(e21, std::nullopt, std::nullopt, 0).coeff({0, 0, 0}) == 4);
    CHECK(eval_subst(e21, std::nullopt, std::nullopt, 1).coeff({0, 0, 0}) == 6);
    CHECK(eulerian_b_poly(2, 3).is_zero());

    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) CHECK(eulerian_b_poly(n, k) == eulerian_b_poly(n, n - k));
}

TEST_CASE("descent counts") {
    CHECK(eulerian_b_count(2, 0) == 1);
    CHECK(eulerian_b_count(2, 1) == 6);
    CHECK(eulerian_b_count(2, 2) == 1);
    CHECK(eulerian_b_count(1, 0) == 1);
    CHECK(eulerian_b_count(1, 1) == 1);
    for (int n = 0; n <= 5; ++n) {
        Int total = 0;
        for (int k = 0; k <= n; ++k) total += eulerian_b_count(n, k);
        CHECK(total == checked_mul(checked_pow(2, n), factorial(n)));
    }
    // Equality with the q = 1 evaluation of the q-Eulerian polynomial.
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(eulerian_b_count(n, k) ==
                  eval_subst(eulerian_b_poly(n, k), std::nullopt, std::nullopt, 1)
                      .coeff({0, 0, 0}));
}

TEST_CASE("enumeration limit") {
    CHECK_THROWS_AS(gen_table(9), LimitExceededError);
}
