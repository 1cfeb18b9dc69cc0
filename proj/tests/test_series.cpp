#include "pignose/series.hpp"

#include "doctest.h"
#include "pignose/ansatz.hpp"
#include "pignose/errors.hpp"
#include "test_util.hpp"

using namespace pignose;

namespace {

// z/((1+z)(1+y^2 z)) truncated.
Series reversion_target(int order) {
    Series den = Series::constant(MultiPoly::one(), order);
    if (order >= 1) den[1] = MultiPoly::one() + MultiPoly::y(2);
    if (order >= 2) den[2] = MultiPoly::y(2);
    return den.inverse().shifted(1);
}

}  // namespace

TEST_CASE("series arithmetic truncates to the smaller order") {
    Series a = Series::z(5);
    Series b = Series::constant(MultiPoly::one(), 3);
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
}

TEST_CASE("series inverse") {
    Series f = Series::constant(MultiPoly::one(), 6);
    f[1] = -MultiPoly::q(1);
    Series g = f.inverse();
    for (int k = 0; k <= 6; ++k) CHECK(g[k] == MultiPoly::q(k));
    CHECK((f * g)[0] == MultiPoly::one());
    for (int k = 1; k <= 6; ++k) CHECK((f * g)[k].is_zero());

    Series bad = Series::constant(MultiPoly::constant(2), 3);
    CHECK_THROWS_AS(bad.inverse(), BadLowestTermsError);
}

TEST_CASE("J-fraction expansion matches hand expansions") {
    auto gamma = [](int h) { return cf_gamma(h); };
    auto lambda = [](int h) { return cf_lambda(h); };

    Series s0 = series_jfraction(gamma, lambda, 0);
    CHECK(s0[0] == MultiPoly::one());

    Series s1 = series_jfraction(gamma, lambda, 1);
    CHECK(s1[0] == MultiPoly::one());
    CHECK(s1[1] == MultiPoly::y(2) + MultiPoly::monomial({1, 1, 0}));  // gamma_0 = y^2 + ty

    Series s2 = series_jfraction(gamma, lambda, 2);
    CHECK(s2[2] == cf_gamma(0) * cf_gamma(0) + cf_lambda(1));
}

TEST_CASE("J-fraction is insensitive to extra depth") {
    for (int order : {3, 6, 9}) {
        Series base = series_jfraction(cf_gamma, cf_lambda, order);
        Series deep = series_jfraction(cf_gamma, cf_lambda, order, 7);
        CHECK(base == deep);
    }
}

TEST_CASE("series reversion") {
    CHECK(series_reversion(Series::z(5)) == Series::z(5));

    Series c = series_reversion(reversion_target(2));
    CHECK(c[1] == MultiPoly::one());
    CHECK(c[2] == MultiPoly::one() + MultiPoly::y(2));  // z + (1+y^2) z^2 + ...

    Series not_unit = Series::z(3).scaled(MultiPoly::constant(2));
    CHECK_THROWS_AS(series_reversion(not_unit), BadLowestTermsError);
    CHECK_THROWS_AS(series_reversion(Series::constant(MultiPoly::one(), 3)),
                    BadLowestTermsError);
}

TEST_CASE("reversion composed with the original is the identity") {
    for (int order = 2; order <= 12; order += 2) {
        Series f = reversion_target(order);
        Series c = series_reversion(f);
        CHECK(f.composed_with(c) == Series::z(order));
    }
    // A second series with different low-order terms.
    testutil::Rng rng;
    for (int round = 0; round < 10; ++round) {
        Series f(8);
        f[1] = MultiPoly::one();
        for (int k = 2; k <= 8; ++k) f[k] = testutil::random_poly(rng, 3, 2, 5);
        Series c = series_reversion(f);
        CHECK(f.composed_with(c) == Series::z(8));
    }
}
