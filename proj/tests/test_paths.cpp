#include "pignose/paths.hpp"

#include <set>

#include "doctest.h"
#include "pignose/errors.hpp"
#include "pignose/genfun.hpp"
#include "test_util.hpp"

using namespace pignose;

TEST_CASE("weights of single-step paths") {
    LabeledMotzkinPath empty;
    CHECK(empty.weight() == MultiPoly::one());

    MotzkinSuffix down = MotzkinSuffix::parse("@1 d:0");
    CHECK(down.weight() == MultiPoly::monomial({1, 1, 0}));  // (yt)^1 q^0

    MotzkinSuffix level = MotzkinSuffix::parse("@0 ly:0");
    CHECK(level.weight() == MultiPoly::y(2));

    MultiPoly n1 = nn_weight_sum(1);
    CHECK(n1 == MultiPoly::y(2) + MultiPoly::monomial({1, 1, 0}));
}

TEST_CASE("the two level steps of length-one paths") {
    std::vector<LabeledMotzkinPath> m1;
    for_each_mn(1, [&](const LabeledMotzkinPath& p) { m1.push_back(p); });
    REQUIRE(m1.size() == 2);
    CHECK(mn_weight_sum(1) == MultiPoly::y(2) + MultiPoly::monomial({1, 1, 0}));
}

TEST_CASE("path sums match the master polynomial") {
    for (int n = 0; n <= 4; ++n) {
        MultiPoly reference = b_poly_perms(n);
        CHECK(mn_weight_sum(n) == reference);
        CHECK(nn_weight_sum(n) == reference);
    }
}

TEST_CASE("index bounds are enforced") {
    LabeledMotzkinPath p;
    p.steps.push_back({StepDir::Level, 3, 1});  // index 1 needs height >= 1
    CHECK_THROWS_AS(p.validate(), InvalidPathError);

    LabeledMotzkinPath q;
    q.steps.push_back({StepDir::Down, 7, 0});  // dips below zero
    CHECK_THROWS_AS(q.validate(), InvalidPathError);

    LabeledMotzkinPath r;
    r.steps.push_back({StepDir::Up, 1, 0});  // does not return to zero
    CHECK_THROWS_AS(r.validate(), InvalidPathError);

    MotzkinSuffix s;
    s.start_height = 1;
    s.steps.push_back({StepDir::Level, false, 1});  // plain level allows 0..h-1
    CHECK_THROWS_AS(s.validate(), InvalidPathError);
}

TEST_CASE("ascent encoding") {
    LabeledMotzkinPath figure = fv1(SignedPerm::parse("3,-5,-2,4,1"));
    CHECK(figure.str() == "U1:0 U2:0 L3:0 D7:1 D8:0");
    CHECK(figure.weight() == MultiPoly::monomial({6, 2, 3}));

    for (int n = 1; n <= 4; ++n) {
        std::vector<int> id;
        for (int i = 1; i <= n; ++i) id.push_back(i);
        LabeledMotzkinPath p = fv1(SignedPerm{id});
        for (const PathStep& s : p.steps) {
            CHECK(s.type == 3);
            CHECK(s.index == 0);
        }
        CHECK(p.weight() == MultiPoly::y(2 * n));
    }

    for (int n = 1; n <= 4; ++n) {
        std::set<std::string> seen;
        MultiPoly total;
        for_each_bn(n, [&](const SignedPerm& pi) {
            LabeledMotzkinPath p = fv1(pi);
            seen.insert(p.str());
            total += p.weight();
            if (stats(pi).neg == 0)
                for (const PathStep& s : p.steps) CHECK(s.type % 2 == 1);
        });
        CHECK(static_cast<Int>(seen.size()) == checked_mul(checked_pow(2, n), factorial(n)));
        CHECK(total == b_poly_perms(n));
    }
}

TEST_CASE("excedance encoding") {
    MotzkinSuffix figure = fz1(SignedPerm::parse("-5,4,2,-3,1"));
    CHECK(figure.start_height == 2);
    CHECK(figure.str() == "@2 lq:1 u:1 d:0 d:1 d:0");
    std::vector<MultiPoly> w = figure.step_weights();
    CHECK(w[0] == MultiPoly::q(1));
    CHECK(w[1] == MultiPoly::monomial({2, 0, 1}));
    CHECK(w[2] == MultiPoly::one());
    CHECK(w[3] == MultiPoly::q(1));
    CHECK(w[4] == MultiPoly::one());

    for (int n = 1; n <= 4; ++n) {
        std::vector<int> id;
        for (int i = 1; i <= n; ++i) id.push_back(i);
        MotzkinSuffix p = fz1(SignedPerm{id});
        CHECK(p.start_height == 0);
        CHECK(p.weight() == MultiPoly::y(2 * n));
    }

    for (int n = 1; n <= 4; ++n) {
        std::set<std::string> seen;
        for_each_bn(n, [&](const SignedPerm& pi) {
            MotzkinSuffix p = fz1(pi);
            StatRecord s = stats(pi);
            CHECK(p.start_height == s.neg);
            CHECK(p.weight() == MultiPoly::monomial({s.fwex, s.neg, crossings(pi)}));
            seen.insert(p.str());
        });
        CHECK(static_cast<Int>(seen.size()) == checked_mul(checked_pow(2, n), factorial(n)));
    }
}

TEST_CASE("encodings are onto the path models") {
    for (int n = 1; n <= 3; ++n) {
        std::set<std::string> mn, fv_images;
        for_each_mn(n, [&](const LabeledMotzkinPath& p) { mn.insert(p.str()); });
        for_each_bn(n, [&](const SignedPerm& pi) { fv_images.insert(fv1(pi).str()); });
        CHECK(mn == fv_images);

        std::set<std::string> nn, fz_images;
        for_each_nn(n, [&](const MotzkinSuffix& p) { nn.insert(p.str()); });
        for_each_bn(n, [&](const SignedPerm& pi) { fz_images.insert(fz1(pi).str()); });
        CHECK(nn == fz_images);
    }
}

TEST_CASE("encodings transport weights on random large permutations") {
    testutil::Rng rng;
    for (int round = 0; round < 200; ++round) {
        SignedPerm pi = testutil::random_signed_perm(rng, 9);
        StatRecord s = stats(pi);
        PatternStats ps = pattern_stats(pi);
        LabeledMotzkinPath p = fv1(pi);  // validates its own index bounds
        CHECK(p.weight() == MultiPoly::monomial({ps.hasc, s.neg, ps.pat}));
        MotzkinSuffix q = fz1(pi);
        CHECK(q.start_height == s.neg);
        CHECK(q.weight() == MultiPoly::monomial({s.fwex, s.neg, crossings(pi)}));
    }
}

TEST_CASE("path text round trip") {
    for_each_mn(3, [&](const LabeledMotzkinPath& p) {
        CHECK(LabeledMotzkinPath::parse(p.str()) == p);
    });
    for_each_nn(2, [&](const MotzkinSuffix& p) { CHECK(MotzkinSuffix::parse(p.str()) == p); });
    CHECK_THROWS_AS(LabeledMotzkinPath::parse("U3:0"), ParseError);  // type 3 is a level step
    CHECK_THROWS_AS(LabeledMotzkinPath::parse("X1:0"), ParseError);
    CHECK_THROWS_AS(MotzkinSuffix::parse("u:0"), ParseError);  // missing start height
}
