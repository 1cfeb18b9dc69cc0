#include "pignose/matching.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "pignose/errors.hpp"
#include "pignose/genfun.hpp"
#include "test_util.hpp"

using namespace pignose;

TEST_CASE("standardization") {
    OrderedMatching m = OrderedMatching::parse("(2,6);(5,3);(9,4);(7,8)");
    CHECK(standardize(m) == OrderedMatching::parse("(1,5);(4,2);(8,3);(6,7)"));
    OrderedMatching s = standardize(m);
    CHECK(standardize(s) == s);
}

TEST_CASE("rotation") {
    OrderedMatching m = OrderedMatching::parse("(1,5);(4,2);(8,3);(6,7)");
    CHECK(rho(m) == OrderedMatching::parse("(8,4);(3,1);(7,2);(5,6)"));
    CHECK(rho_iter(m, 8) == m);
    CHECK_THROWS_AS(rho(OrderedMatching::parse("(2,6);(5,3)")), BadGroundError);

    // Crossing counts survive rotation for pignose matchings.
    for (int n = 1; n <= 4; ++n)
        for_each_sn(n, [&](const std::vector<int>& sigma) {
            OrderedMatching p = pignose_matching(sigma);
            int cro = matching_crossings(p);
            OrderedMatching r = p;
            for (int k = 1; k <= 2 * n; ++k) {
                r = rho(r);
                CHECK(matching_crossings(r) == cro);
            }
        });
}

TEST_CASE("reversal") {
    OrderedMatching m = OrderedMatching::parse("(1,5);(4,2);(8,3);(6,7)");
    CHECK(reverse(reverse(m)) == m);
    CHECK(matching_crossings(reverse(m)) == matching_crossings(m));
    CHECK(reverse(OrderedMatching::parse("(1,2)")) == OrderedMatching::parse("(2,1)"));
}

TEST_CASE("crossings and the pignose test") {
    CHECK(matching_crossings(OrderedMatching::parse("(1,4);(2,3)")) == 0);
    CHECK(matching_crossings(OrderedMatching::parse("(1,3);(2,4)")) == 1);
    for_each_sn(3, [&](const std::vector<int>& sigma) {
        CHECK(is_pignose(pignose_matching(sigma)));
    });
    CHECK_FALSE(is_pignose(OrderedMatching::parse("(2,1);(3,4)")));
    // Pignose matchings carry the crossing number of the permutation.
    for_each_sn(4, [&](const std::vector<int>& sigma) {
        CHECK(matching_crossings(pignose_matching(sigma)) == crossings(SignedPerm{sigma}));
    });
}

TEST_CASE("spiral splitting") {
    // Sign-free permutations split to their plain pignose matching.
    for_each_sn(3, [&](const std::vector<int>& sigma) {
        CHECK(split_spirals(SignedPerm{sigma}) == pignose_matching(sigma));
    });

    OrderedMatching m = split_spirals(SignedPerm::parse("3,-4,-2,1"));
    CHECK(m == OrderedMatching::parse("(5,10);(7,4);(3,12);(9,2);(1,8);(11,6)"));
    CHECK(is_pignose(m));

    for_each_bn(3, [&](const SignedPerm& pi) {
        if (pi.image(1) < 0) return;
        OrderedMatching split = split_spirals(pi);
        CHECK(split.size() == stats(pi).neg + 3);
        CHECK(is_pignose(split));
    });
    CHECK_THROWS_AS(split_spirals(SignedPerm::parse("-1,2")), PrecondFirstNegativeError);
}

TEST_CASE("the symmetry bijection") {
    CHECK(phi(SignedPerm::parse("3,-4,-2,1")) == SignedPerm::parse("-3,4,-1,-2"));
    CHECK(phi(SignedPerm::parse("1")) == SignedPerm::parse("-1"));

    for (int n = 1; n <= 3; ++n) {
        std::set<SignedPerm> images;
        int plus = 0;
        for_each_bn(n, [&](const SignedPerm& pi) {
            if (pi.image(1) < 0) return;
            ++plus;
            SignedPerm out = phi(pi);
            CHECK(out.image(1) < 0);
            CHECK(crossings(out) == crossings(pi));
            CHECK(stats(out).neg == stats(pi).neg + 1);
            CHECK(stats(out).fwex == 2 * n + 1 - stats(pi).fwex);
            images.insert(out);
        });
        CHECK(static_cast<int>(images.size()) == plus);
    }
}

TEST_CASE("symmetry consequences for the refined polynomials") {
    // t B+_{n,k} = B-_{n,2n+1-k} and the starred symmetry, n <= 3.
    for (int n = 1; n <= 3; ++n) {
        std::map<int, MultiPoly> plus, minus;
        for_each_bn(n, [&](const SignedPerm& pi) {
            StatRecord s = stats(pi);
            MultiPoly term = MultiPoly::monomial({0, s.neg, crossings(pi)});
            if (pi.image(1) > 0)
                plus[s.fwex] += term;
            else
                minus[s.fwex] += term;
        });
        for (int k = 1; k <= 2 * n; ++k) {
            CHECK(MultiPoly::t() * plus[k] == minus[2 * n + 1 - k]);
            CHECK(b_star(n, k) == b_star(n, 2 * n + 1 - k));
        }
    }
}

TEST_CASE("the bijection transports statistics on random large permutations") {
    testutil::Rng rng;
    int tried = 0;
    while (tried < 150) {
        SignedPerm pi = testutil::random_signed_perm(rng, 8);
        if (pi.image(1) < 0) continue;
        ++tried;
        SignedPerm out = phi(pi);
        CHECK(out.image(1) < 0);
        CHECK(crossings(out) == crossings(pi));
        CHECK(stats(out).neg == stats(pi).neg + 1);
        CHECK(stats(out).fwex == 2 * 8 + 1 - stats(pi).fwex);
    }
}

TEST_CASE("matching text round trip") {
    OrderedMatching m = OrderedMatching::parse("(1,5);(4,2);(8,3);(6,7)");
    CHECK(OrderedMatching::parse(m.str()) == m);
    CHECK_THROWS_AS(OrderedMatching::parse("(1,2);(2,3)"), ParseError);
    CHECK_THROWS_AS(OrderedMatching::parse("(1 2)"), ParseError);
}
