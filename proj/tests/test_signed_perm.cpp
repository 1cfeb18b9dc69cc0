#include "pignose/signed_perm.hpp"

#include <set>

#include "doctest.h"
#include "pignose/errors.hpp"
#include "pignose/genfun.hpp"
#include "pignose/tableaux.hpp"
#include "test_util.hpp"

using namespace pignose;

namespace {

// Independent oracle: crossing count straight from the three defining
// clauses, no shortcuts shared with the library path.
int crossings_oracle(const SignedPerm& pi) {
    int n = pi.n(), total = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i < j && j <= pi.image(i) && pi.image(i) < pi.image(j)) ++total;
            if (-i < j && j <= -pi.image(i) && -pi.image(i) < pi.image(j)) ++total;
            if (i > j && j > pi.image(i) && pi.image(i) > pi.image(j)) ++total;
        }
    return total;
}

}  // namespace

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_bn(0).size() == 1);
    auto b1 = enumerate_bn(1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].str() == "-1");
    CHECK(b1[1].str() == "1");
    CHECK(enumerate_bn(3).size() == 48);
    CHECK_THROWS_AS(enumerate_bn(9), LimitExceededError);
    CHECK_THROWS_AS(enumerate_bn(5, 4), LimitExceededError);  // limit is configurable
    CHECK(enumerate_bn(4, 4).size() == 384);
}

TEST_CASE("statistics on the worked example") {
    SignedPerm pi = SignedPerm::parse("4,-6,1,-5,-3,7,2");
    StatRecord s = stats(pi);
    CHECK(s.neg == 3);
    CHECK(s.wex == 2);
    CHECK(s.fwex == 7);
    CHECK(s.fexc == 2 * s.exc + s.neg);
    CHECK(s.fdes == s.des + s.des_b);
}

TEST_CASE("statistics on identity and all-negated") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> id, neg;
        for (int i = 1; i <= n; ++i) {
            id.push_back(i);
            neg.push_back(-i);
        }
        StatRecord si = stats(SignedPerm{id});
        CHECK(si.wex == n);
        CHECK(si.exc == 0);
        CHECK(si.neg == 0);
        CHECK(si.fwex == 2 * n);
        CHECK(si.des == 0);
        CHECK(si.des_b == 0);
        StatRecord sn = stats(SignedPerm{neg});
        CHECK(sn.neg == n);
        CHECK(sn.wex == 0);
        CHECK(sn.fwex == n);
    }
}

TEST_CASE("crossings") {
    CHECK(crossings(SignedPerm::parse("3,-4,-2,5,1")) == 5);
    CHECK(crossings(SignedPerm::parse("1,2,3,4")) == 0);
    CHECK(crossings(SignedPerm::parse("2,1")) == 0);
    CHECK(crossings(SignedPerm::parse("-1")) == 0);
}

TEST_CASE("crossings via the six configurations") {
    CHECK(crossings_via_configurations(SignedPerm::parse("3,-4,-2,5,1")) == 5);
    CHECK(crossings_via_configurations(SignedPerm::parse("1,2,3")) == 0);
    for (int n = 1; n <= 4; ++n)
        for_each_bn(n, [&](const SignedPerm& pi) {
            CHECK(crossings_via_configurations(pi) == crossings_oracle(pi));
        });
}

TEST_CASE("alignments against the crossing identity") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> id;
        for (int i = 1; i <= n; ++i) id.push_back(i);
        CHECK(alignments(SignedPerm{id}) == n * n);
    }
    // n = 1: the identity forces al = n^2 - 2n + fwex, so (1) has one
    // alignment (its two fixed-point arcs are disjoint on opposite sides)
    // while (-1) has none.
    CHECK(alignments(SignedPerm::parse("1")) == 1);
    CHECK(alignments(SignedPerm::parse("-1")) == 0);
    SignedPerm pi = SignedPerm::parse("3,-4,-2,5,1");
    CHECK(alignments(pi) == 11);  // 25 - 10 + fwex(pi) - 2*5 with fwex = 6
    for (int n = 1; n <= 4; ++n)
        for_each_bn(n, [&](const SignedPerm& p) {
            int cro = crossings_oracle(p);
            CHECK(2 * cro + alignments(p) == n * n - 2 * n + stats(p).fwex);
            CHECK(full_diagram_crossings(p) == 2 * cro);
        });
}

TEST_CASE("type A alignments") {
    for (int n = 1; n <= 5; ++n)
        for_each_sn(n, [&](const std::vector<int>& sigma) {
            SignedPerm pi{sigma};
            int k = stats(pi).wex;
            CHECK(crossings(pi) + alignments_type_a(sigma) == (k - 1) * (n - k));
        });
}

TEST_CASE("dividing-line counts") {
    SignedPerm id = SignedPerm::parse("1,2,3");
    LineCounts c = line_counts(id, 1, true);
    CHECK(c.upper == 1);
    CHECK(c.lower == 0);
    for (int n = 1; n <= 4; ++n)
        for_each_bn(n, [&](const SignedPerm& pi) {
            for (int k = 1; k <= n; ++k) {
                LineCounts pos = line_counts(pi, k, true);
                CHECK(pos.upper == pos.lower + 1);
                LineCounts neg = line_counts(pi, k, false);
                CHECK(neg.upper == neg.lower - 1);
            }
        });
}

TEST_CASE("transforms") {
    SignedPerm id = SignedPerm::parse("1,2,3");
    CHECK(transpose(id) == id);
    CHECK(transpose(SignedPerm::parse("2,-3,1")) == SignedPerm::parse("3,1,-2"));
    for_each_bn(3, [&](const SignedPerm& pi) {
        CHECK(negate(negate(pi)) == pi);
        CHECK(transpose(transpose(pi)) == pi);
        CHECK(negate_first(negate_first(pi)) == pi);
    });
}

TEST_CASE("pattern statistics") {
    PatternStats ps = pattern_stats(SignedPerm::parse("3,-5,-2,4,1"));
    CHECK(ps.hasc == 6);
    CHECK(ps.pat == 3);

    for (int n = 1; n <= 4; ++n) {
        std::vector<int> id;
        for (int i = 1; i <= n; ++i) id.push_back(i);
        PatternStats pid = pattern_stats(SignedPerm{id});
        CHECK(pid.hasc == 2 * n);
        CHECK(pid.pat == 0);
        CHECK(pid.mot_plus == 0);
    }

    // The ascent/pattern monomials sum to the master polynomial.
    MultiPoly acc;
    for_each_bn(2, [&](const SignedPerm& pi) {
        PatternStats p = pattern_stats(pi);
        acc.add_term({p.hasc, stats(pi).neg, p.pat}, 1);
    });
    CHECK(acc == b_poly_perms(2));
}

TEST_CASE("unsigned 31-2 pattern counts") {
    std::vector<int> id{1, 2, 3, 4};
    CHECK(unsigned_mot(id) == 0);
    std::vector<int> sigma{3, 1, 2};
    CHECK(mot_at(sigma, 3) == 1);
    CHECK(unsigned_mot(sigma) == 1);

    // sum over S_3 of y^{asc+1} q^{mot} matches the type A q-Eulerian numbers.
    MultiPoly lhs;
    for_each_sn(3, [&](const std::vector<int>& s) {
        int asc = 0;
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] < s[i + 1]) ++asc;
        MultiPoly term = MultiPoly::y(asc + 1) * MultiPoly::q(unsigned_mot(s));
        lhs += term;
    });
    MultiPoly rhs;
    for (int k = 1; k <= 3; ++k) rhs += MultiPoly::y(k) * e_poly_type_a(3, k);
    CHECK(lhs == rhs);
}

TEST_CASE("invariants on random large permutations") {
    // Beyond the exhaustive bounds, sample B_8 and B_10 (the statistics and
    // diagram geometry have no size cap, only the enumerations do).
    testutil::Rng rng;
    for (int n : {8, 10}) {
        for (int round = 0; round < 150; ++round) {
            SignedPerm pi = testutil::random_signed_perm(rng, n);
            int cro = crossings_oracle(pi);
            CHECK(crossings(pi) == cro);
            CHECK(crossings_via_configurations(pi) == cro);
            CHECK(full_diagram_crossings(pi) == 2 * cro);
            CHECK(2 * cro + alignments(pi) == n * n - 2 * n + stats(pi).fwex);
            StatRecord s = stats(pi);
            CHECK(s.fdes + stats(negate(pi)).fdes == 2 * n - 1);
            CHECK(s.fwex + stats(transpose(pi)).fexc == 2 * n);
            for (int k = 1; k <= n; ++k) {
                LineCounts pos = line_counts(pi, k, true);
                CHECK(pos.upper == pos.lower + 1);
                LineCounts neg = line_counts(pi, k, false);
                CHECK(neg.upper == neg.lower - 1);
            }
        }
    }
}

TEST_CASE("text round trip and parse errors") {
    for_each_bn(3, [&](const SignedPerm& pi) { CHECK(SignedPerm::parse(pi.str()) == pi); });
    CHECK_THROWS_AS(SignedPerm::parse("1,1"), ParseError);
    CHECK_THROWS_AS(SignedPerm::parse("1,,2"), ParseError);
    CHECK_THROWS_AS(SignedPerm::parse("1,5"), ParseError);
}
