#include "pignose/tableaux.hpp"

#include <set>

#include "doctest.h"
#include "pignose/errors.hpp"
#include "pignose/genfun.hpp"

using namespace pignose;

namespace {

const char* kTableauA = "vhvvhhhv\n1001\n011\n001\n";
const char* kTableauB = "hvhvhhv\n0*\n11*\n000*\n0101*\n111\n01\n";

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

TEST_CASE("border shape geometry") {
    BorderShape s = BorderShape::parse("vhvvhhhv");
    CHECK(s.rows() == 4);
    CHECK(s.cols() == 4);
    CHECK(s.row_lengths() == std::vector<int>{4, 3, 3, 0});
    CHECK(s.col_heights() == std::vector<int>{3, 3, 3, 1});
    CHECK(s.step_of_row(1) == 1);
    CHECK(s.step_of_row(4) == 8);
    CHECK(s.step_of_col(4) == 2);
    CHECK(s.step_of_col(1) == 7);
    CHECK(s.word() == "vhvvhhhv");
    CHECK_THROWS_AS(BorderShape::parse("vxv"), ParseError);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_pt(0).size() == 1);
    CHECK(enumerate_pt(1).size() == 1);
    CHECK(enumerate_ptb(1).size() == 2);
    CHECK(enumerate_ptb(2).size() == 8);
    CHECK(enumerate_pt(4).size() == 24);
    CHECK(enumerate_ptb(0).size() == 1);
    CHECK_THROWS_AS(enumerate_pt(9), LimitExceededError);
}

TEST_CASE("validation") {
    CHECK(validate(parse_tableau(kTableauA)).ok);
    CHECK(validate(parse_tableau_b(kTableauB)).ok);

    // A column of all zeros breaks the column rule.
    PermTableau empty_col{BorderShape::parse("vh"), {{0}}};
    Violation v = validate(empty_col);
    CHECK_FALSE(v.ok);
    CHECK(v.condition == 1);

    // 0 with a 1 above it and a 1 to its left.
    PermTableau zero_pattern{BorderShape::parse("vvhh"), {{1, 1}, {1, 0}}};
    v = validate(zero_pattern);
    CHECK_FALSE(v.ok);
    CHECK(v.condition == 2);
    CHECK(v.row == 2);
    CHECK(v.col == 2);

    // Diagonal 0 with a 1 to its left.
    PermTableauB diag_zero{BorderShape::parse("vhh"), {{1}, {1, 0}}, {{1, 1}}};
    v = validate(diag_zero);
    CHECK_FALSE(v.ok);
    CHECK(v.condition == 3);
    CHECK(v.row == 2);
    CHECK(v.col == 2);
}

TEST_CASE("tableau statistics") {
    PermTableauB t = parse_tableau_b(kTableauB);
    TableauStats s = tableau_stats(t);
    CHECK(s.diag == 2);
    CHECK(s.row == 3);
    CHECK(s.so == 4);  // cross-checked against cro of the zigzag image below

    PermTableau a = parse_tableau(kTableauA);
    TableauStats sa = tableau_stats(a);
    CHECK(sa.diag == 0);

    PermTableau empty{BorderShape::parse(""), {}};
    TableauStats se = tableau_stats(empty);
    CHECK((se.so == 0 && se.row == 0 && se.diag == 0));

    // One 1 per column, none stacked: so = 0.
    PermTableau minimal{BorderShape::parse("vvhh"), {{1, 1}, {0, 0}}};
    CHECK(tableau_stats(minimal).so == 0);
}

TEST_CASE("zigzag map, type A") {
    std::vector<int> img = zigzag_a(parse_tableau(kTableauA));
    CHECK(img == std::vector<int>{7, 1, 6, 5, 3, 4, 2, 8});

    // No columns at all: every row is empty and maps to a fixed point.
    PermTableau rows_only{BorderShape::parse("vvv"), {{}, {}, {}}};
    CHECK(zigzag_a(rows_only) == std::vector<int>{1, 2, 3});

    std::set<std::vector<int>> images;
    for_each_pt(2, [&](const PermTableau& t) { images.insert(zigzag_a(t)); });
    CHECK(images == std::set<std::vector<int>>{{1, 2}, {2, 1}});
}

TEST_CASE("zigzag map, type B") {
    SignedPerm pi = zigzag_b(parse_tableau_b(kTableauB));
    CHECK(pi.str() == "-3,6,2,5,-4,1,7");
    CHECK(crossings(pi) == 4);  // so(T) transported

    // All-zero added rows reduce to the type A map.
    for_each_ptb(3, [&](const PermTableauB& t) {
        bool any_added_one = false;
        for (const auto& row : t.added)
            for (auto v : row) any_added_one |= v != 0;
        if (any_added_one) return;
        SignedPerm b = zigzag_b(t);
        for (int i = 1; i <= 3; ++i) CHECK(b.image(i) > 0);
        CHECK(zigzag_a(PermTableau{t.shape, t.rows}) == b.images());
    });

    std::set<SignedPerm> images;
    for_each_ptb(3, [&](const PermTableauB& t) {
        TableauStats s = tableau_stats(t);
        SignedPerm b = zigzag_b(t);
        StatRecord r = stats(b);
        CHECK(r.wex == s.row);
        CHECK(r.neg == s.diag);
        CHECK(crossings(b) == s.so);
        images.insert(b);
    });
    CHECK(images.size() == 48);
}

TEST_CASE("generating polynomial from tableaux") {
    CHECK(b_poly_tableaux(0) == MultiPoly::one());
    CHECK(b_poly_tableaux(1) == MultiPoly::y(2) + MultiPoly::monomial({1, 1, 0}));
    CHECK(b_poly_tableaux(2) == b2_printed());
}

TEST_CASE("type A q-Eulerian numbers") {
    for (int n = 1; n <= 5; ++n) CHECK(e_poly_type_a(n, 1) == MultiPoly::one());
    CHECK(e_poly_type_a(3, 0).is_zero());
    CHECK(e_poly_type_a(3, 4).is_zero());
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            MultiPoly e = e_poly_type_a(n, k);
            CHECK(e == e_poly_type_a(n, n + 1 - k));
            Int narayana = binomial(n, k) * binomial(n, k - 1) / n;
            CHECK(eval_subst(e, std::nullopt, std::nullopt, 0).coeff({0, 0, 0}) == narayana);
            // q = -1 gives plain binomials.
            CHECK(eval_subst(e, std::nullopt, std::nullopt, -1).coeff({0, 0, 0}) ==
                  binomial(n - 1, k - 1));
        }
}

TEST_CASE("text format round trip") {
    CHECK(tableau_text(parse_tableau(kTableauA)) == kTableauA);
    for (int n = 0; n <= 3; ++n) {
        for_each_pt(n, [&](const PermTableau& t) { CHECK(parse_tableau(tableau_text(t)) == t); });
        for_each_ptb(n,
                     [&](const PermTableauB& t) { CHECK(parse_tableau_b(tableau_text(t)) == t); });
    }
    CHECK_THROWS_AS(parse_tableau("vh\n2"), ParseError);
    CHECK_THROWS_AS(parse_tableau("vh\n11"), ParseError);
    CHECK_THROWS_AS(parse_tableau_b("hv\n1\n1"), ParseError);  // missing '*'
}
