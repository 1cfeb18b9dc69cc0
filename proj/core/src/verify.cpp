#include "pignose/verify.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "pignose/ansatz.hpp"
#include "pignose/errors.hpp"
#include "pignose/genfun.hpp"
#include "pignose/matching.hpp"
#include "pignose/paths.hpp"
#include "pignose/tableaux.hpp"

namespace pignose {

namespace {

struct CheckBody {
    std::string range;
    std::string counterexample;  // empty = pass

    bool ok() const { return counterexample.empty(); }
    void fail(const std::string& what) {
        if (counterexample.empty()) counterexample = what;
    }
    void expect_eq(const MultiPoly& actual, const MultiPoly& expected, const std::string& where) {
        if (!ok()) return;
        if (!(actual == expected))
            fail(where + ": expected " + expected.str() + ", actual " + actual.str());
    }
    void expect(bool cond, const std::string& what) {
        if (!ok()) return;
        if (!cond) fail(what);
    }
};

MultiPoly b2_printed() {
    // y^4 + (2t+tq) y^3 + (t^2 q + t^2 + 1) y^2 + t y
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

const char* kTableauAText = "vhvvhhhv\n1001\n011\n001\n";
const char* kTableauBText = "hvhvhhv\n0*\n11*\n000*\n0101*\n111\n01\n";

std::string perm_str(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

// ---------------------------------------------------------------- zigzag ----

CheckBody check_zigzag(const VerifyOptions& o) {
    CheckBody c{"n <= " + std::to_string(o.max_n_poly) + " exhaustive; printed examples", ""};
    c.expect_eq(b_poly_tableaux(0, o.limit), MultiPoly::one(), "B_0");
    c.expect_eq(b_poly_tableaux(1, o.limit), MultiPoly::y(2) + MultiPoly::monomial({1, 1, 0}),
                "B_1");
    c.expect_eq(b_poly_tableaux(2, o.limit), b2_printed(), "B_2");

    if (c.ok()) {
        std::vector<int> a = zigzag_a(parse_tableau(kTableauAText));
        c.expect(perm_str(a) == "7,1,6,5,3,4,2,8",
                 "printed zigzag image: expected 7,1,6,5,3,4,2,8, actual " + perm_str(a));
        SignedPerm b = zigzag_b(parse_tableau_b(kTableauBText));
        c.expect(b.str() == "-3,6,2,5,-4,1,7",
                 "printed type B zigzag image: expected -3,6,2,5,-4,1,7, actual " + b.str());
    }

    for (int n = 0; n <= o.max_n_poly && c.ok(); ++n) {
        std::set<SignedPerm> images;
        Int count = 0;
        for_each_ptb(n, [&](const PermTableauB& t) {
            if (!c.ok()) return;
            ++count;
            TableauStats ts = tableau_stats(t);
            SignedPerm pi = zigzag_b(t);
            StatRecord s = stats(pi);
            if (s.wex != ts.row || s.neg != ts.diag || crossings(pi) != ts.so)
                c.fail("statistic transport fails for tableau\n" + tableau_text(t) +
                       "\nimage " + pi.str());
            images.insert(pi);
        }, o.limit);
        Int expect = checked_mul(checked_pow(2, n), factorial(n));
        c.expect(count == expect && static_cast<Int>(images.size()) == expect,
                 "type B zigzag not bijective at n=" + std::to_string(n) + ": " +
                     std::to_string(count) + " tableaux, " + std::to_string(images.size()) +
                     " distinct images, expected " + std::to_string(expect));
        if (!c.ok()) break;

        c.expect_eq(b_poly_tableaux(n, o.limit), gen_table(n, o.limit).b,
                    "tableau and permutation polynomials at n=" + std::to_string(n));

        // t = 0: odd coefficients vanish, even ones are the type A numbers.
        MultiPoly t0 = eval_subst(b_poly_tableaux(n, o.limit), std::nullopt, 0);
        for (int k = 0; 2 * k + 1 <= 2 * n && c.ok(); ++k)
            c.expect(coeff_extract(t0, Var::y, 2 * k + 1).is_zero(),
                     "odd y-coefficient of B_n(y,0,q) nonzero at n=" + std::to_string(n));
        for (int k = 1; k <= n && c.ok(); ++k)
            c.expect_eq(coeff_extract(t0, Var::y, 2 * k), e_poly_type_a(n, k, o.limit),
                        "B_{n,2k}(0,q) vs E_{n,k}(q) at n=" + std::to_string(n) +
                            ", k=" + std::to_string(k));

        Int pt_count = 0;
        for_each_pt(n, [&](const PermTableau&) { ++pt_count; }, o.limit);
        c.expect(pt_count == factorial(n), "|PT(n)| != n! at n=" + std::to_string(n));
    }
    return c;
}

// -------------------------------------------------------------- symmetry ----

CheckBody check_symmetry(const VerifyOptions& o) {
    int phi_n = std::min(o.max_n_poly, 4);
    CheckBody c{"B* symmetry n <= " + std::to_string(o.max_n_poly) + "; phi exhaustive n <= " +
                    std::to_string(phi_n),
                ""};
    for (int n = 1; n <= o.max_n_poly && c.ok(); ++n) {
        GenTable table = gen_table(n, o.limit);
        for (int k = 1; k <= 2 * n && c.ok(); ++k)
            c.expect_eq(table.b_star[static_cast<std::size_t>(k)],
                        table.b_star[static_cast<std::size_t>(2 * n + 1 - k)],
                        "B*_{n,k} = B*_{n,2n+1-k} at n=" + std::to_string(n) +
                            ", k=" + std::to_string(k));
    }
    // Rotation and reversal lemmas on pignose matchings.
    for (int n = 1; n <= std::min(o.max_n_poly, 5) && c.ok(); ++n) {
        for_each_sn(n, [&](const std::vector<int>& sigma) {
            if (!c.ok()) return;
            OrderedMatching m = pignose_matching(sigma);
            int cro = matching_crossings(m);
            OrderedMatching r = m;
            for (int k = 1; k <= 2 * n && c.ok(); ++k) {
                r = rho(r);
                c.expect(matching_crossings(r) == cro,
                         "rho changed the crossing count of " + m.str() + " at k=" +
                             std::to_string(k));
                if (k % 2 == 1)
                    c.expect(is_pignose(reverse(r)),
                             "(rho^(2k+1) M)^rev not pignose for " + m.str());
            }
            c.expect(r == m, "rho^(2n) is not the identity on " + m.str());
        }, o.limit);
    }
    // phi: bijection B_n^+ -> B_n^- with the three statistic transports.
    for (int n = 1; n <= phi_n && c.ok(); ++n) {
        std::set<SignedPerm> images;
        Int plus = 0;
        for_each_bn(n, [&](const SignedPerm& pi) {
            if (!c.ok() || pi.image(1) < 0) return;
            ++plus;
            SignedPerm out = phi(pi);
            StatRecord sin = stats(pi), sout = stats(out);
            if (out.image(1) > 0 || crossings(out) != crossings(pi) ||
                sout.neg != sin.neg + 1 || sout.fwex != 2 * n + 1 - sin.fwex)
                c.fail("phi transport fails for " + pi.str() + " -> " + out.str());
            images.insert(out);
        }, o.limit);
        c.expect(static_cast<Int>(images.size()) == plus,
                 "phi not injective at n=" + std::to_string(n));
    }
    return c;
}

// ---------------------------------------------------------------- cro-al ----

CheckBody check_cro_al(const VerifyOptions& o) {
    CheckBody c{"type B n <= " + std::to_string(o.max_n_poly) + ", type A n <= " +
                    std::to_string(o.max_n_int),
                ""};
    for (int n = 1; n <= o.max_n_poly && c.ok(); ++n) {
        for_each_bn(n, [&](const SignedPerm& pi) {
            if (!c.ok()) return;
            int cro = crossings(pi);
            StatRecord s = stats(pi);
            if (2 * cro + alignments(pi) != n * n - 2 * n + s.fwex)
                c.fail("2cro + al != n^2 - 2n + fwex for " + pi.str());
            else if (crossings_via_configurations(pi) != cro)
                c.fail("configuration crossing count differs for " + pi.str());
            else if (full_diagram_crossings(pi) != 2 * cro)
                c.fail("full-diagram crossings != 2 cro for " + pi.str());
            else {
                for (int k = 1; k <= n; ++k) {
                    LineCounts pos = line_counts(pi, k, true);
                    LineCounts neg = line_counts(pi, k, false);
                    if (pos.upper != pos.lower + 1 || neg.upper != neg.lower - 1) {
                        c.fail("dividing-line counts off for " + pi.str() + " at k=" +
                               std::to_string(k));
                        break;
                    }
                }
            }
        }, o.limit);
    }
    for (int n = 1; n <= o.max_n_int && c.ok(); ++n) {
        for_each_sn(n, [&](const std::vector<int>& sigma) {
            if (!c.ok()) return;
            SignedPerm pi{sigma};
            int k = stats(pi).wex;
            if (crossings(pi) + alignments_type_a(sigma) != (k - 1) * (n - k))
                c.fail("cro + al != (k-1)(n-k) for " + perm_str(sigma));
        }, o.limit);
    }
    return c;
}

// ---------------------------------------------------------------- ansatz ----

CheckBody check_ansatz(const VerifyOptions& o) {
    CheckBody c{"relations at size 8; values n <= " + std::to_string(o.max_n_poly), ""};
    for (int which = 1; which <= 2 && c.ok(); ++which) {
        RelationReport r = verify_relations(which == 1 ? solution1(8) : solution2(8));
        c.expect(r.ok, "solution " + std::to_string(which) + ": " + r.relation + " fails at (" +
                           std::to_string(r.i) + "," + std::to_string(r.j) + "): " + r.detail);
    }
    for (int n = 0; n <= o.max_n_poly && c.ok(); ++n) {
        MultiPoly reference = gen_table(n, o.limit).b;
        for (int which = 1; which <= 2 && c.ok(); ++which) {
            c.expect_eq(ansatz_bn(n, which), reference,
                        "solution " + std::to_string(which) + " at n=" + std::to_string(n));
            for (int extra : {1, 3}) {
                AnsatzSystem sys = which == 1 ? solution1(n + 1 + extra) : solution2(n + 1 + extra);
                c.expect_eq(ansatz_bn(n, sys), reference,
                            "truncation stability, solution " + std::to_string(which) + ", n=" +
                                std::to_string(n) + ", size=" + std::to_string(n + 1 + extra));
            }
        }
    }
    return c;
}

// ------------------------------------------------------------- recurrence ----

CheckBody check_recurrence(const VerifyOptions& o) {
    CheckBody c{"n <= " + std::to_string(o.max_n_int), ""};
    for (int n = 0; n <= o.max_n_int && c.ok(); ++n)
        c.expect_eq(recurrence_bn(n), gen_table(n, o.limit).b, "n=" + std::to_string(n));
    return c;
}

// ------------------------------------------------------------------ cfrac ----

CheckBody check_cfrac(const VerifyOptions& o) {
    CheckBody c{"orders 0.." + std::to_string(o.max_n_poly) + "; band consistency h <= 6", ""};
    Series s = cf_series(o.max_n_poly);
    for (int n = 0; n <= o.max_n_poly && c.ok(); ++n)
        c.expect_eq(s[n], gen_table(n, o.limit).b, "J-fraction coefficient n=" + std::to_string(n));
    // Deeper truncation must not change anything.
    if (c.ok()) {
        Series deep = series_jfraction(cf_gamma, cf_lambda, o.max_n_poly, 4);
        for (int n = 0; n <= o.max_n_poly && c.ok(); ++n)
            c.expect_eq(deep[n], s[n], "depth sensitivity at n=" + std::to_string(n));
    }
    AnsatzSystem sys = solution1(9);
    MultiPoly y2 = MultiPoly::y(2);
    for (int h = 0; h <= 6 && c.ok(); ++h) {
        c.expect_eq(cf_gamma(h), y2 * sys.d.entry(h, h) + sys.e.entry(h, h),
                    "gamma_h vs solution 1 at h=" + std::to_string(h));
        c.expect_eq(cf_lambda(h + 1),
                    (y2 * sys.d.entry(h, h + 1) + sys.e.entry(h, h + 1)) * sys.e.entry(h + 1, h),
                    "lambda_{h+1} vs solution 1 at h=" + std::to_string(h));
    }
    return c;
}

// ------------------------------------------------------------------ paths ----

CheckBody check_paths(const VerifyOptions& o) {
    CheckBody c{"n <= " + std::to_string(o.max_n_poly), ""};
    for (int n = 0; n <= o.max_n_poly && c.ok(); ++n) {
        MultiPoly reference = gen_table(n, o.limit).b;
        c.expect_eq(mn_weight_sum(n, o.limit), reference,
                    "eight-type path sum at n=" + std::to_string(n));
        c.expect_eq(nn_weight_sum(n, o.limit), reference,
                    "suffix sum at n=" + std::to_string(n));
    }
    return c;
}

// -------------------------------------------------------------------- fv1 ----

CheckBody check_fv1(const VerifyOptions& o) {
    int bound = std::min(o.max_n_poly, 5);
    CheckBody c{"exhaustive n <= " + std::to_string(bound) + "; figure example", ""};

    SignedPerm example = SignedPerm::parse("3,-5,-2,4,1");
    LabeledMotzkinPath p = fv1(example);
    c.expect(p.str() == "U1:0 U2:0 L3:0 D7:1 D8:0",
             "figure path differs: " + p.str());
    if (c.ok()) {
        std::vector<MultiPoly> w = p.step_weights();
        MultiPoly expect_total = MultiPoly::monomial({6, 2, 3});
        c.expect_eq(p.weight(), expect_total, "figure total weight");
        const char* expected[] = {"1", "y*t*q^2", "y^2", "y^2*q", "y*t"};
        for (int i = 0; i < 5 && c.ok(); ++i)
            c.expect(w[static_cast<std::size_t>(i)].str() == expected[i],
                     "figure step weight " + std::to_string(i + 1) + ": expected " +
                         expected[i] + ", actual " + w[static_cast<std::size_t>(i)].str());
    }

    for (int n = 1; n <= bound && c.ok(); ++n) {
        std::set<std::string> seen;
        for_each_bn(n, [&](const SignedPerm& pi) {
            if (!c.ok()) return;
            LabeledMotzkinPath path = fv1(pi);
            PatternStats ps = pattern_stats(pi);
            StatRecord s = stats(pi);
            MultiPoly expect = MultiPoly::monomial({ps.hasc, s.neg, ps.pat});
            if (!(path.weight() == expect))
                c.fail("fv1 weight transport fails for " + pi.str() + ": path " + path.str());
            if (s.neg == 0)
                for (const PathStep& st : path.steps)
                    if (st.type % 2 == 0)
                        c.fail("sign-free permutation used an even step type: " + pi.str());
            seen.insert(path.str());
        }, o.limit);
        c.expect(static_cast<Int>(seen.size()) == checked_mul(checked_pow(2, n), factorial(n)),
                 "fv1 not injective at n=" + std::to_string(n));
    }
    return c;
}

// -------------------------------------------------------------------- fz1 ----

CheckBody check_fz1(const VerifyOptions& o) {
    int bound = std::min(o.max_n_poly, 5);
    CheckBody c{"exhaustive n <= " + std::to_string(bound) + "; figure example", ""};

    SignedPerm example = SignedPerm::parse("-5,4,2,-3,1");
    MotzkinSuffix p = fz1(example);
    c.expect(p.str() == "@2 lq:1 u:1 d:0 d:1 d:0", "figure suffix differs: " + p.str());
    if (c.ok()) {
        std::vector<MultiPoly> w = p.step_weights();
        const char* expected[] = {"q", "y^2*q", "1", "q", "1"};
        for (int i = 0; i < 5 && c.ok(); ++i)
            c.expect(w[static_cast<std::size_t>(i)].str() == expected[i],
                     "figure step weight " + std::to_string(i + 1) + ": expected " +
                         expected[i] + ", actual " + w[static_cast<std::size_t>(i)].str());
    }

    for (int n = 1; n <= bound && c.ok(); ++n) {
        std::set<std::string> seen;
        for_each_bn(n, [&](const SignedPerm& pi) {
            if (!c.ok()) return;
            MotzkinSuffix path = fz1(pi);
            StatRecord s = stats(pi);
            if (path.start_height != s.neg)
                c.fail("fz1 start height != neg for " + pi.str());
            else if (!(path.weight() == MultiPoly::monomial({s.fwex, s.neg, crossings(pi)})))
                c.fail("fz1 weight transport fails for " + pi.str() + ": path " + path.str());
            seen.insert(path.str());
        }, o.limit);
        c.expect(static_cast<Int>(seen.size()) == checked_mul(checked_pow(2, n), factorial(n)),
                 "fz1 not injective at n=" + std::to_string(n));
    }
    return c;
}

// ------------------------------------------------------------------ bndes ----

CheckBody check_bndes(const VerifyOptions& o) {
    CheckBody c{"n <= " + std::to_string(o.max_n_poly), ""};
    for (int n = 1; n <= o.max_n_poly && c.ok(); ++n) {
        MultiPoly via_hasc, via_fdes;
        for_each_bn(n, [&](const SignedPerm& pi) {
            PatternStats ps = pattern_stats(pi);
            StatRecord s = stats(pi);
            via_hasc.add_term({ps.hasc, s.neg, ps.pat}, 1);
            via_fdes.add_term({s.fdes + 1, ps.fneg, ps.mot_plus}, 1);
        }, o.limit);
        MultiPoly reference = gen_table(n, o.limit).b;
        c.expect_eq(via_hasc, reference, "ascent/pattern sum at n=" + std::to_string(n));
        c.expect_eq(via_fdes, reference, "flag-descent sum at n=" + std::to_string(n));
    }
    return c;
}

// ---------------------------------------------------------------- formula ----

CheckBody check_formula(const VerifyOptions& o) {
    CheckBody c{"t=1 forms n <= " + std::to_string(o.max_n_int) + ", t=0 form n <= " +
                    std::to_string(o.max_n_poly),
                ""};
    for (int n = 0; n <= o.max_n_int && c.ok(); ++n) {
        MultiPoly reference = eval_subst(gen_table(n, o.limit).b, std::nullopt, 1);
        MultiPoly f1 = closed_form_y1q(n, 1);
        c.expect_eq(f1, reference, "first closed form at n=" + std::to_string(n));
        c.expect_eq(closed_form_y1q(n, 2), f1,
                    "second closed form differs from the first at n=" + std::to_string(n));
    }
    for (int n = 0; n <= o.max_n_poly && c.ok(); ++n)
        c.expect_eq(closed_form_y0q(n), eval_subst(gen_table(n, o.limit).b, std::nullopt, 0),
                    "t=0 closed form at n=" + std::to_string(n));
    return c;
}

// --------------------------------------------------------------- lagrange ----

CheckBody check_lagrange(const VerifyOptions&) {
    CheckBody c{"k <= 4, order 10", ""};
    for (int k = 0; k <= 4 && c.ok(); ++k) {
        CheckReport r = lagrange_check(k, 10);
        c.expect(r.ok, "k=" + std::to_string(k) + ": " + r.detail);
    }
    return c;
}

// -------------------------------------------------------------- schroeder ----

CheckBody check_schroeder(const VerifyOptions&) {
    CheckBody c{"series order 8", ""};
    CheckReport r = schroeder_lemma_check(8);
    c.expect(r.ok, r.detail);
    return c;
}

// ---------------------------------------------------------------- narayana ----

CheckBody check_narayana(const VerifyOptions& o) {
    CheckBody c{"n <= " + std::to_string(o.max_n_int), ""};
    for (int n = 1; n <= o.max_n_int && c.ok(); ++n) {
        CheckReport r = narayana_b_check(n);
        c.expect(r.ok, r.detail);
        if (!c.ok()) break;
        // Crossing-free permutations by floor(fwex/2) are squared binomials.
        std::vector<Int> counts(static_cast<std::size_t>(n) + 1, 0);
        for_each_bn(n, [&](const SignedPerm& pi) {
            if (crossings(pi) == 0) counts[static_cast<std::size_t>(stats(pi).fwex / 2)]++;
        }, o.limit);
        for (int k = 0; k <= n && c.ok(); ++k)
            c.expect(counts[static_cast<std::size_t>(k)] ==
                         checked_mul(binomial(n, k), binomial(n, k)),
                     "crossing-free count at n=" + std::to_string(n) + ", k=" +
                         std::to_string(k) + ": " +
                         std::to_string(counts[static_cast<std::size_t>(k)]));
    }
    return c;
}

// ---------------------------------------------------------------- binomial ----

CheckBody check_binomial(const VerifyOptions& o) {
    int series_n = std::max(o.max_n_int, 8);
    CheckBody c{"series n <= " + std::to_string(series_n) + "; E^B at q=-1 n <= " +
                    std::to_string(o.max_n_int),
                ""};
    auto gamma = [](int h) { return eval_subst(cf_gamma(h), std::nullopt, 1, -1); };
    auto lambda = [](int h) { return eval_subst(cf_lambda(h), std::nullopt, 1, -1); };
    Series s = series_jfraction(gamma, lambda, series_n);
    for (int n = 1; n <= series_n && c.ok(); ++n) {
        MultiPoly expect;
        for (int k = 1; k <= 2 * n; ++k)
            expect.add_term({k, 0, 0}, binomial(n - 1, (k + 1) / 2 - 1));
        c.expect_eq(s[n], expect, "B_n(y,1,-1) at n=" + std::to_string(n));
    }
    for (int n = 1; n <= o.max_n_int && c.ok(); ++n) {
        GenTable table = gen_table(n, o.limit);
        for (int k = 0; k <= n && c.ok(); ++k) {
            Int v = eval_subst(table.eulerian_b[static_cast<std::size_t>(k)], std::nullopt,
                               std::nullopt, -1)
                        .coeff({0, 0, 0});
            c.expect(v == binomial(n, k), "E^B_{n,k}(-1) != C(n,k) at n=" + std::to_string(n) +
                                              ", k=" + std::to_string(k) + ": " +
                                              std::to_string(v));
        }
    }
    return c;
}

// ------------------------------------------------------------ distribution ----

CheckBody check_distribution(const VerifyOptions& o) {
    CheckBody c{"n <= " + std::to_string(o.max_n_int), ""};
    for (int n = 1; n <= o.max_n_int && c.ok(); ++n) {
        std::vector<Int> by_fwex(static_cast<std::size_t>(2 * n) + 2, 0);
        std::vector<Int> by_fdes(static_cast<std::size_t>(2 * n) + 2, 0);
        std::vector<Int> by_fexc(static_cast<std::size_t>(2 * n) + 2, 0);
        std::vector<Int> by_desb(static_cast<std::size_t>(n) + 1, 0);
        std::vector<Int> by_half_fwex(static_cast<std::size_t>(n) + 1, 0);
        for_each_bn(n, [&](const SignedPerm& pi) {
            if (!c.ok()) return;
            StatRecord s = stats(pi);
            by_fwex[static_cast<std::size_t>(s.fwex)]++;
            by_fdes[static_cast<std::size_t>(s.fdes)]++;
            by_fexc[static_cast<std::size_t>(s.fexc)]++;
            by_desb[static_cast<std::size_t>(s.des_b)]++;
            by_half_fwex[static_cast<std::size_t>(s.fwex / 2)]++;
            StatRecord sneg = stats(negate(pi));
            if (s.fdes + sneg.fdes != 2 * n - 1)
                c.fail("fdes(pi) + fdes(-pi) != 2n-1 for " + pi.str());
            else if (s.fwex + stats(transpose(pi)).fexc != 2 * n)
                c.fail("fwex(pi) + fexc(pi^tr) != 2n for " + pi.str());
        }, o.limit);
        for (int k = 1; k <= 2 * n && c.ok(); ++k)
            c.expect(by_fwex[static_cast<std::size_t>(k)] ==
                             by_fdes[static_cast<std::size_t>(k - 1)] &&
                         by_fwex[static_cast<std::size_t>(k)] ==
                             by_fexc[static_cast<std::size_t>(k - 1)],
                     "flag statistic distributions differ at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
        for (int k = 0; k <= n && c.ok(); ++k)
            c.expect(by_desb[static_cast<std::size_t>(k)] ==
                         by_half_fwex[static_cast<std::size_t>(k)],
                     "des_B vs floor(fwex/2) distribution differs at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
        if (c.ok()) {
            Int v = eulerian_b_count(n, 0, o.limit);
            MultiPoly e = eulerian_b_poly(n, 0, o.limit);
            c.expect(v == eval_subst(e, std::nullopt, std::nullopt, 1).coeff({0, 0, 0}),
                     "des_B count vs E^B at q=1, n=" + std::to_string(n));
        }
    }
    return c;
}

using CheckFn = CheckBody (*)(const VerifyOptions&);

const std::map<std::string, CheckFn>& check_table() {
    static const std::map<std::string, CheckFn> table = {
        {"zigzag", check_zigzag},       {"symmetry", check_symmetry},
        {"cro-al", check_cro_al},       {"ansatz", check_ansatz},
        {"recurrence", check_recurrence}, {"cfrac", check_cfrac},
        {"paths", check_paths},         {"fv1", check_fv1},
        {"fz1", check_fz1},             {"bndes", check_bndes},
        {"formula", check_formula},     {"lagrange", check_lagrange},
        {"schroeder", check_schroeder}, {"narayana", check_narayana},
        {"binomial", check_binomial},   {"distribution", check_distribution},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : check_table()) v.push_back(name);
        return v;
    }();
    return names;
}

VerifyReport run_check(const std::string& name, const VerifyOptions& opts) {
    auto it = check_table().find(name);
    if (it == check_table().end()) throw Error("unknown check: " + name);
    auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.name = name;
    try {
        CheckBody body = it->second(opts);
        report.range = body.range;
        report.pass = body.ok();
        report.counterexample = body.counterexample;
    } catch (const Error& e) {
        report.pass = false;
        report.counterexample = std::string("exception: ") + e.what();
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<VerifyReport> run_checks(const std::vector<std::string>& names,
                                     const VerifyOptions& opts, int jobs,
                                     const std::function<void(const VerifyReport&)>& on_done) {
    std::vector<VerifyReport> reports(names.size());
    std::mutex mu;
    std::size_t next = 0;
    auto worker = [&] {
        while (true) {
            std::size_t idx;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= names.size()) return;
                idx = next++;
            }
            VerifyReport r = run_check(names[idx], opts);
            {
                std::lock_guard<std::mutex> lock(mu);
                reports[idx] = r;
                if (on_done) on_done(r);
            }
        }
    };
    int workers = std::max(1, jobs);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerifyReport& a, const VerifyReport& b) { return a.name < b.name; });
    return reports;
}

}  // namespace pignose
