#pragma once

#include <string>
#include <vector>

#include "pignose/poly.hpp"
#include "pignose/series.hpp"

namespace pignose {

// Tridiagonal truncation of a semi-infinite operator: entries on the
// sub/main/super diagonal, indices 0..size-1.
struct BandedOperator {
    int size = 0;
    std::vector<MultiPoly> sub;    // (i+1, i), length size-1
    std::vector<MultiPoly> main;   // (i, i),   length size
    std::vector<MultiPoly> super;  // (i, i+1), length size-1

    explicit BandedOperator(int n = 0)
        : size(n),
          sub(static_cast<std::size_t>(n > 0 ? n - 1 : 0)),
          main(static_cast<std::size_t>(n)),
          super(static_cast<std::size_t>(n > 0 ? n - 1 : 0)) {}

    MultiPoly entry(int i, int j) const;
    std::vector<std::vector<MultiPoly>> dense() const;
};

// Operators and boundary vectors satisfying DE = qED + D + E, D|V> = |V>,
// <W|E = yt <W|D on the interior of the truncation window.
struct AnsatzSystem {
    BandedOperator d;
    BandedOperator e;
    std::vector<MultiPoly> w;  // row vector
    std::vector<MultiPoly> v;  // column vector
};

// Solution 1: W = (1,0,0,...). Solution 2: W = (1, yt, (yt)^2, ...).
AnsatzSystem solution1(int size);
AnsatzSystem solution2(int size);

struct RelationReport {
    bool ok = true;
    std::string relation;  // which identity failed
    int i = 0, j = 0;      // first failing entry
    std::string detail;
};

// Checks the three defining relations entrywise on rows/columns 0..size-2
// (the last row/column of a finite truncation necessarily leaks).
RelationReport verify_relations(const AnsatzSystem& sys);

// B_n(y,t,q) = <W| (y^2 D + E)^n |V>. Requires size >= n+1; the value is
// independent of the truncation beyond that.
MultiPoly ansatz_bn(int n, const AnsatzSystem& sys);
MultiPoly ansatz_bn(int n, int which);  // which = 1 or 2, truncation n+1

// B_0 = 1, B_{n+1} = (y+t) D_q[(1+yt) B_n] with D_q the q-derivative in t.
MultiPoly recurrence_bn(int n);

// J-fraction coefficients: gamma_h = y^2[h+1]_q + [h]_q + tyq^h([h]_q+[h+1]_q),
// lambda_h = y [h]_q^2 (y + t q^{h-1}) (1 + y t q^h).
MultiPoly cf_gamma(int h);
MultiPoly cf_lambda(int h);

// Series whose z^n coefficient is B_n(y,t,q), from the J-fraction.
Series cf_series(int order);

// B_n(y,1,q) as an exact quotient of a polynomial numerator by (1-q)^n; the
// two printed forms of the numerator sum differ but agree after division.
MultiPoly closed_form_y1q(int n, int form);

// B_n(y,0,q): closed form for the q-Eulerian polynomial with the y-exponents
// doubled to match the even-powered t = 0 specialization.
MultiPoly closed_form_y0q(int n);

struct CheckReport {
    bool ok = true;
    std::string detail;  // first failing identity, when not ok
};

// B_n(y,1,0) = sum y^i C(n, floor(i/2)) C(n-1, ceil(i/2)-1) and
// E^B_{n,k}(0) = C(n,k)^2, both against enumeration.
CheckReport narayana_b_check(int n);

// The S-fraction machinery behind the enumeration formula at t = 1:
// (a) lambda_h = d_{2h-1} d_{2h} and gamma_h = (1+y)^2 - d_{2h} - d_{2h+1}
//     for the (1-q)-scaled coefficients, symbolically for h <= order;
// (b) the bivariate-denominator fraction with numerator (1-yz) equals the
//     S-fraction with coefficients d_h, as series to the given order;
// (c) that S-fraction equals sum_j (-z)^j sum_i y^i q^{i(2j-i+1)/2}.
CheckReport schroeder_lemma_check(int order);

// Coefficients of powers of the compositional inverse C(z) of
// z/((1+z)(1+y^2 z)): [z^{n+1}] C^{k+1} = sum_j y^{2j} (C(n,j)C(n,j+k) -
// C(n,j-1)C(n,j+k+1)), for all n+1 <= order.
CheckReport lagrange_check(int k, int order);

}  // namespace pignose
