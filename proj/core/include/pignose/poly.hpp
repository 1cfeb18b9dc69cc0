#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pignose/ints.hpp"

namespace pignose {

// Sparse exact polynomial in Z[y,t,q]. This is the universal value type for
// every generating function in the library: y tracks flag weak excedances,
// t negatives, q crossings (and their equidistributed partners).
//
// Terms are stored in a map keyed by exponent triple under a plain lex order
// (y, then t, then q, largest first), which is a proper monomial order, so
// begin() is the leading term and exact division terminates. The canonical
// order used for printing differs (see str()).

enum class Var { y, t, q };

struct Exponents {
    int y = 0;
    int t = 0;
    int q = 0;

    friend bool operator==(const Exponents&, const Exponents&) = default;
};

// Strict-weak order placing the lex-largest monomial first.
struct MonomialLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        if (a.y != b.y) return a.y > b.y;
        if (a.t != b.t) return a.t > b.t;
        return a.q > b.q;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, Int, MonomialLexDesc>;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return constant(1); }
    static MultiPoly constant(Int c);
    static MultiPoly monomial(Exponents e, Int c = 1);
    static MultiPoly y(int e = 1) { return monomial({e, 0, 0}); }
    static MultiPoly t(int e = 1) { return monomial({0, e, 0}); }
    static MultiPoly q(int e = 1) { return monomial({0, 0, e}); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coeff(const Exponents& e) const;
    int degree(Var v) const;  // -1 for the zero polynomial

    // In-place accumulation of a single term; drops the term if it cancels.
    void add_term(const Exponents& e, Int c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator-() const;
    MultiPoly scaled(Int c) const;
    MultiPoly pow(int e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    // Canonical text form, e.g. "y^4 + 2*y^3*t + y^3*t*q + ... + y*t".
    // Term order: y-exponent descending, then t descending, then q ascending.
    std::string str() const;
    // Same ordering, no spaces; used in CSV cells.
    std::string str_compact() const;
    // JSON array of {"y":..,"t":..,"q":..,"c":"<decimal>"} in canonical order.
    std::string json_str() const;

private:
    TermMap terms_;
};

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
MultiPoly q_integer(int n);

// Linear operator sending t^b to [b]_q t^{b-1} (termwise on monomials).
MultiPoly q_derivative_t(const MultiPoly& p);

// Coefficient of var^k as a polynomial in the remaining variables.
MultiPoly coeff_extract(const MultiPoly& p, Var var, int k);

// Exact substitution of integers for any subset of the variables; unassigned
// variables stay symbolic.
MultiPoly eval_subst(const MultiPoly& p, std::optional<Int> y_val,
                     std::optional<Int> t_val = std::nullopt,
                     std::optional<Int> q_val = std::nullopt);

// Maps y^a -> y^{2a}; used when a formula is stated for Σ y^k E_{n,k}.
MultiPoly double_y_exponents(const MultiPoly& p);

// Quotient p/d when p = h*d exactly in Z[y,t,q]; throws NotDivisibleError
// otherwise. d must be nonzero.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d);

}  // namespace pignose
