#include "pignose/poly.hpp"

#include <algorithm>
#include <sstream>

namespace pignose {

MultiPoly MultiPoly::constant(Int c) {
    MultiPoly p;
    if (c != 0) p.terms_[{0, 0, 0}] = c;
    return p;
}

MultiPoly MultiPoly::monomial(Exponents e, Int c) {
    MultiPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0} &&
           terms_.begin()->second == 1;
}

Int MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

int MultiPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int ev = v == Var::y ? e.y : v == Var::t ? e.t : e.q;
        d = std::max(d, ev);
    }
    return d;
}

void MultiPoly::add_term(const Exponents& e, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, checked_neg(c));
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{ea.y + eb.y, ea.t + eb.t, ea.q + eb.q};
            r.add_term(e, checked_mul(ca, cb));
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = checked_neg(c);
    return r;
}

MultiPoly MultiPoly::scaled(Int c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = checked_mul(k, c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly r = one();
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

namespace {

// Canonical display order: y desc, t desc, q asc.
bool print_before(const Exponents& a, const Exponents& b) {
    if (a.y != b.y) return a.y > b.y;
    if (a.t != b.t) return a.t > b.t;
    return a.q < b.q;
}

std::vector<std::pair<Exponents, Int>> print_sorted(const MultiPoly::TermMap& terms) {
    std::vector<std::pair<Exponents, Int>> v(terms.begin(), terms.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
    return v;
}

void append_factor(std::string& s, const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (e != 1) {
        s += '^';
        s += std::to_string(e);
    }
}

std::string term_body(const Exponents& e, Int abs_c) {
    std::string vars;
    append_factor(vars, "y", e.y);
    append_factor(vars, "t", e.t);
    append_factor(vars, "q", e.q);
    if (vars.empty()) return std::to_string(abs_c);
    if (abs_c == 1) return vars;
    return std::to_string(abs_c) + "*" + vars;
}

std::string render(const MultiPoly::TermMap& terms, bool spaces) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : print_sorted(terms)) {
        Int a = c < 0 ? -c : c;  // coefficients never equal INT64_MIN: sums of checked products
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            if (spaces)
                out += c < 0 ? " - " : " + ";
            else
                out += c < 0 ? '-' : '+';
        }
        out += term_body(e, a);
    }
    return out;
}

}  // namespace

std::string MultiPoly::str() const { return render(terms_, true); }

std::string MultiPoly::str_compact() const { return render(terms_, false); }

std::string MultiPoly::json_str() const {
    std::string out = "[";
    bool first = true;
    for (const auto& [e, c] : print_sorted(terms_)) {
        if (!first) out += ',';
        first = false;
        out += "{\"y\":" + std::to_string(e.y) + ",\"t\":" + std::to_string(e.t) +
               ",\"q\":" + std::to_string(e.q) + ",\"c\":\"" + std::to_string(c) + "\"}";
    }
    return out + "]";
}

MultiPoly q_integer(int n) {
    MultiPoly p;
    for (int i = 0; i < n; ++i) p.add_term({0, 0, i}, 1);
    return p;
}

MultiPoly q_derivative_t(const MultiPoly& p) {
    MultiPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e.t == 0) continue;
        // c * [b]_q * y^a t^{b-1} q^e: expand the q-integer inline.
        for (int i = 0; i < e.t; ++i) r.add_term({e.y, e.t - 1, e.q + i}, c);
    }
    return r;
}

MultiPoly coeff_extract(const MultiPoly& p, Var var, int k) {
    MultiPoly r;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        int ev;
        switch (var) {
            case Var::y: ev = e.y; rest.y = 0; break;
            case Var::t: ev = e.t; rest.t = 0; break;
            default: ev = e.q; rest.q = 0; break;
        }
        if (ev == k) r.add_term(rest, c);
    }
    return r;
}

MultiPoly eval_subst(const MultiPoly& p, std::optional<Int> y_val, std::optional<Int> t_val,
                     std::optional<Int> q_val) {
    MultiPoly r;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        Int k = c;
        if (y_val) { k = checked_mul(k, checked_pow(*y_val, e.y)); rest.y = 0; }
        if (t_val) { k = checked_mul(k, checked_pow(*t_val, e.t)); rest.t = 0; }
        if (q_val) { k = checked_mul(k, checked_pow(*q_val, e.q)); rest.q = 0; }
        r.add_term(rest, k);
    }
    return r;
}

MultiPoly double_y_exponents(const MultiPoly& p) {
    MultiPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term({2 * e.y, e.t, e.q}, c);
    return r;
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw NotDivisibleError("division by the zero polynomial");
    MultiPoly rem = p;
    MultiPoly quot;
    const auto& [ed, cd] = *d.terms().begin();
    while (!rem.is_zero()) {
        const auto& [er, cr] = *rem.terms().begin();
        Exponents e{er.y - ed.y, er.t - ed.t, er.q - ed.q};
        if (e.y < 0 || e.t < 0 || e.q < 0 || cr % cd != 0)
            throw NotDivisibleError("no exact quotient: leading term " + rem.str() +
                                    " not divisible");
        MultiPoly term = MultiPoly::monomial(e, cr / cd);
        quot += term;
        rem -= term * d;
    }
    return quot;
}

}  // namespace pignose
