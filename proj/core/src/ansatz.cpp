#include "pignose/ansatz.hpp"

#include "pignose/errors.hpp"
#include "pignose/genfun.hpp"

namespace pignose {

MultiPoly BandedOperator::entry(int i, int j) const {
    if (i < 0 || j < 0 || i >= size || j >= size) return MultiPoly::zero();
    if (j == i) return main[static_cast<std::size_t>(i)];
    if (j == i + 1) return super[static_cast<std::size_t>(i)];
    if (j == i - 1) return sub[static_cast<std::size_t>(j)];
    return MultiPoly::zero();
}

std::vector<std::vector<MultiPoly>> BandedOperator::dense() const {
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(size),
                                          std::vector<MultiPoly>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(i, j);
    return m;
}

namespace {

MultiPoly yt_pow(int i) { return MultiPoly::monomial({i, i, 0}); }

}  // namespace

AnsatzSystem solution1(int size) {
    AnsatzSystem sys;
    sys.d = BandedOperator(size);
    sys.e = BandedOperator(size);
    for (int i = 0; i < size; ++i) {
        MultiPoly qi = q_integer(i);
        MultiPoly qi1 = q_integer(i + 1);
        MultiPoly ytqi = MultiPoly::monomial({1, 1, i});     // y t q^i
        MultiPoly ytqi1 = MultiPoly::monomial({1, 1, i + 1});
        sys.d.main[static_cast<std::size_t>(i)] = qi1;
        sys.e.main[static_cast<std::size_t>(i)] =
            (MultiPoly::one() + ytqi) * qi + ytqi * qi1;
        if (i + 1 < size) {
            sys.d.super[static_cast<std::size_t>(i)] = (MultiPoly::one() + ytqi1) * qi1;
            sys.e.super[static_cast<std::size_t>(i)] = ytqi * (MultiPoly::one() + ytqi1) * qi1;
            sys.e.sub[static_cast<std::size_t>(i)] = qi1;
        }
    }
    sys.w.assign(static_cast<std::size_t>(size), MultiPoly::zero());
    sys.v.assign(static_cast<std::size_t>(size), MultiPoly::zero());
    if (size > 0) sys.w[0] = sys.v[0] = MultiPoly::one();
    return sys;
}

AnsatzSystem solution2(int size) {
    AnsatzSystem sys;
    sys.d = BandedOperator(size);
    sys.e = BandedOperator(size);
    for (int i = 0; i < size; ++i) {
        sys.d.main[static_cast<std::size_t>(i)] = q_integer(i + 1);
        sys.e.main[static_cast<std::size_t>(i)] = q_integer(i);
        if (i + 1 < size) {
            sys.d.super[static_cast<std::size_t>(i)] = q_integer(i + 1);
            sys.e.sub[static_cast<std::size_t>(i)] = q_integer(i + 1);
        }
    }
    sys.w.assign(static_cast<std::size_t>(size), MultiPoly::zero());
    sys.v.assign(static_cast<std::size_t>(size), MultiPoly::zero());
    for (int i = 0; i < size; ++i) sys.w[static_cast<std::size_t>(i)] = yt_pow(i);
    if (size > 0) sys.v[0] = MultiPoly::one();
    return sys;
}

RelationReport verify_relations(const AnsatzSystem& sys) {
    int n = sys.d.size;
    MultiPoly q1 = MultiPoly::q(1);
    auto product_entry = [&](const BandedOperator& a, const BandedOperator& b, int i, int j) {
        MultiPoly acc;
        for (int k = std::max({0, i - 1, j - 1}); k <= std::min({n - 1, i + 1, j + 1}); ++k)
            acc += a.entry(i, k) * b.entry(k, j);
        return acc;
    };
    for (int i = 0; i <= n - 2; ++i) {
        for (int j = 0; j <= n - 2; ++j) {
            MultiPoly lhs = product_entry(sys.d, sys.e, i, j);
            MultiPoly rhs = q1 * product_entry(sys.e, sys.d, i, j) + sys.d.entry(i, j) +
                            sys.e.entry(i, j);
            if (!(lhs == rhs))
                return {false, "DE = qED + D + E", i, j,
                        "(" + lhs.str() + ") vs (" + rhs.str() + ")"};
        }
    }
    for (int i = 0; i <= n - 2; ++i) {
        MultiPoly acc;
        for (int k = 0; k < n; ++k) acc += sys.d.entry(i, k) * sys.v[static_cast<std::size_t>(k)];
        if (!(acc == sys.v[static_cast<std::size_t>(i)]))
            return {false, "D|V> = |V>", i, 0, acc.str()};
    }
    MultiPoly yt = MultiPoly::monomial({1, 1, 0});
    for (int j = 0; j <= n - 2; ++j) {
        MultiPoly lhs, rhs;
        for (int k = 0; k < n; ++k) {
            lhs += sys.w[static_cast<std::size_t>(k)] * sys.e.entry(k, j);
            rhs += sys.w[static_cast<std::size_t>(k)] * sys.d.entry(k, j);
        }
        rhs = yt * rhs;
        if (!(lhs == rhs))
            return {false, "<W|E = yt <W|D", 0, j, "(" + lhs.str() + ") vs (" + rhs.str() + ")"};
    }
    return {};
}

MultiPoly ansatz_bn(int n, const AnsatzSystem& sys) {
    if (sys.d.size < n + 1)
        throw TruncationError("truncation " + std::to_string(sys.d.size) +
                              " too small for n = " + std::to_string(n));
    int size = sys.d.size;
    // row <- row * (y^2 D + E), tridiagonal.
    std::vector<MultiPoly> row = sys.w;
    MultiPoly y2 = MultiPoly::y(2);
    for (int step = 0; step < n; ++step) {
        std::vector<MultiPoly> next(static_cast<std::size_t>(size));
        for (int j = 0; j < size; ++j) {
            MultiPoly acc;
            for (int i = std::max(0, j - 1); i <= std::min(size - 1, j + 1); ++i) {
                MultiPoly m = y2 * sys.d.entry(i, j) + sys.e.entry(i, j);
                if (!m.is_zero()) acc += row[static_cast<std::size_t>(i)] * m;
            }
            next[static_cast<std::size_t>(j)] = acc;
        }
        row = std::move(next);
    }
    MultiPoly out;
    for (int j = 0; j < size; ++j) out += row[static_cast<std::size_t>(j)] * sys.v[static_cast<std::size_t>(j)];
    return out;
}

MultiPoly ansatz_bn(int n, int which) {
    AnsatzSystem sys = which == 1 ? solution1(n + 1) : solution2(n + 1);
    return ansatz_bn(n, sys);
}

MultiPoly recurrence_bn(int n) {
    MultiPoly b = MultiPoly::one();
    MultiPoly y_plus_t = MultiPoly::y() + MultiPoly::t();
    MultiPoly one_plus_yt = MultiPoly::one() + MultiPoly::monomial({1, 1, 0});
    for (int k = 0; k < n; ++k) b = y_plus_t * q_derivative_t(one_plus_yt * b);
    return b;
}

MultiPoly cf_gamma(int h) {
    MultiPoly qh = q_integer(h);
    MultiPoly qh1 = q_integer(h + 1);
    return MultiPoly::y(2) * qh1 + qh + MultiPoly::monomial({1, 1, h}) * (qh + qh1);
}

MultiPoly cf_lambda(int h) {
    MultiPoly qh = q_integer(h);
    MultiPoly factor1 = MultiPoly::y() + MultiPoly::monomial({0, 1, h - 1});  // y + t q^{h-1}
    MultiPoly factor2 = MultiPoly::one() + MultiPoly::monomial({1, 1, h});    // 1 + y t q^h
    return MultiPoly::y() * qh * qh * factor1 * factor2;
}

Series cf_series(int order) {
    return series_jfraction(cf_gamma, cf_lambda, order);
}

namespace {

// P_j(y,q) = sum_{l=0}^{2j} y^l q^{l(2j-l+1)/2}.
MultiPoly p_sum(int j) {
    MultiPoly p;
    for (int l = 0; l <= 2 * j; ++l) p.add_term({l, 0, l * (2 * j - l + 1) / 2}, 1);
    return p;
}

MultiPoly one_minus_q_pow(int n) {
    MultiPoly base = MultiPoly::one() - MultiPoly::q(1);
    return base.pow(n);
}

}  // namespace

MultiPoly closed_form_y1q(int n, int form) {
    MultiPoly numerator;
    if (form == 1) {
        for (int j = 0; j <= n; ++j) {
            MultiPoly a;
            for (int i = 0; i <= 2 * n - 2 * j; ++i)
                a.add_term({i, 0, 0},
                           checked_mul(binomial(n, j + (i + 1) / 2), binomial(n, i / 2)));
            numerator += a.scaled(j % 2 ? -1 : 1) * p_sum(j);
        }
    } else {
        for (int k = 0; k <= n; ++k) {
            MultiPoly a;
            for (int i = 0; i <= n - k; ++i)
                a.add_term({2 * i, 0, 0},
                           checked_sub(checked_mul(binomial(n, i), binomial(n, i + k)),
                                       checked_mul(binomial(n, i - 1), binomial(n, i + k + 1))));
            MultiPoly inner;
            for (int j = 0; j <= k; ++j)
                inner += MultiPoly::y(k - j).scaled(j % 2 ? -1 : 1) * p_sum(j);
            numerator += a * inner;
        }
    }
    return divide_exact(numerator, one_minus_q_pow(n));
}

MultiPoly closed_form_y0q(int n) {
    MultiPoly numerator;
    for (int k = 0; k <= n; ++k) {
        MultiPoly a;
        for (int j = 0; j <= n - k; ++j)
            a.add_term({j, 0, 0},
                       checked_sub(checked_mul(binomial(n, j), binomial(n, j + k)),
                                   checked_mul(binomial(n, j - 1), binomial(n, j + k + 1))));
        MultiPoly inner;
        for (int i = 0; i <= k; ++i) inner.add_term({i, 0, i * (k + 1 - i)}, 1);
        numerator += a * inner.scaled(k % 2 ? -1 : 1);
    }
    MultiPoly eulerian_poly = divide_exact(numerator, one_minus_q_pow(n));
    return double_y_exponents(eulerian_poly);
}

CheckReport narayana_b_check(int n) {
    GenTable table = gen_table(n);
    MultiPoly lhs = eval_subst(table.b, std::nullopt, 1, 0);
    MultiPoly rhs;
    for (int i = 1; i <= 2 * n; ++i)
        rhs.add_term({i, 0, 0}, checked_mul(binomial(n, i / 2), binomial(n - 1, (i + 1) / 2 - 1)));
    if (n == 0) rhs = MultiPoly::one();
    if (!(lhs == rhs))
        return {false, "B_n(y,1,0) mismatch at n=" + std::to_string(n) + ": " + lhs.str() +
                           " vs " + rhs.str()};
    for (int k = 0; k <= n; ++k) {
        MultiPoly e = table.eulerian_b[static_cast<std::size_t>(k)];
        Int at0 = eval_subst(e, std::nullopt, std::nullopt, 0).coeff({0, 0, 0});
        Int expect = checked_mul(binomial(n, k), binomial(n, k));
        if (at0 != expect)
            return {false, "E^B_{n,k}(0) = C(n,k)^2 fails at n=" + std::to_string(n) +
                               ", k=" + std::to_string(k) + ": " + std::to_string(at0) + " vs " +
                               std::to_string(expect)};
    }
    return {};
}

namespace {

// gamma, lambda and d at t = 1, scaled by (1-q) per level: the coefficients
// of the fraction generating (1-q)^n B_n(y,1,q).
MultiPoly scaled_gamma(int h) {
    MultiPoly one = MultiPoly::one();
    MultiPoly g;
    g += MultiPoly::y(2) * (one - MultiPoly::q(h + 1));
    g += one - MultiPoly::q(h);
    MultiPoly bracket = MultiPoly::constant(2) - MultiPoly::q(h + 1) - MultiPoly::q(h);
    g += MultiPoly::monomial({1, 0, h}) * bracket;
    return g;
}

MultiPoly scaled_lambda(int h) {
    MultiPoly one = MultiPoly::one();
    MultiPoly s = one - MultiPoly::q(h);
    return MultiPoly::y() * s * s * (MultiPoly::y() + MultiPoly::q(h - 1)) *
           (one + MultiPoly::monomial({1, 0, h}));
}

MultiPoly d_coeff(int h) {
    if (h == 0) return MultiPoly::zero();
    if (h % 2 == 1) {
        int k = (h - 1) / 2;  // d_{2k+1} = (1 + y q^{k+1})(y + q^k)
        return (MultiPoly::one() + MultiPoly::monomial({1, 0, k + 1})) *
               (MultiPoly::y() + MultiPoly::q(k));
    }
    int k = h / 2;  // d_{2k} = y (1 - q^k)^2
    MultiPoly s = MultiPoly::one() - MultiPoly::q(k);
    return MultiPoly::y() * s * s;
}

// (1+z)(1+y^2 z) as a series.
Series big_denominator(int order) {
    Series s = Series::constant(MultiPoly::one(), order);
    if (order >= 1) s[1] = MultiPoly::one() + MultiPoly::y(2);
    if (order >= 2) s[2] = MultiPoly::y(2);
    return s;
}

Series one_minus_yz(int order) {
    Series s = Series::constant(MultiPoly::one(), order);
    if (order >= 1) s[1] = -MultiPoly::y();
    return s;
}

// (1-yz) / ((1+z)(1+y^2z) - gamma_0 z  -  lambda_1 z^2 / (...)).
Series modified_jfraction(int order) {
    int depth = (order + 1) / 2 + 2;
    Series f(order);
    for (int h = depth; h >= 0; --h) {
        Series den = big_denominator(order) - Series::constant(scaled_gamma(h), order).shifted(1);
        if (h < depth) den = den - f.scaled(scaled_lambda(h + 1)).shifted(2);
        f = den.inverse();
    }
    return one_minus_yz(order) * f;
}

// 1/(1-yz) (+) d_1 z/(1-yz) (+) d_2 z/(1-yz) (+) ...
Series schroeder_sfraction(int order) {
    int depth = order + 2;
    Series f(order);
    for (int h = depth; h >= 0; --h) {
        Series den = one_minus_yz(order);
        if (h < depth) den = den + f.scaled(d_coeff(h + 1)).shifted(1);
        f = den.inverse();
    }
    return f;
}

}  // namespace

CheckReport schroeder_lemma_check(int order) {
    MultiPoly y1 = MultiPoly::one() + MultiPoly::y();
    for (int h = 1; h <= order; ++h) {
        if (!(scaled_lambda(h) == d_coeff(2 * h - 1) * d_coeff(2 * h)))
            return {false, "lambda_h = d_{2h-1} d_{2h} fails at h=" + std::to_string(h)};
    }
    for (int h = 0; h <= order; ++h) {
        if (!(scaled_gamma(h) == y1 * y1 - d_coeff(2 * h) - d_coeff(2 * h + 1)))
            return {false, "gamma_h = (1+y)^2 - d_{2h} - d_{2h+1} fails at h=" + std::to_string(h)};
    }
    Series lhs = modified_jfraction(order);
    Series rhs = schroeder_sfraction(order);
    for (int k = 0; k <= order; ++k)
        if (!(lhs[k] == rhs[k]))
            return {false, "fraction identity differs at z^" + std::to_string(k) + ": (" +
                               lhs[k].str() + ") vs (" + rhs[k].str() + ")"};
    // Explicit series: sum_j (-z)^j sum_{i=0}^{2j} y^i q^{i(2j-i+1)/2}.
    for (int j = 0; j <= order; ++j) {
        MultiPoly expect = p_sum(j).scaled(j % 2 ? -1 : 1);
        if (!(rhs[j] == expect))
            return {false, "alternating double sum differs at z^" + std::to_string(j) + ": (" +
                               rhs[j].str() + ") vs (" + expect.str() + ")"};
    }
    return {};
}

CheckReport lagrange_check(int k, int order) {
    // f = z/((1+z)(1+y^2 z)) = z * inverse of the quadratic.
    Series f = big_denominator(order).inverse().shifted(1);
    Series c = series_reversion(f);
    Series power = Series::constant(MultiPoly::one(), order);
    for (int rep = 0; rep < k + 1; ++rep) power = power * c;
    for (int n = 0; n + 1 <= order; ++n) {
        MultiPoly expect;
        for (int j = 0; j <= n - k; ++j)
            expect.add_term({2 * j, 0, 0},
                            checked_sub(checked_mul(binomial(n, j), binomial(n, j + k)),
                                        checked_mul(binomial(n, j - 1), binomial(n, j + k + 1))));
        if (!(power[n + 1] == expect))
            return {false, "[z^" + std::to_string(n + 1) + "] C^" + std::to_string(k + 1) +
                               " = (" + power[n + 1].str() + ") vs (" + expect.str() + ")"};
    }
    return {};
}

}  // namespace pignose
