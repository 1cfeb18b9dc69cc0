#include "pignose/series.hpp"

#include <algorithm>

#include "pignose/errors.hpp"

namespace pignose {

Series::Series(int order, std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

Series Series::z(int order) {
    Series s(order);
    if (order >= 1) s[1] = MultiPoly::one();
    return s;
}

Series Series::constant(const MultiPoly& c, int order) {
    Series s(order);
    s[0] = c;
    return s;
}

Series Series::truncated(int order) const {
    Series s(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) s[k] = coeffs_[k];
    return s;
}

Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Series Series::scaled(const MultiPoly& c) const {
    Series r(order());
    for (int k = 0; k <= order(); ++k) r[k] = coeffs_[k] * c;
    return r;
}

Series Series::shifted(int k) const {
    Series r(order());
    for (int i = 0; i + k <= order(); ++i) r[i + k] = coeffs_[i];
    return r;
}

Series Series::inverse() const {
    if (!coeffs_[0].is_one())
        throw BadLowestTermsError("series inverse requires constant term 1");
    Series g(order());
    g[0] = MultiPoly::one();
    for (int n = 1; n <= order(); ++n) {
        MultiPoly acc;
        for (int k = 1; k <= n; ++k) acc += coeffs_[k] * g[n - k];
        g[n] = -acc;
    }
    return g;
}

Series Series::composed_with(const Series& b) const {
    if (!b[0].is_zero())
        throw BadLowestTermsError("series composition requires zero constant term");
    int N = std::min(order(), b.order());
    Series r(N);
    // Horner from the top coefficient down.
    for (int k = order(); k >= 0; --k) {
        r = r * b;
        r[0] += coeffs_[k];
    }
    return r;
}

Series series_jfraction(const std::function<MultiPoly(int)>& gamma,
                        const std::function<MultiPoly(int)>& lambda, int order,
                        int extra_depth) {
    int depth = (order + 1) / 2 + 1 + extra_depth;
    // F_h = 1 / (1 - gamma(h) z - lambda(h+1) z^2 F_{h+1}), bottom-up.
    Series f(order);
    for (int h = depth; h >= 0; --h) {
        Series den = Series::constant(MultiPoly::one(), order);
        den = den - Series::constant(gamma(h), order).shifted(1);
        if (h < depth) den = den - f.scaled(lambda(h + 1)).shifted(2);
        f = den.inverse();
    }
    return f;
}

Series series_reversion(const Series& f) {
    if (!f[0].is_zero() || !f[1].is_one())
        throw BadLowestTermsError(
            "series reversion requires zero constant term and unit linear coefficient");
    int N = f.order();
    Series c(N);
    if (N >= 1) c[1] = MultiPoly::one();
    // Coefficient of z^n in f(C) depends only on c_1..c_{n-1}; peel them off
    // one order at a time.
    for (int n = 2; n <= N; ++n) {
        Series g = f.truncated(n).composed_with(c.truncated(n));
        c[n] = -g[n];
    }
    return c;
}

}  // namespace pignose
