#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "pignose/poly.hpp"

namespace pignose {

// Truncated formal power series in z over Z[y,t,q]. coeffs()[k] is the
// coefficient of z^k; arithmetic between two series truncates to the smaller
// order. Everything stays in the polynomial ring: the only inverses taken are
// of series with constant term 1.
class Series {
public:
    Series() : coeffs_(1) {}
    explicit Series(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}
    Series(int order, std::vector<MultiPoly> coeffs);

    static Series z(int order);
    static Series constant(const MultiPoly& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const MultiPoly& operator[](int k) const { return coeffs_[k]; }
    MultiPoly& operator[](int k) { return coeffs_[k]; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    Series truncated(int order) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series scaled(const MultiPoly& c) const;
    Series shifted(int k) const;  // multiply by z^k, truncating at the order

    // Multiplicative inverse; requires constant term exactly 1.
    Series inverse() const;

    // Composition a(b(z)); requires b to have zero constant term.
    Series composed_with(const Series& b) const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<MultiPoly> coeffs_;
};

// Expands the J-fraction
//   1 / (1 - gamma(0) z - lambda(1) z^2 / (1 - gamma(1) z - lambda(2) z^2 / ...))
// to the given order, bottom-up from the deepest retained level. Truncation
// depth ceil(order/2)+1 suffices; extra_depth retains more levels, which must
// not change any coefficient.
Series series_jfraction(const std::function<MultiPoly(int)>& gamma,
                        const std::function<MultiPoly(int)>& lambda, int order,
                        int extra_depth = 0);

// Compositional inverse: returns C with f(C(z)) = z up to the truncation
// order. Requires f to have zero constant term and linear coefficient 1.
Series series_reversion(const Series& f);

}  // namespace pignose
