#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"

namespace bidiag {

/// Row-major dense square matrix used only by the brute-force reference path.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t order) : n(order), a(order * order, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    double trace() const {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += at(i, i);
        return sum;
    }

    bool finite() const {
        for (double x : a)
            if (!std::isfinite(x)) return false;
        return true;
    }

    /// Largest |A_ij - A_ji| scaled by max(1, |A_ij|).
    double asymmetry() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double d = std::abs(at(i, j) - at(j, i)) / std::max(1.0, std::abs(at(i, j)));
                worst = std::max(worst, d);
            }
        return worst;
    }
};

inline DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix r(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            double xik = x.at(i, k);
            if (xik == 0.0) continue;
            for (std::size_t j = 0; j < x.n; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

/// Inverse of B by back-substitution on the explicit entries sqrt(q), sqrt(e).
/// The result is upper triangular.
inline DenseMatrix invert_bidiagonal(const BidiagonalMatrix& B) {
    const std::size_t n = B.order();
    DenseMatrix s(n);
    std::vector<double> sq(n), se(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) sq[i] = std::sqrt(B.q(i));
    for (std::size_t i = 0; i + 1 < n; ++i) se[i] = std::sqrt(B.e(i));
    for (std::size_t j = 0; j < n; ++j) {
        s.at(j, j) = 1.0 / sq[j];
        for (std::size_t i = j; i-- > 0;) s.at(i, j) = -se[i] * s.at(i + 1, j) / sq[i];
    }
    if (!s.finite()) throw OverflowError("bidiagonal inverse overflows");
    return s;
}

enum class Side { upper, lower };  // upper = (B^T B)^{-m}, lower = (B B^T)^{-m}

/// m-th power of the selected Gram inverse, built from products of B^{-1}.
/// The result is symmetrized; asymmetry beyond 1e-12 is a numeric failure.
inline DenseMatrix gram_inverse_power(const BidiagonalMatrix& B, Side side, int m) {
    if (m < 1) throw Error("gram_inverse_power needs m >= 1");
    const DenseMatrix s = invert_bidiagonal(B);
    const std::size_t n = B.order();

    DenseMatrix base(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                sum += (side == Side::upper) ? s.at(i, k) * s.at(j, k)   // S S^T
                                             : s.at(k, i) * s.at(k, j);  // S^T S
            base.at(i, j) = sum;
        }

    DenseMatrix r = base;
    for (int p = 1; p < m; ++p) {
        r = multiply(r, base);
        if (!r.finite())
            throw OverflowError("Gram inverse power overflows at m = " + std::to_string(p + 1));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double avg = 0.5 * (r.at(i, j) + r.at(j, i));
                r.at(i, j) = r.at(j, i) = avg;
            }
    }
    if (!r.finite()) throw OverflowError("Gram inverse power overflows");
    return r;
}

/// Reference trace of the m-th Gram inverse power. Both Gram products are
/// evaluated and must agree; their mismatch would mean the oracle itself
/// lost accuracy.
inline double trace_oracle(const BidiagonalMatrix& B, int m) {
    double upper = gram_inverse_power(B, Side::upper, m).trace();
    double lower = gram_inverse_power(B, Side::lower, m).trace();
    double dev = std::abs(upper - lower) / std::max(std::abs(upper), std::abs(lower));
    if (!(dev <= 1e-12))
        throw Error("oracle trace mismatch between Gram sides: relative deviation " +
                    std::to_string(dev));
    return upper;
}

namespace detail {

/// Nested sum of products A[i,j1] A[j1,j2] ... A[j_{m-1},i] with every j_k
/// ranging over [lo, hi). Term count is (hi-lo)^(m-1).
inline double path_sum(const DenseMatrix& A, std::size_t i, int m, std::size_t lo,
                       std::size_t hi, double budget) {
    if (m < 2) throw Error("path sums are defined for m >= 2");
    if (hi <= lo) return 0.0;
    const std::size_t range = hi - lo;
    double terms = 1.0;
    for (int k = 0; k < m - 1; ++k) terms *= static_cast<double>(range);
    if (terms > budget)
        throw ComplexityGuard("path enumeration needs " + std::to_string(terms) +
                              " terms, budget is " + std::to_string(budget));

    std::vector<std::size_t> idx(static_cast<std::size_t>(m) - 1, lo);
    double sum = 0.0;
    for (;;) {
        double prod = A.at(i, idx[0]);
        for (std::size_t k = 0; k + 1 < idx.size(); ++k) prod *= A.at(idx[k], idx[k + 1]);
        prod *= A.at(idx.back(), i);
        sum += prod;
        std::size_t k = idx.size();
        while (k-- > 0) {
            if (++idx[k] < hi) break;
            idx[k] = lo;
            if (k == 0) return sum;
        }
    }
}

}  // namespace detail

/// Sum over all index paths below i (0-based) through W = (B B^T)^{-1}.
inline double path_sum_gtilde(const BidiagonalMatrix& B, std::size_t i, int m,
                              double budget = 1e7) {
    DenseMatrix w = gram_inverse_power(B, Side::lower, 1);
    return detail::path_sum(w, i, m, 0, i, budget);
}

/// Sum over all index paths above i (0-based) through V = (B^T B)^{-1}.
inline double path_sum_g(const BidiagonalMatrix& B, std::size_t i, int m, double budget = 1e7) {
    DenseMatrix v = gram_inverse_power(B, Side::upper, 1);
    return detail::path_sum(v, i, m, i + 1, B.order(), budget);
}

namespace detail {

/// Number of eigenvalues of the tridiagonal B^T B strictly below x,
/// via the signs of the LDL^T pivots.
inline std::size_t sturm_count_below(const std::vector<double>& diag,
                                     const std::vector<double>& off2, double x,
                                     double pivmin) {
    std::size_t count = 0;
    double t = diag[0] - x;
    if (t < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (std::abs(t) < pivmin) t = -pivmin;
        t = diag[i] - x - off2[i - 1] / t;
        if (t < 0.0) ++count;
    }
    return count;
}

}  // namespace detail

/// Minimal singular value of B: sqrt of the smallest eigenvalue of the
/// symmetric tridiagonal B^T B, located by Sturm-count bisection to a
/// relative interval width of 1e-13.
inline double sigma_min_oracle(const BidiagonalMatrix& B) {
    const std::size_t n = B.order();
    std::vector<double> diag(n), off2(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) diag[i] = B.q(i) + (i > 0 ? B.e(i - 1) : 0.0);
    double max_off2 = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        off2[i] = B.q(i) * B.e(i);
        max_off2 = std::max(max_off2, off2[i]);
    }
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_off2);

    // lambda_min <= min(diag); push hi up until at least one eigenvalue is below it.
    double hi = *std::min_element(diag.begin(), diag.end());
    while (detail::sturm_count_below(diag, off2, hi, pivmin) == 0)
        hi *= 1.0 + 4.0 * std::numeric_limits<double>::epsilon();
    double lo = 0.0;

    for (int iter = 0; iter < 2000 && (hi - lo) > 1e-13 * hi; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (detail::sturm_count_below(diag, off2, mid, pivmin) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return std::sqrt(0.5 * (lo + hi));
}

}  // namespace bidiag
