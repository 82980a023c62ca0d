#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/subtractive.hpp"

namespace bidiag {

/// Auxiliary convolution tables of the subtraction-free diagonal recurrence.
/// Row r (r = 1..order_max) holds the order-r quantities; row 0 is unused
/// padding so indices match orders.
///   g[r][n-1] = 0 and g_tilde[r][0] = 0 for every r (structural zeros);
///   every other entry is strictly positive.
struct GTables {
    std::size_t order_max = 0;
    std::vector<std::vector<double>> g;
    std::vector<std::vector<double>> g_tilde;
};

namespace detail {

struct SubfreeCore {
    GTables tables;
    std::vector<double> v1;  // diag (B^T B)^{-1}, accumulated as g^(1) + 1/q
    std::vector<double> w1;  // diag (B B^T)^{-1}, accumulated as g~^(1) + 1/q
};

/// Builds g / g_tilde up to order M together with the first-order diagonals
/// they depend on, in one pass per sweep direction.
///
/// Higher-order updates use the equivalent grouped form in which the k = 1
/// convolution term is absorbed into the first-order diagonal coefficient:
///   g~[r][i] = F~ * g~[r][i-1] + w1[i-1] * g~[r-1][i] + sum_{k=2}^{r-1} g~[k][i-1] * g~[r-k][i]
/// (mirrored for g). This is the same operation order the factorial-free
/// engine uses, so the two tables match bit for bit.
inline SubfreeCore subfree_core(const BidiagonalMatrix& B, int M) {
    if (M < 1) throw Error("g_tables needs M >= 1");
    const std::size_t n = B.order();
    const Ratios r = ratios(B);
    const std::size_t mm = static_cast<std::size_t>(M);

    SubfreeCore core;
    core.tables.order_max = mm;
    core.tables.g.assign(mm + 1, std::vector<double>(n, 0.0));
    core.tables.g_tilde.assign(mm + 1, std::vector<double>(n, 0.0));
    core.v1.assign(n, 0.0);
    core.w1.assign(n, 0.0);

    auto& g = core.tables.g;
    auto& gt = core.tables.g_tilde;

    // Forward sweep: g_tilde and w1.
    core.w1[0] = r.b_check[0];
    for (std::size_t i = 1; i < n; ++i) {
        gt[1][i] = r.f_tilde[i - 1] * core.w1[i - 1];
        core.w1[i] = gt[1][i] + r.b_check[i];
    }
    for (std::size_t m = 2; m <= mm; ++m)
        for (std::size_t i = 1; i < n; ++i) {
            double acc = r.f_tilde[i - 1] * gt[m][i - 1] + core.w1[i - 1] * gt[m - 1][i];
            for (std::size_t k = 2; k + 1 <= m; ++k) acc += gt[k][i - 1] * gt[m - k][i];
            gt[m][i] = acc;
        }

    // Backward sweep: g and v1.
    core.v1[n - 1] = r.b_check[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        g[1][i] = r.f[i] * core.v1[i + 1];
        core.v1[i] = g[1][i] + r.b_check[i];
    }
    for (std::size_t m = 2; m <= mm; ++m)
        for (std::size_t i = n - 1; i-- > 0;) {
            double acc = r.f[i] * g[m][i + 1] + core.v1[i + 1] * g[m - 1][i];
            for (std::size_t k = 2; k + 1 <= m; ++k) acc += g[k][i + 1] * g[m - k][i];
            g[m][i] = acc;
        }

    for (std::size_t m = 1; m <= mm; ++m) {
        check_row_finite(g[m], "g", static_cast<int>(m));
        check_row_finite(gt[m], "g~", static_cast<int>(m));
    }
    return core;
}

}  // namespace detail

inline GTables g_tables(const BidiagonalMatrix& B, int M) {
    return detail::subfree_core(B, M).tables;
}

/// Diagonal entries of Gram inverse powers up to order M (M >= 2) by the
/// subtraction-free recurrence: only sums, products and divisions of positive
/// quantities, so every entry is positive for every admissible input.
inline DiagTable diag_powers_subfree(const BidiagonalMatrix& B, int M) {
    if (M < 2) throw Error("diag_powers_subfree needs M >= 2");
    const std::size_t n = B.order();
    const Ratios r = ratios(B);
    detail::SubfreeCore core = detail::subfree_core(B, M - 1);
    const auto& g = core.tables.g;
    const auto& gt = core.tables.g_tilde;

    DiagTable t;
    t.order_max = static_cast<std::size_t>(M);
    t.method = "ykn12";
    t.v.assign(t.order_max + 1, std::vector<double>(n, 1.0));
    t.w.assign(t.order_max + 1, std::vector<double>(n, 1.0));
    t.v[1] = core.v1;
    t.w[1] = core.w1;

    for (std::size_t s = 2; s <= t.order_max; ++s) {
        std::vector<double>& v = t.v[s];
        std::vector<double>& w = t.w[s];
        v[n - 1] = r.b_check[n - 1] * t.w[s - 1][n - 1];
        for (std::size_t i = n - 1; i-- > 0;) {
            double conv = 0.0;
            for (std::size_t k = 1; k + 1 <= s; ++k) conv += g[k][i] * t.w[s - k][i];
            v[i] = r.f[i] * v[i + 1] + r.b_check[i] * t.w[s - 1][i] + 2.0 * conv;
        }
        w[0] = r.b_check[0] * t.v[s - 1][0];
        for (std::size_t i = 1; i < n; ++i) {
            double conv = 0.0;
            for (std::size_t k = 1; k + 1 <= s; ++k) conv += gt[k][i] * t.v[s - k][i];
            w[i] = r.f_tilde[i - 1] * w[i - 1] + r.b_check[i] * t.v[s - 1][i] + 2.0 * conv;
        }
        detail::check_row_finite(v, "v", static_cast<int>(s));
        detail::check_row_finite(w, "w", static_cast<int>(s));
    }
    return t;
}

/// Trace of the M-th Gram inverse power via the subtraction-free diagonals.
/// M = 1 is routed through the shared first-order sweeps.
inline double trace_subfree(const BidiagonalMatrix& B, int M) {
    if (M < 1) throw Error("trace needs M >= 1");
    double sum = 0.0;
    if (M == 1) {
        for (double x : first_order_diagonals(B).v1) sum += x;
        return sum;
    }
    DiagTable t = diag_powers_subfree(B, M);
    for (double x : t.v[static_cast<std::size_t>(M)]) sum += x;
    return sum;
}

}  // namespace bidiag
