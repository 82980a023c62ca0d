#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"

namespace bidiag {

/// Diagonal entries of the first Gram inverses, by the classic two-sweep
/// recurrence:
///   v1[n-1] = 1/q[n-1],  v1[i] = (e[i] * v1[i+1] + 1) / q[i]   (backward)
///   w1[0]   = 1/q[0],    w1[i] = (e[i-1] * w1[i-1] + 1) / q[i] (forward)
/// v1 is the diagonal of (B^T B)^{-1}, w1 of (B B^T)^{-1}.
struct FirstOrderDiagonals {
    std::vector<double> v1;
    std::vector<double> w1;
};

inline FirstOrderDiagonals first_order_diagonals(const BidiagonalMatrix& B) {
    const std::size_t n = B.order();
    FirstOrderDiagonals d;
    d.v1.resize(n);
    d.w1.resize(n);
    d.v1[n - 1] = 1.0 / B.q(n - 1);
    for (std::size_t i = n - 1; i-- > 0;) d.v1[i] = (B.e(i) * d.v1[i + 1] + 1.0) / B.q(i);
    d.w1[0] = 1.0 / B.q(0);
    for (std::size_t i = 1; i < n; ++i) d.w1[i] = (B.e(i - 1) * d.w1[i - 1] + 1.0) / B.q(i);
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(d.v1[i]) || !std::isfinite(d.w1[i]))
            throw OverflowError("first-order diagonal overflows at index " +
                                std::to_string(i + 1));
    return d;
}

/// A diagonal-power entry computed as <= 0 where the exact value is positive,
/// which certifies catastrophic cancellation in the subtractive recurrence.
struct CancellationWarning {
    char table;         // 'v' or 'w'
    int order;          // power m
    std::size_t index;  // 1-based position
    double value;

    std::string describe() const {
        return std::string("cancellation: ") + table + "^(" + std::to_string(order) + ")[" +
               std::to_string(index) + "] = " + std::to_string(value) + " (exact value positive)";
    }
};

/// Which end the running z accumulator starts from. Both give the same table
/// in exact arithmetic; their floating-point disagreement is a cancellation
/// diagnostic.
enum class ZDirection { forward, backward };

inline const char* to_string(ZDirection d) {
    return d == ZDirection::forward ? "forward" : "backward";
}

/// Diagonal entries of Gram inverse powers.
///   v[m][i] = (i,i) entry of (B^T B)^{-m},  m = 0..order_max
///   w[m][i] = (i,i) entry of (B B^T)^{-m}
///   z[m]    = running accumulator rows, m = 0..order_max-1 (subtractive
///             engine only; left empty by the subtraction-free engine)
struct DiagTable {
    std::size_t order_max = 0;
    std::vector<std::vector<double>> v;
    std::vector<std::vector<double>> w;
    std::vector<std::vector<double>> z;
    std::string method;
    std::vector<CancellationWarning> warnings;
};

namespace detail {

inline void check_row_finite(const std::vector<double>& row, const char* table, int order) {
    for (std::size_t i = 0; i < row.size(); ++i)
        if (!std::isfinite(row[i]))
            throw OverflowError(std::string(table) + "^(" + std::to_string(order) + ")[" +
                                std::to_string(i + 1) + "] overflows");
}

inline void audit_positive(const std::vector<double>& row, char table, int order,
                           std::vector<CancellationWarning>& warnings) {
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] <= 0.0) warnings.push_back({table, order, i + 1, row[i]});
}

}  // namespace detail

/// Diagonal entries of (B^T B)^{-m} and (B B^T)^{-m} for m = 0..M by the
/// original recurrence. Orders m >= 2 subtract the opposite-side diagonal
/// from the z accumulator, so cancellation is possible; nonpositive results
/// are recorded as warnings and returned unchanged.
inline DiagTable diag_powers_subtractive(const BidiagonalMatrix& B, int M,
                                         ZDirection dir = ZDirection::forward) {
    if (M < 1) throw Error("diag_powers_subtractive needs M >= 1");
    const std::size_t n = B.order();
    DiagTable t;
    t.order_max = static_cast<std::size_t>(M);
    t.method = std::string("kyn11/") + to_string(dir);
    t.v.assign(t.order_max + 1, std::vector<double>(n, 1.0));
    t.w.assign(t.order_max + 1, std::vector<double>(n, 1.0));
    t.z.assign(t.order_max, std::vector<double>(n, 0.0));

    for (int p = 1; p <= M; ++p) {
        // z row at power p-1 comes from the v/w rows of the same power.
        const std::vector<double>& vp = t.v[p - 1];
        const std::vector<double>& wp = t.w[p - 1];
        std::vector<double>& z = t.z[p - 1];
        if (dir == ZDirection::forward) {
            z[0] = 2.0 * vp[0];
            for (std::size_t i = 1; i < n; ++i) z[i] = z[i - 1] + 2.0 * (vp[i] - wp[i - 1]);
        } else {
            z[n - 1] = 2.0 * wp[n - 1];
            for (std::size_t i = n - 1; i-- > 0;) z[i] = z[i + 1] + 2.0 * (wp[i] - vp[i + 1]);
        }
        detail::check_row_finite(z, "z", p - 1);

        std::vector<double>& v = t.v[p];
        std::vector<double>& w = t.w[p];
        if (p == 1) {
            // The p = 1 step reduces to the first-order sweeps; using the
            // identical operation order keeps it bit-equal to
            // first_order_diagonals.
            FirstOrderDiagonals d = first_order_diagonals(B);
            v = std::move(d.v1);
            w = std::move(d.w1);
        } else {
            v[n - 1] = wp[n - 1] / B.q(n - 1);
            for (std::size_t i = n - 1; i-- > 0;)
                v[i] = (B.e(i) * v[i + 1] + z[i] - wp[i]) / B.q(i);
            w[0] = vp[0] / B.q(0);
            for (std::size_t i = 1; i < n; ++i)
                w[i] = (B.e(i - 1) * w[i - 1] + z[i] - vp[i]) / B.q(i);
        }
        detail::check_row_finite(v, "v", p);
        detail::check_row_finite(w, "w", p);
        detail::audit_positive(v, 'v', p, t.warnings);
        detail::audit_positive(w, 'w', p, t.warnings);
    }
    return t;
}

/// Trace of the M-th Gram inverse power by both diagonal sums; they agree in
/// exact arithmetic, and `by_upper` (the sum over v) is the canonical value.
struct SubtractiveTrace {
    double by_upper = 0.0;
    double by_lower = 0.0;
    std::vector<CancellationWarning> warnings;
};

inline SubtractiveTrace trace_subtractive(const BidiagonalMatrix& B, int M,
                                          ZDirection dir = ZDirection::forward) {
    SubtractiveTrace r;
    if (M == 1) {
        FirstOrderDiagonals d = first_order_diagonals(B);
        for (double x : d.v1) r.by_upper += x;
        for (double x : d.w1) r.by_lower += x;
        return r;
    }
    DiagTable t = diag_powers_subtractive(B, M, dir);
    for (double x : t.v[static_cast<std::size_t>(M)]) r.by_upper += x;
    for (double x : t.w[static_cast<std::size_t>(M)]) r.by_lower += x;
    r.warnings = std::move(t.warnings);
    return r;
}

}  // namespace bidiag
