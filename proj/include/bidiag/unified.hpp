#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "bidiag/derivative.hpp"
#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/subtraction_free.hpp"

namespace bidiag {

/// Tables of the factorial-free trace formula. Row m sits at index m; row 0
/// is padding. The order-M trace is the plain sum of big[M] — no binomial,
/// no factorial, no post-scaling.
///   tilde : small = g~, big = G~ (structural zero column small[m][0])
///   plain : small = g,  big = G  (structural zero column small[m][n-1])
/// big[1][i] = small[1][i] + 1/q[i] is the diagonal of a Gram inverse.
struct UnifiedTables {
    std::size_t order_max = 0;
    std::vector<std::vector<double>> small;
    std::vector<std::vector<double>> big;
    Variant variant = Variant::tilde;
};

inline UnifiedTables unified_tables(const BidiagonalMatrix& B, int M,
                                    Variant variant = Variant::tilde) {
    if (M < 1) throw Error("unified_tables needs M >= 1");
    const std::size_t n = B.order();
    const std::size_t mm = static_cast<std::size_t>(M);
    const Ratios r = ratios(B);

    UnifiedTables t;
    t.order_max = mm;
    t.variant = variant;
    t.small.assign(mm + 1, std::vector<double>(n, 0.0));
    t.big.assign(mm + 1, std::vector<double>(n, 0.0));

    const bool tilde = variant == Variant::tilde;

    // Order-1 rows; the sweep derives them afresh rather than importing the
    // first-order diagonals, but performs the identical operations.
    if (tilde) {
        t.big[1][0] = r.b_check[0];
        for (std::size_t i = 1; i < n; ++i) {
            t.small[1][i] = r.f_tilde[i - 1] * t.big[1][i - 1];
            t.big[1][i] = t.small[1][i] + r.b_check[i];
        }
    } else {
        t.big[1][n - 1] = r.b_check[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) {
            t.small[1][i] = r.f[i] * t.big[1][i + 1];
            t.big[1][i] = t.small[1][i] + r.b_check[i];
        }
    }

    for (std::size_t m = 2; m <= mm; ++m) {
        if (tilde) {
            for (std::size_t i = 1; i < n; ++i) {
                double acc = r.f_tilde[i - 1] * t.small[m][i - 1] +
                             t.big[1][i - 1] * t.small[m - 1][i];
                for (std::size_t k = 2; k + 1 <= m; ++k)
                    acc += t.small[k][i - 1] * t.small[m - k][i];
                t.small[m][i] = acc;
            }
        } else {
            for (std::size_t i = n - 1; i-- > 0;) {
                double acc = r.f[i] * t.small[m][i + 1] + t.big[1][i + 1] * t.small[m - 1][i];
                for (std::size_t k = 2; k + 1 <= m; ++k)
                    acc += t.small[k][i + 1] * t.small[m - k][i];
                t.small[m][i] = acc;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            double acc = static_cast<double>(m) * t.small[m][i] +
                         t.big[1][i] * t.big[m - 1][i];
            for (std::size_t k = 2; k + 1 <= m; ++k) acc += t.small[k][i] * t.big[m - k][i];
            t.big[m][i] = acc;
        }
    }

    for (std::size_t m = 1; m <= mm; ++m)
        for (std::size_t i = 0; i < n; ++i)
            if (!std::isfinite(t.small[m][i]) || !std::isfinite(t.big[m][i]))
                throw OverflowError("factorial-free table overflows at order " +
                                    std::to_string(m));
    return t;
}

/// Trace of the M-th Gram inverse power as the plain sum of the order-M
/// big row.
inline double trace_new(const BidiagonalMatrix& B, int M, Variant variant = Variant::tilde) {
    UnifiedTables t = unified_tables(B, M, variant);
    double sum = 0.0;
    for (double x : t.big[static_cast<std::size_t>(M)]) sum += x;
    if (!std::isfinite(sum))
        throw OverflowError("trace overflows at order " + std::to_string(M));
    return sum;
}

namespace detail {

inline double rel_dev(double a, double b) {
    if (a == b) return 0.0;
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace detail

/// Worst relative deviations of the factorial scalings that tie the table
/// families together:
///   h = m! * g~      and   h~ = m! * g        (m = 2..M)
///   H = (m-1)! * G~  and   H~ = (m-1)! * G    (m = 1..M)
struct TransformReport {
    int order_max = 0;
    double dev_h_vs_gtilde = 0.0;
    double dev_htilde_vs_g = 0.0;
    double dev_bigh_vs_biggtilde = 0.0;
    double dev_bightilde_vs_bigg = 0.0;

    double max_deviation() const {
        return std::max(std::max(dev_h_vs_gtilde, dev_htilde_vs_g),
                        std::max(dev_bigh_vs_biggtilde, dev_bightilde_vs_bigg));
    }
};

inline TransformReport verify_transforms(const BidiagonalMatrix& B, int M) {
    if (M < 1) throw Error("verify_transforms needs M >= 1");
    const std::size_t n = B.order();
    const HTables plain = h_tables(B, M, Variant::plain);
    const HTables tilde = h_tables(B, M, Variant::tilde);
    const UnifiedTables ut = unified_tables(B, M, Variant::tilde);
    const UnifiedTables up = unified_tables(B, M, Variant::plain);

    TransformReport rep;
    rep.order_max = M;
    for (int m = 1; m <= M; ++m) {
        const std::size_t mi = static_cast<std::size_t>(m);
        const double fact_m = factorial(m);
        const double fact_m1 = factorial(m - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (m >= 2) {
                rep.dev_h_vs_gtilde = std::max(
                    rep.dev_h_vs_gtilde, detail::rel_dev(plain.h[mi][i], fact_m * ut.small[mi][i]));
                rep.dev_htilde_vs_g = std::max(
                    rep.dev_htilde_vs_g, detail::rel_dev(tilde.h[mi][i], fact_m * up.small[mi][i]));
            }
            rep.dev_bigh_vs_biggtilde =
                std::max(rep.dev_bigh_vs_biggtilde,
                         detail::rel_dev(plain.big_h[mi][i], fact_m1 * ut.big[mi][i]));
            rep.dev_bightilde_vs_bigg =
                std::max(rep.dev_bightilde_vs_bigg,
                         detail::rel_dev(tilde.big_h[mi][i], fact_m1 * up.big[mi][i]));
        }
    }
    return rep;
}

/// The second and third inverse-power traces admit closed expressions both
/// through the convolution tables (g~, diag W) and through the derivative
/// tables (h); this evaluates all four and reports the per-trace deviation.
struct TraceIdentities {
    double j2_from_g_tables = 0.0;
    double j2_from_h_tables = 0.0;
    double j3_from_g_tables = 0.0;
    double j3_from_h_tables = 0.0;
    double j2_deviation = 0.0;
    double j3_deviation = 0.0;
};

inline TraceIdentities trace_identities_j2_j3(const BidiagonalMatrix& B) {
    const std::size_t n = B.order();
    const HTables ht = h_tables(B, 3, Variant::plain);
    const GTables gt = g_tables(B, 3);

    TraceIdentities rep;
    for (std::size_t i = 0; i < n; ++i) {
        const double h1 = ht.h[1][i];
        const double h2 = ht.h[2][i];
        const double h3 = ht.h[3][i];
        const double g2 = gt.g_tilde[2][i];
        const double g3 = gt.g_tilde[3][i];
        rep.j2_from_g_tables += 2.0 * g2 + h1 * h1;
        rep.j2_from_h_tables += h2 + h1 * h1;
        rep.j3_from_g_tables += 3.0 * g3 + 3.0 * g2 * h1 + h1 * h1 * h1;
        rep.j3_from_h_tables += h3 + 3.0 * h2 * h1 + 2.0 * h1 * h1 * h1;
    }
    rep.j3_from_h_tables *= 0.5;
    rep.j2_deviation = detail::rel_dev(rep.j2_from_g_tables, rep.j2_from_h_tables);
    rep.j3_deviation = detail::rel_dev(rep.j3_from_g_tables, rep.j3_from_h_tables);
    return rep;
}

}  // namespace bidiag
