#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"

namespace bidiag {

/// Exact factorial as binary64; m! is representable up to m = 170.
inline double factorial(int m) {
    if (m < 0) throw Error("factorial of negative argument");
    if (m > 170) throw FactorialOverflow("factorial(" + std::to_string(m) + ") overflows", m);
    double f = 1.0;
    for (int k = 2; k <= m; ++k) f *= static_cast<double>(k);
    return f;
}

/// Pascal's triangle with exact 128-bit integer entries. Row n overflowing
/// the integer type raises FactorialOverflow naming n, which makes the usable
/// order boundary deterministic instead of silently rounding coefficients.
class BinomialCache {
public:
    explicit BinomialCache(int max_order) {
        if (max_order < 0) throw Error("binomial cache needs a nonnegative order");
        rows_.reserve(static_cast<std::size_t>(max_order) + 1);
        rows_.push_back({1});
        for (int n = 1; n <= max_order; ++n) append_row(n);
    }

    /// C(n, k) converted to binary64 at the call site.
    double choose(int n, int k) const {
        if (k < 0 || k > n) return 0.0;
        return static_cast<double>(rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
    }

    int max_order() const { return static_cast<int>(rows_.size()) - 1; }

    /// Largest row the integer type can hold; rows beyond it trigger the guard.
    static int max_representable_order() {
        static const int order = [] {
            BinomialCache c(0);
            int n = 0;
            try {
                for (;;) c.append_row(++n);
            } catch (const FactorialOverflow&) {
            }
            return n - 1;
        }();
        return order;
    }

private:
    using uint128 = unsigned __int128;

    void append_row(int n) {
        const std::vector<uint128>& prev = rows_.back();
        std::vector<uint128> row(static_cast<std::size_t>(n) + 1, 1);
        for (std::size_t k = 1; k < row.size() - 1; ++k) {
            uint128 sum = prev[k - 1] + prev[k];
            if (sum < prev[k - 1])
                throw FactorialOverflow("binomial row " + std::to_string(n) +
                                            " exceeds the exact integer range",
                                        n);
            row[k] = sum;
        }
        rows_.push_back(std::move(row));
    }

    std::vector<std::vector<uint128>> rows_;
};

/// Selects which Gram product a table family describes.
///   plain : quantities tied to (B^T B)^{-p}
///   tilde : quantities tied to (B B^T)^{-p}
enum class Variant { plain, tilde };

inline const char* to_string(Variant v) { return v == Variant::plain ? "plain" : "tilde"; }

/// Factorial-scaled auxiliary tables. Row p is stored at index p (row 0 is
/// padding). h[1] is the diagonal of the opposite Gram inverse; big_h[p]
/// carries an implicit (p-1)! factor, so the trace divides it back out.
struct HTables {
    std::size_t order_max = 0;
    std::vector<std::vector<double>> h;
    std::vector<std::vector<double>> big_h;
    Variant variant = Variant::plain;
};

namespace detail {

inline void scan_h_overflow(const HTables& t) {
    for (std::size_t p = 1; p <= t.order_max; ++p)
        for (std::size_t i = 0; i < t.h[p].size(); ++i)
            if (!std::isfinite(t.h[p][i]) || !std::isfinite(t.big_h[p][i]))
                throw FactorialOverflow("derivative-formula table overflows at order " +
                                            std::to_string(p),
                                        static_cast<int>(p));
}

}  // namespace detail

/// h / H tables up to order M.
///
/// The plain variant sweeps forward (coupling ratio e[i-1]/q[i]) and yields
/// Tr((B^T B)^{-p}); the tilde variant is its mirror for Tr((B B^T)^{-p}).
/// Orders beyond the factorial or binomial range raise FactorialOverflow.
inline HTables h_tables(const BidiagonalMatrix& B, int M, Variant variant) {
    if (M < 1) throw Error("h_tables needs M >= 1");
    if (M >= 172)
        throw FactorialOverflow("order " + std::to_string(M) +
                                    " needs (M-1)! beyond binary64 range",
                                M);
    const std::size_t n = B.order();
    const std::size_t mm = static_cast<std::size_t>(M);
    const Ratios r = ratios(B);
    const BinomialCache binom(M);

    HTables t;
    t.order_max = mm;
    t.variant = variant;
    t.h.assign(mm + 1, std::vector<double>(n, 0.0));
    t.big_h.assign(mm + 1, std::vector<double>(n, 0.0));

    const bool plain = variant == Variant::plain;
    // Sweep order: plain walks i = 0..n-1 with predecessor i-1; tilde walks
    // i = n-1..0 with predecessor i+1.
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t i = plain ? step : n - 1 - step;
        if (step == 0) {
            t.h[1][i] = r.b_check[i];
        } else {
            const std::size_t prev = plain ? i - 1 : i + 1;
            const double ratio = plain ? r.f_tilde[i - 1] : r.f[i];
            t.h[1][i] = ratio * t.h[1][prev] + r.b_check[i];
            for (std::size_t p = 2; p <= mm; ++p) {
                double acc = ratio * (t.h[p][prev] + static_cast<double>(p) * t.h[1][prev] *
                                                         t.h[p - 1][prev]);
                for (std::size_t k = 1; k + 2 <= p; ++k)
                    acc += binom.choose(static_cast<int>(p), static_cast<int>(k)) *
                           t.h[k][prev] * t.h[p - k][i];
                t.h[p][i] = acc;
            }
        }
        t.big_h[1][i] = t.h[1][i];
        for (std::size_t p = 2; p <= mm; ++p) {
            double acc = t.h[p][i];
            for (std::size_t k = 1; k + 1 <= p; ++k)
                acc += binom.choose(static_cast<int>(p) - 1, static_cast<int>(k)) * t.h[k][i] *
                       t.big_h[p - k][i];
            t.big_h[p][i] = acc;
        }
    }
    detail::scan_h_overflow(t);
    return t;
}

/// Trace of the M-th Gram inverse power: sum of the order-M H row divided by
/// (M-1)!.
inline double trace_derivative(const BidiagonalMatrix& B, int M,
                               Variant variant = Variant::plain) {
    HTables t = h_tables(B, M, variant);
    double sum = 0.0;
    for (double x : t.big_h[static_cast<std::size_t>(M)]) sum += x;
    double trace = sum / factorial(M - 1);
    if (!std::isfinite(trace))
        throw FactorialOverflow("trace overflows at order " + std::to_string(M), M);
    return trace;
}

}  // namespace bidiag
