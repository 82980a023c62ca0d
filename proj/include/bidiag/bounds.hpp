#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bidiag/dense_oracle.hpp"
#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/methods.hpp"

namespace bidiag {

/// Rounding slack for the strict inequalities of the bound chain; the exact
/// sequence is strictly increasing and strictly below sigma_min.
inline constexpr double kMonotonicitySlack = 1e-12;

/// theta_M(B) = J_M(B)^(-1/(2M)), a lower bound of the minimal singular
/// value. Evaluated through exp/log so the accuracy is uniform across
/// magnitudes, with a single final rounding.
inline double theta(const BidiagonalMatrix& B, int M, Method method = Method::unified,
                    const TraceOptions& opts = {}) {
    double j = trace(B, M, method, opts);
    if (!(j > 0.0) || !std::isfinite(j))
        throw Error("trace J_" + std::to_string(M) + " = " + std::to_string(j) +
                    " is not positive; backend '" + to_string(method) + "' broke down");
    return std::exp(-std::log(j) / (2.0 * static_cast<double>(M)));
}

/// theta_1..theta_Mmax plus the reference minimal singular value.
struct BoundSequence {
    std::vector<double> thetas;
    std::optional<double> sigma_min_ref;
    Method method = Method::unified;
};

/// Computes the bound sequence and verifies it increases (up to the rounding
/// slack). A decrease beyond the slack certifies numeric breakdown of the
/// backend and raises MonotonicityViolation.
inline BoundSequence theta_sequence(const BidiagonalMatrix& B, int Mmax,
                                    Method method = Method::unified,
                                    bool with_reference = false,
                                    const TraceOptions& opts = {}) {
    if (Mmax < 1) throw Error("theta_sequence needs Mmax >= 1");
    BoundSequence seq;
    seq.method = method;
    seq.thetas.reserve(static_cast<std::size_t>(Mmax));
    for (int m = 1; m <= Mmax; ++m) {
        double th = theta(B, m, method, opts);
        if (!seq.thetas.empty()) {
            double prev = seq.thetas.back();
            if (th < prev * (1.0 - kMonotonicitySlack))
                throw MonotonicityViolation("theta_" + std::to_string(m) + " = " +
                                            std::to_string(th) + " < theta_" +
                                            std::to_string(m - 1) + " = " + std::to_string(prev));
        }
        seq.thetas.push_back(th);
    }
    if (with_reference) seq.sigma_min_ref = sigma_min_oracle(B);
    return seq;
}

/// One backend's column in a bound report. Cells failed by the backend stay
/// empty with the reason recorded; a monotonicity break is noted, not fatal.
struct BoundColumn {
    Method method = Method::unified;
    std::vector<std::optional<double>> thetas;
    std::vector<std::string> notes;
};

struct BoundReport {
    int order_max = 0;
    double sigma_min = 0.0;
    std::vector<BoundColumn> columns;
    std::vector<double> max_cross_deviation;  // per order, across completed columns
};

inline BoundReport bound_report(const BidiagonalMatrix& B, int Mmax,
                                const std::vector<Method>& methods,
                                const TraceOptions& opts = {}) {
    if (methods.empty()) throw Error("bound_report needs at least one backend");
    BoundReport rep;
    rep.order_max = Mmax;
    rep.sigma_min = sigma_min_oracle(B);
    for (Method method : methods) {
        BoundColumn col;
        col.method = method;
        col.thetas.resize(static_cast<std::size_t>(Mmax));
        for (int m = 1; m <= Mmax; ++m) {
            try {
                col.thetas[static_cast<std::size_t>(m - 1)] = theta(B, m, method, opts);
            } catch (const Error& err) {
                col.notes.push_back("J_" + std::to_string(m) + ": " + err.what());
            }
        }
        for (int m = 1; m < Mmax; ++m) {
            const auto& a = col.thetas[static_cast<std::size_t>(m - 1)];
            const auto& b = col.thetas[static_cast<std::size_t>(m)];
            if (a && b && *b < *a * (1.0 - kMonotonicitySlack))
                col.notes.push_back("theta decreases from order " + std::to_string(m) + " to " +
                                    std::to_string(m + 1));
        }
        rep.columns.push_back(std::move(col));
    }
    rep.max_cross_deviation.assign(static_cast<std::size_t>(Mmax), 0.0);
    for (int m = 0; m < Mmax; ++m) {
        double dev = 0.0;
        for (std::size_t a = 0; a < rep.columns.size(); ++a)
            for (std::size_t b = a + 1; b < rep.columns.size(); ++b) {
                const auto& x = rep.columns[a].thetas[static_cast<std::size_t>(m)];
                const auto& y = rep.columns[b].thetas[static_cast<std::size_t>(m)];
                if (x && y) dev = std::max(dev, detail::rel_dev(*x, *y));
            }
        rep.max_cross_deviation[static_cast<std::size_t>(m)] = dev;
    }
    return rep;
}

}  // namespace bidiag
