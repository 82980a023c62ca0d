#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bidiag/errors.hpp"

namespace bidiag {

/// Square upper bidiagonal matrix with diagonal entries sqrt(q[i]) and
/// superdiagonal entries sqrt(e[i]), stored by its squared parameters.
/// All parameters are strictly positive and finite; instances are immutable
/// after construction and safe to share across threads.
class BidiagonalMatrix {
public:
    /// Validates and takes ownership of the parameter sequences.
    /// q has n entries, e has n-1 (empty when n == 1).
    BidiagonalMatrix(std::vector<double> q, std::vector<double> e)
        : q_(std::move(q)), e_(std::move(e)) {
        if (q_.empty())
            throw DimensionMismatch("bidiagonal matrix needs at least one diagonal entry");
        if (e_.size() + 1 != q_.size())
            throw DimensionMismatch("superdiagonal must have exactly " +
                                    std::to_string(q_.size() - 1) + " entries, got " +
                                    std::to_string(e_.size()));
        validate(q_, "q");
        validate(e_, "e");
    }

    std::size_t order() const { return q_.size(); }
    const std::vector<double>& q() const { return q_; }
    const std::vector<double>& e() const { return e_; }
    double q(std::size_t i) const { return q_[i]; }
    double e(std::size_t i) const { return e_[i]; }

    /// Returns the matrix with (q, e) multiplied by c, i.e. sqrt(c) * B.
    BidiagonalMatrix scaled(double c) const {
        std::vector<double> q = q_, e = e_;
        for (double& x : q) x *= c;
        for (double& x : e) x *= c;
        return BidiagonalMatrix(std::move(q), std::move(e));
    }

private:
    static void validate(const std::vector<double>& xs, const char* name) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!std::isfinite(xs[i]))
                throw NonFiniteEntry(std::string(name) + "[" + std::to_string(i + 1) +
                                     "] is not finite");
            if (xs[i] <= 0.0)
                throw NonPositiveEntry(std::string(name) + "[" + std::to_string(i + 1) +
                                       "] = " + std::to_string(xs[i]) + " must be positive");
        }
    }

    std::vector<double> q_;
    std::vector<double> e_;
};

inline BidiagonalMatrix make_bidiagonal(std::vector<double> q, std::vector<double> e) {
    return BidiagonalMatrix(std::move(q), std::move(e));
}

/// Reciprocal and ratio tables shared by all recurrence engines:
///   b_check[i]  = 1 / q[i]            for i = 0 .. n-1
///   f[i]        = e[i] / q[i]         for i = 0 .. n-2
///   f_tilde[i]  = e[i] / q[i+1]       for i = 0 .. n-2
/// so f_tilde[i] couples row i+1 to its predecessor.
struct Ratios {
    std::vector<double> b_check;
    std::vector<double> f;
    std::vector<double> f_tilde;
};

inline Ratios ratios(const BidiagonalMatrix& B) {
    const std::size_t n = B.order();
    Ratios r;
    r.b_check.resize(n);
    r.f.resize(n - 1);
    r.f_tilde.resize(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        r.b_check[i] = 1.0 / B.q(i);
        if (!std::isfinite(r.b_check[i]))
            throw OverflowError("1/q[" + std::to_string(i + 1) + "] overflows");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        r.f[i] = B.e(i) / B.q(i);
        r.f_tilde[i] = B.e(i) / B.q(i + 1);
        if (!std::isfinite(r.f[i]) || !std::isfinite(r.f_tilde[i]))
            throw OverflowError("ratio at superdiagonal index " + std::to_string(i + 1) +
                                " overflows");
    }
    return r;
}

}  // namespace bidiag
