#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bidiag/matrix.hpp"

namespace test_support {

/// Deterministic uniform doubles built from raw mt19937_64 bits, so suites
/// reproduce exactly regardless of standard-library distribution details.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }  // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

inline bidiag::BidiagonalMatrix random_matrix(Rng& rng, std::size_t n, double lo = 0.5,
                                              double hi = 2.0) {
    std::vector<double> q(n), e(n - 1);
    for (double& x : q) x = rng.uniform(lo, hi);
    for (double& x : e) x = rng.uniform(lo, hi);
    return bidiag::BidiagonalMatrix(std::move(q), std::move(e));
}

/// q decaying geometrically by `ratio` per row, unit superdiagonal.
inline bidiag::BidiagonalMatrix graded_matrix(std::size_t n, double ratio) {
    std::vector<double> q(n), e(n - 1, 1.0);
    double value = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = value;
        value /= ratio;
    }
    return bidiag::BidiagonalMatrix(std::move(q), std::move(e));
}

inline double rel_dev(double a, double b) {
    if (a == b) return 0.0;
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace test_support
