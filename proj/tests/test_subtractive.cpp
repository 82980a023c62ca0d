#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bidiag/dense_oracle.hpp"
#include "bidiag/subtractive.hpp"
#include "support.hpp"

using namespace bidiag;
using test_support::Rng;
using test_support::random_matrix;
using test_support::rel_dev;

namespace {

const BidiagonalMatrix kUnit2x2({1.0, 1.0}, {1.0});

// Log-uniform entries spanning ten decades; the subtractive recurrence turns
// v^(2)[7] negative on this input while the exact value is positive.
const BidiagonalMatrix kCancelling(
    {7.0940377587286737e-08, 7.1439302430593899e-10, 1.2153664715586916e-06,
     1.2615752916553059e-05, 0.00057384590731503063, 0.76654055318889314, 0.01554959536590444,
     0.0052429408378596764},
    {1.5140530143882698e-06, 0.024425687244380868, 0.41027224480065022,
     0.00024659994402770785, 5.4852053092994904e-09, 3.6368604224336113e-10,
     0.00047595095258681211});

}  // namespace

TEST_CASE("first-order diagonals, frozen values") {
    FirstOrderDiagonals d = first_order_diagonals(kUnit2x2);
    CHECK(d.v1 == std::vector<double>{2.0, 1.0});
    CHECK(d.w1 == std::vector<double>{1.0, 2.0});

    d = first_order_diagonals(make_bidiagonal({2.0}, {}));
    CHECK(d.v1 == std::vector<double>{0.5});
    CHECK(d.w1 == std::vector<double>{0.5});

    d = first_order_diagonals(make_bidiagonal({1.0, 1.0, 1.0}, {1.0, 1.0}));
    CHECK(d.v1 == std::vector<double>{3.0, 2.0, 1.0});
    CHECK(d.w1 == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("first-order diagonals match the dense Gram inverses") {
    Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 1 + rng.bits() % 20;
        auto B = random_matrix(rng, n);
        FirstOrderDiagonals d = first_order_diagonals(B);
        DenseMatrix v = gram_inverse_power(B, Side::upper, 1);
        DenseMatrix w = gram_inverse_power(B, Side::lower, 1);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(rel_dev(d.v1[i], v.at(i, i)) <= 1e-12);
            CHECK(rel_dev(d.w1[i], w.at(i, i)) <= 1e-12);
        }
    }
}

TEST_CASE("subtractive table, frozen 2x2") {
    DiagTable t = diag_powers_subtractive(kUnit2x2, 2);
    CHECK(t.v[0] == std::vector<double>{1.0, 1.0});
    CHECK(t.w[0] == std::vector<double>{1.0, 1.0});
    CHECK(t.v[1] == std::vector<double>{2.0, 1.0});
    CHECK(t.w[1] == std::vector<double>{1.0, 2.0});
    CHECK(t.z[1] == std::vector<double>{4.0, 4.0});
    CHECK(t.v[2] == std::vector<double>{5.0, 2.0});
    CHECK(t.w[2] == std::vector<double>{2.0, 5.0});
    CHECK(t.warnings.empty());
}

TEST_CASE("subtractive table, scalar powers") {
    DiagTable t = diag_powers_subtractive(make_bidiagonal({2.0}, {}), 3);
    CHECK(t.v[3] == std::vector<double>{0.125});
    CHECK(t.w[3] == std::vector<double>{0.125});
}

TEST_CASE("order one reduces to the first-order sweeps, bit for bit") {
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        auto B = random_matrix(rng, 1 + rng.bits() % 15);
        FirstOrderDiagonals d = first_order_diagonals(B);
        for (ZDirection dir : {ZDirection::forward, ZDirection::backward}) {
            DiagTable t = diag_powers_subtractive(B, 1, dir);
            CHECK(t.v[1] == d.v1);
            CHECK(t.w[1] == d.w1);
        }
    }
}

TEST_CASE("forward and backward z accumulators agree") {
    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        auto B = random_matrix(rng, 1 + rng.bits() % 20);
        DiagTable f = diag_powers_subtractive(B, 6, ZDirection::forward);
        DiagTable b = diag_powers_subtractive(B, 6, ZDirection::backward);
        for (std::size_t m = 0; m < 6; ++m)
            for (std::size_t i = 0; i < B.order(); ++i) {
                CHECK(rel_dev(f.z[m][i], b.z[m][i]) <= 1e-10);
                CHECK(rel_dev(f.v[m + 1][i], b.v[m + 1][i]) <= 1e-9);
                CHECK(rel_dev(f.w[m + 1][i], b.w[m + 1][i]) <= 1e-9);
            }
    }
}

TEST_CASE("subtractive trace, frozen values") {
    CHECK(rel_dev(trace_subtractive(kUnit2x2, 2).by_upper, 7.0) == 0.0);
    CHECK(rel_dev(trace_subtractive(kUnit2x2, 1).by_upper, 3.0) == 0.0);
    CHECK(trace_subtractive(make_bidiagonal({2.0}, {}), 4).by_upper == 0.0625);
}

TEST_CASE("subtractive diagonals track the dense oracle") {
    Rng rng(44);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 1 + rng.bits() % 20;
        auto B = random_matrix(rng, n);
        DiagTable t = diag_powers_subtractive(B, 6);
        for (int m : {2, 6}) {
            DenseMatrix v = gram_inverse_power(B, Side::upper, m);
            DenseMatrix w = gram_inverse_power(B, Side::lower, m);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(rel_dev(t.v[static_cast<std::size_t>(m)][i], v.at(i, i)) <= 1e-9);
                CHECK(rel_dev(t.w[static_cast<std::size_t>(m)][i], w.at(i, i)) <= 1e-9);
            }
        }
        SubtractiveTrace tr = trace_subtractive(B, 5);
        CHECK(rel_dev(tr.by_upper, tr.by_lower) <= 1e-10);
        CHECK(rel_dev(tr.by_upper, trace_oracle(B, 5)) <= 1e-9);
    }
}

TEST_CASE("catastrophic cancellation is flagged, value still returned") {
    DiagTable t = diag_powers_subtractive(kCancelling, 2);
    REQUIRE_FALSE(t.warnings.empty());
    const CancellationWarning& w = t.warnings.front();
    CHECK(w.table == 'v');
    CHECK(w.order == 2);
    CHECK(w.index == 7);
    CHECK(w.value < 0.0);
    CHECK(t.v[2][w.index - 1] == w.value);

    SubtractiveTrace tr = trace_subtractive(kCancelling, 2);
    REQUIRE_FALSE(tr.warnings.empty());
    CHECK(std::isfinite(tr.by_upper));
}
