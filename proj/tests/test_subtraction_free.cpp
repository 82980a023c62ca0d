#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bidiag/dense_oracle.hpp"
#include "bidiag/subtraction_free.hpp"
#include "support.hpp"

using namespace bidiag;
using test_support::Rng;
using test_support::graded_matrix;
using test_support::random_matrix;
using test_support::rel_dev;

namespace {
const BidiagonalMatrix kUnit2x2({1.0, 1.0}, {1.0});
}

TEST_CASE("convolution tables, frozen 2x2") {
    GTables t = g_tables(kUnit2x2, 2);
    CHECK(t.g[1] == std::vector<double>{1.0, 0.0});
    CHECK(t.g_tilde[1] == std::vector<double>{0.0, 1.0});
    CHECK(t.g[2] == std::vector<double>{1.0, 0.0});
    CHECK(t.g_tilde[2] == std::vector<double>{0.0, 1.0});
}

TEST_CASE("convolution tables keep their structural zeros") {
    Rng rng(51);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 1 + rng.bits() % 10;
        auto B = random_matrix(rng, n);
        GTables t = g_tables(B, 5);
        for (std::size_t m = 1; m <= 5; ++m) {
            CHECK(t.g[m][n - 1] == 0.0);
            CHECK(t.g_tilde[m][0] == 0.0);
            for (std::size_t i = 0; i + 1 < n; ++i) CHECK(t.g[m][i] > 0.0);
            for (std::size_t i = 1; i < n; ++i) CHECK(t.g_tilde[m][i] > 0.0);
        }
    }
}

TEST_CASE("convolution tables equal the brute-force path sums") {
    Rng rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng.bits() % 8;
        auto B = random_matrix(rng, n);
        GTables t = g_tables(B, 5);
        for (int m = 2; m <= 5; ++m)
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(rel_dev(t.g_tilde[static_cast<std::size_t>(m)][i],
                              path_sum_gtilde(B, i, m)) <= 1e-10);
                CHECK(rel_dev(t.g[static_cast<std::size_t>(m)][i], path_sum_g(B, i, m)) <=
                      1e-10);
            }
    }
}

TEST_CASE("subtraction-free diagonals, frozen values") {
    DiagTable t = diag_powers_subfree(kUnit2x2, 2);
    CHECK(t.v[1] == std::vector<double>{2.0, 1.0});
    CHECK(t.w[1] == std::vector<double>{1.0, 2.0});
    CHECK(t.v[2] == std::vector<double>{5.0, 2.0});
    CHECK(t.w[2] == std::vector<double>{2.0, 5.0});
    CHECK(t.z.empty());

    DiagTable scalar = diag_powers_subfree(make_bidiagonal({2.0}, {}), 3);
    CHECK(scalar.v[3] == std::vector<double>{0.125});
}

TEST_CASE("subtraction-free diagonals match the dense oracle") {
    auto B = make_bidiagonal({1.0, 2.0, 3.0}, {1.0, 1.0});
    DiagTable t = diag_powers_subfree(B, 2);
    DenseMatrix v = gram_inverse_power(B, Side::upper, 2);
    DenseMatrix w = gram_inverse_power(B, Side::lower, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rel_dev(t.v[2][i], v.at(i, i)) <= 1e-10);
        CHECK(rel_dev(t.w[2][i], w.at(i, i)) <= 1e-10);
    }

    Rng rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 1 + rng.bits() % 20;
        auto R = random_matrix(rng, n);
        DiagTable table = diag_powers_subfree(R, 6);
        for (int m : {2, 6}) {
            DenseMatrix vm = gram_inverse_power(R, Side::upper, m);
            DenseMatrix wm = gram_inverse_power(R, Side::lower, m);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(rel_dev(table.v[static_cast<std::size_t>(m)][i], vm.at(i, i)) <= 1e-10);
                CHECK(rel_dev(table.w[static_cast<std::size_t>(m)][i], wm.at(i, i)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("subtraction-free trace, frozen values") {
    CHECK(trace_subfree(kUnit2x2, 2) == 7.0);
    CHECK(trace_subfree(kUnit2x2, 1) == 3.0);
    CHECK(rel_dev(trace_subfree(make_bidiagonal({3.0}, {}), 2), 1.0 / 9.0) <= 1e-15);
}

TEST_CASE("order one routes through the shared first-order sweeps") {
    Rng rng(54);
    for (int trial = 0; trial < 10; ++trial) {
        auto B = random_matrix(rng, 1 + rng.bits() % 15);
        FirstOrderDiagonals d = first_order_diagonals(B);
        double sum = 0.0;
        for (double x : d.v1) sum += x;
        CHECK(trace_subfree(B, 1) == sum);
    }
}

TEST_CASE("every stored quantity is positive, graded inputs included") {
    Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        BidiagonalMatrix B = (trial % 3 == 0) ? graded_matrix(6, 50.0)
                                              : random_matrix(rng, 1 + rng.bits() % 12, 1e-4, 1e4);
        std::size_t n = B.order();
        DiagTable t = diag_powers_subfree(B, 5);
        for (std::size_t m = 1; m <= 5; ++m)
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(t.v[m][i] > 0.0);
                CHECK(t.w[m][i] > 0.0);
            }
    }
}

TEST_CASE("agrees with the subtractive engine on benign inputs") {
    Rng rng(56);
    for (int trial = 0; trial < 10; ++trial) {
        auto B = random_matrix(rng, 1 + rng.bits() % 20);
        for (int m = 1; m <= 6; ++m)
            CHECK(rel_dev(trace_subfree(B, m), trace_subtractive(B, m).by_upper) <= 1e-9);
    }
}
