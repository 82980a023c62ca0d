#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "bidiag/bounds.hpp"
#include "support.hpp"

using namespace bidiag;
using test_support::Rng;
using test_support::random_matrix;
using test_support::rel_dev;

namespace {
const BidiagonalMatrix kUnit2x2({1.0, 1.0}, {1.0});
}

TEST_CASE("theta, frozen values") {
    auto scalar = make_bidiagonal({2.0}, {});
    for (int m : {1, 2, 5, 20})
        CHECK(rel_dev(theta(scalar, m), std::sqrt(2.0)) <= 1e-15);

    CHECK(rel_dev(theta(kUnit2x2, 1), std::pow(3.0, -0.5)) <= 1e-12);
    CHECK(rel_dev(theta(kUnit2x2, 2), std::pow(7.0, -0.25)) <= 1e-12);
}

TEST_CASE("theta accepts every backend") {
    for (Method m : all_methods())
        CHECK(rel_dev(theta(kUnit2x2, 2, m), std::pow(7.0, -0.25)) <= 1e-12);
}

TEST_CASE("theta sequence increases toward the minimal singular value") {
    BoundSequence seq = theta_sequence(kUnit2x2, 2, Method::unified, true);
    REQUIRE(seq.thetas.size() == 2);
    CHECK(rel_dev(seq.thetas[0], 0.57735026918962573) <= 1e-12);
    CHECK(rel_dev(seq.thetas[1], 0.61478815295126432) <= 1e-12);
    REQUIRE(seq.sigma_min_ref.has_value());
    CHECK(seq.thetas[0] < seq.thetas[1]);
    CHECK(seq.thetas[1] < *seq.sigma_min_ref);
    CHECK(rel_dev(*seq.sigma_min_ref, 0.61803398874989479) <= 1e-12);
}

TEST_CASE("theta sequence is constant for order one") {
    BoundSequence seq = theta_sequence(make_bidiagonal({2.0}, {}), 5, Method::unified, true);
    for (double th : seq.thetas) CHECK(rel_dev(th, std::sqrt(2.0)) <= 1e-15);
    CHECK(rel_dev(*seq.sigma_min_ref, std::sqrt(2.0)) <= 1e-13);
}

TEST_CASE("bound chain on random matrices") {
    Rng rng(81);
    for (int trial = 0; trial < 10; ++trial) {
        auto B = random_matrix(rng, 10);
        BoundSequence seq = theta_sequence(B, 10, Method::unified, true);
        double sigma = *seq.sigma_min_ref;
        for (std::size_t m = 0; m < seq.thetas.size(); ++m) {
            CHECK(seq.thetas[m] < sigma * (1.0 + kMonotonicitySlack));
            if (m > 0) CHECK(seq.thetas[m] > seq.thetas[m - 1] * (1.0 - kMonotonicitySlack));
        }
        double gap_first = (sigma - seq.thetas.front()) / sigma;
        double gap_last = (sigma - seq.thetas.back()) / sigma;
        CHECK(gap_last <= gap_first);
    }
}

TEST_CASE("scaling the matrix by c scales every bound by sqrt(c)") {
    Rng rng(82);
    for (int trial = 0; trial < 6; ++trial) {
        auto B = random_matrix(rng, 1 + rng.bits() % 12);
        auto C = B.scaled(4.0);
        for (Method method : all_methods())
            for (int m = 1; m <= 6; ++m)
                CHECK(rel_dev(theta(C, m, method), 2.0 * theta(B, m, method)) <= 1e-12);
        CHECK(rel_dev(sigma_min_oracle(C), 2.0 * sigma_min_oracle(B)) <= 1e-12);
    }
}

TEST_CASE("bound report compares backends") {
    BoundReport rep = bound_report(kUnit2x2, 2, all_methods());
    REQUIRE(rep.columns.size() == 5);
    for (const BoundColumn& col : rep.columns) {
        REQUIRE(col.thetas.size() == 2);
        CHECK(col.notes.empty());
        CHECK(col.thetas[0].has_value());
    }
    CHECK(rep.max_cross_deviation[0] <= 1e-10);
    CHECK(rep.max_cross_deviation[1] <= 1e-10);
    CHECK(rel_dev(rep.sigma_min, 0.61803398874989479) <= 1e-12);
}

TEST_CASE("bound report on an order-one matrix equals sigma exactly") {
    BoundReport rep = bound_report(make_bidiagonal({9.0}, {}), 4, all_methods());
    for (const BoundColumn& col : rep.columns)
        for (const auto& th : col.thetas) {
            REQUIRE(th.has_value());
            CHECK(rel_dev(*th, 3.0) <= 1e-12);
            CHECK(rel_dev(*th, rep.sigma_min) <= 1e-12);
        }
}

TEST_CASE("bound report keeps partial results when a backend fails") {
    // Entries far below one push the factorial-scaled tables out of range
    // at moderate orders; the other backends keep reporting.
    auto B = make_bidiagonal(std::vector<double>(12, 0.01), std::vector<double>(11, 0.01));
    BoundReport rep = bound_report(B, 60, {Method::derivative, Method::unified});
    const BoundColumn& derivative = rep.columns[0];
    const BoundColumn& unified = rep.columns[1];
    CHECK_FALSE(derivative.notes.empty());
    CHECK_FALSE(derivative.thetas.back().has_value());
    for (const auto& th : unified.thetas) CHECK(th.has_value());
}

TEST_CASE("bound report on a graded matrix keeps subtraction-free columns clean") {
    BoundReport rep = bound_report(test_support::graded_matrix(6, 10.0), 4,
                                   {Method::subtractive, Method::subfree, Method::unified});
    for (std::size_t c = 1; c < rep.columns.size(); ++c) {
        const BoundColumn& col = rep.columns[c];
        double prev = 0.0;
        for (const auto& th : col.thetas) {
            REQUIRE(th.has_value());
            CHECK(*th > 0.0);
            CHECK(*th >= prev * (1.0 - kMonotonicitySlack));
            prev = *th;
        }
    }
}

TEST_CASE("nonsense backend traces are rejected") {
    CHECK_THROWS_AS(bound_report(kUnit2x2, 2, {}), Error);
    CHECK_THROWS_AS(theta_sequence(kUnit2x2, 0), Error);
}
