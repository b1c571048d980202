#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paracert/errors.hpp"
#include "paracert/gf2.hpp"
#include "test_util.hpp"

using namespace paracert;
using gf2::Gf2Matrix;
using gf2::Gf2Vector;
using gf2::LinkingParity;

TEST_CASE("solve: identity systems") {
    CHECK(*gf2::solve(Gf2Matrix::from_rows({{1}}), Gf2Vector::from_bits({1})) ==
          Gf2Vector::from_bits({1}));
    CHECK(*gf2::solve(Gf2Matrix::from_rows({{1, 0}, {0, 1}}),
                      Gf2Vector::from_bits({1, 0})) ==
          Gf2Vector::from_bits({1, 0}));
}

TEST_CASE("solve: singular system picks the free-variable-zero solution") {
    const auto m = Gf2Matrix::from_rows({{1, 1}, {1, 1}});
    // solution set of m a = (1,1) is {(1,0), (0,1)}; the convention
    // pins (1,0)
    CHECK(*gf2::solve(m, Gf2Vector::from_bits({1, 1})) ==
          Gf2Vector::from_bits({1, 0}));
    CHECK(!gf2::solve(m, Gf2Vector::from_bits({1, 0})).has_value());
}

TEST_CASE("solve: dimension mismatch is an error, not absence") {
    const auto m = Gf2Matrix::from_rows({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(gf2::solve(m, Gf2Vector::from_bits({1})),
                    std::invalid_argument);
}

TEST_CASE("solve: empty systems") {
    CHECK(gf2::solve(Gf2Matrix(0, 0), Gf2Vector(0))->size() == 0);
    // 0 columns, nonzero rhs: inconsistent
    Gf2Vector one(1);
    one.set(0, true);
    CHECK(!gf2::solve(Gf2Matrix(1, 0), one).has_value());
    CHECK(gf2::solve(Gf2Matrix(1, 0), Gf2Vector(1)).has_value());
}

TEST_CASE("rank") {
    CHECK(gf2::rank(Gf2Matrix::from_rows({{0}})) == 0);
    CHECK(gf2::rank(Gf2Matrix::from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(gf2::rank(Gf2Matrix::identity(3)) == 3);
    CHECK(gf2::rank(Gf2Matrix(0, 5)) == 0);
    CHECK(gf2::rank(Gf2Matrix(5, 0)) == 0);
}

TEST_CASE("solve agrees with exhaustive enumeration up to 3x3") {
    for (std::size_t rows = 0; rows <= 3; ++rows) {
        for (std::size_t cols = 0; cols <= 3; ++cols) {
            const std::uint64_t mats = std::uint64_t{1} << (rows * cols);
            for (std::uint64_t mbits = 0; mbits < mats; ++mbits) {
                Gf2Matrix m(rows, cols);
                for (std::size_t r = 0; r < rows; ++r)
                    for (std::size_t c = 0; c < cols; ++c)
                        m.set(r, c, (mbits >> (r * cols + c)) & 1u);
                for (std::uint64_t rbits = 0;
                     rbits < (std::uint64_t{1} << rows); ++rbits) {
                    Gf2Vector b(rows);
                    for (std::size_t r = 0; r < rows; ++r)
                        b.set(r, (rbits >> r) & 1u);
                    const auto got = gf2::solve(m, b);
                    const auto want = testutil::brute_force_solve(m, b);
                    REQUIRE(got.has_value() == want.has_value());
                    if (got) REQUIRE(m.multiply(*got) == b);
                }
            }
        }
    }
}

TEST_CASE("solve_framing_system: frozen examples") {
    // decoupled: a_i = 1
    CHECK(gf2::solve_framing_system(LinkingParity::decoupled(3)) ==
          Gf2Vector::from_bits({1, 1, 1}));
    // n=2 with l_12 = 1: solutions {(1,0),(0,1)}, convention picks (1,0)
    CHECK(gf2::solve_framing_system(
              LinkingParity(Gf2Matrix::from_rows({{1, 1}, {1, 1}}))) ==
          Gf2Vector::from_bits({1, 0}));
    // all-ones 3x3: solutions are the odd-weight vectors; convention
    // picks (1,0,0)
    CHECK(gf2::solve_framing_system(LinkingParity(Gf2Matrix::from_rows(
              {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}))) ==
          Gf2Vector::from_bits({1, 0, 0}));
    // empty presentation
    CHECK(gf2::solve_framing_system(LinkingParity(Gf2Matrix(0, 0))).size() ==
          0);
}

TEST_CASE("solve_framing_system always succeeds and verifies") {
    std::mt19937_64 rng(0x5eed001);
    for (std::size_t n = 1; n <= 64; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto lp = testutil::random_parity(n, rng);
            const auto a = gf2::solve_framing_system(lp);
            REQUIRE(lp.matrix().multiply(a) == Gf2Vector::ones(n));
        }
    }
}

TEST_CASE("row parity: zero-summing row subsets have even cardinality") {
    auto check_all_subsets = [](const LinkingParity& lp) {
        const std::size_t n = lp.size();
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n);
             ++subset) {
            Gf2Vector sum(n);
            int card = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (!((subset >> r) & 1u)) continue;
                ++card;
                for (std::size_t c = 0; c < n; ++c)
                    sum.set(c, sum.get(c) ^ lp.at(r, c));
            }
            if (sum.weight() == 0 && card > 0) REQUIRE(card % 2 == 0);
        }
    };

    // exhaustive over all symmetric unit-diagonal matrices, n <= 4
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs);
             ++bits) {
            Gf2Matrix m(n, n);
            std::size_t k = 0;
            for (std::size_t i = 0; i < n; ++i) {
                m.set(i, i, true);
                for (std::size_t j = i + 1; j < n; ++j, ++k) {
                    const bool bit = (bits >> k) & 1u;
                    m.set(i, j, bit);
                    m.set(j, i, bit);
                }
            }
            check_all_subsets(LinkingParity(std::move(m)));
        }
    }

    // random matrices up to n = 12
    std::mt19937_64 rng(0x5eed002);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        check_all_subsets(testutil::random_parity(n, rng));
    }
}

TEST_CASE("solve is deterministic") {
    std::mt19937_64 rng(0x5eed003);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = rng() % 10, cols = rng() % 10;
        Gf2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1u);
        Gf2Vector b(rows);
        for (std::size_t r = 0; r < rows; ++r) b.set(r, rng() & 1u);
        const auto first = gf2::solve(m, b);
        const auto second = gf2::solve(m, b);
        REQUIRE(first == second);
    }
}

TEST_CASE("LinkingParity validates its invariants") {
    CHECK_THROWS_AS(LinkingParity(Gf2Matrix::from_rows({{1, 1}, {0, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(LinkingParity(Gf2Matrix::from_rows({{0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(LinkingParity(Gf2Matrix(2, 3)), std::invalid_argument);
}
