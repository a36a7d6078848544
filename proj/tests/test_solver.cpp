#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gebr/solver.hpp"
#include "test_oracles.hpp"

using namespace gebr;
using Kind = RecursionOutcome::Kind;

namespace {

BitPoly random_valid(int p, int tau, std::mt19937& rng) {
    std::vector<uint8_t> data(p * tau - tau);
    for (auto& b : data) b = rng() & 1u;
    return lift(data, p, tau);
}

BitPoly random_any(int n, std::mt19937& rng) {
    BitPoly v(n);
    for (int i = 0; i < n; ++i)
        if (rng() & 1u) v.set_bit(i, true);
    return v;
}

// Checks one solve against the dense reference on the same (u, d) instance.
void check_against_dense(const BitPoly& u, int d, int p, int tau) {
    const int n = p * tau;
    RecursionOutcome fast = solve_binomial(u, d, n, p, tau);
    oracle::DenseSolution dense = oracle::binomial_system_solve(u, d, p, tau);

    if (!dense.consistent) {
        REQUIRE(fast.kind == Kind::NoSolution);
        return;
    }
    BitPoly dense_sol = lift(dense.particular, p, tau);
    if (dense.kernel.empty()) {
        REQUIRE(fast.kind == Kind::Unique);
        REQUIRE(fast.solution == dense_sol);
        return;
    }
    REQUIRE(fast.kind == Kind::Multiple);
    REQUIRE(fast.count_log2 == static_cast<int>(dense.kernel.size()));
    // both particular solutions solve the system...
    REQUIRE(mul_binomial(fast.solution, d) == u);
    REQUIRE(column_valid(fast.solution, p, tau));
    REQUIRE(mul_binomial(dense_sol, d) == u);
    // ...and differ by a kernel element, so the solution sets coincide
    BitPoly diff = add(fast.solution, dense_sol);
    REQUIRE(mul_binomial(diff, d).is_zero());
    REQUIRE(column_valid(diff, p, tau));
}

}  // namespace

TEST_CASE("zero right-hand side under MDS parameters has only the zero solution") {
    GebrParams prm = make_params(9, 3, 3);
    for (int d = 1; d <= 8; ++d) {
        RecursionOutcome out = solve_binomial(BitPoly(9), d, prm);
        CHECK(out.kind == Kind::Unique);
        CHECK(out.solution == BitPoly(9));
    }
}

TEST_CASE("zero right-hand side under non-MDS parameters is ambiguous") {
    RecursionOutcome out = solve_binomial(BitPoly(6), 3, 6, 3, 2);
    REQUIRE(out.kind == Kind::Multiple);
    CHECK(out.count_log2 == static_cast<int>(kernel_basis(6, 3, 2, 3).size()));
    // the canonical solution solves the system; the known nonzero solution
    // 1 + a + a^3 + a^4 lies in the kernel span
    CHECK(mul_binomial(out.solution, 3).is_zero());
    CHECK(column_valid(out.solution, 3, 2));
    CHECK(oracle::in_span(kernel_basis(6, 3, 2, 3), BitPoly::from_bits({1, 1, 0, 1, 1, 0})));
}

TEST_CASE("recovers the unique preimage under MDS parameters") {
    BitPoly w = lift(std::vector<uint8_t>{1, 0, 1, 0, 0, 1}, 3, 3);
    BitPoly u = mul_binomial(w, 1);
    RecursionOutcome out = solve_binomial(u, 1, 9, 3, 3);
    REQUIRE(out.kind == Kind::Unique);
    CHECK(out.solution == w);

    // brute force: w is the only preimage among all multiples
    int preimages = 0;
    for (uint32_t mask = 0; mask < (1u << 6); ++mask) {
        std::vector<uint8_t> data(6);
        for (int t = 0; t < 6; ++t) data[t] = (mask >> t) & 1u;
        if (mul_binomial(lift(data, 3, 3), 1) == u) ++preimages;
    }
    CHECK(preimages == 1);
}

TEST_CASE("inconsistent right-hand sides are rejected") {
    // odd cycle sum
    CHECK(solve_binomial(BitPoly::monomial(6, 0), 1, 6, 3, 2).kind == Kind::NoSolution);
    // per-cycle sums fine, but no solution satisfies the column condition
    BitPoly u = mul_binomial(BitPoly::monomial(9, 0), 1);
    CHECK(solve_binomial(u, 1, 9, 3, 3).kind == Kind::NoSolution);
    // cycle sums even, but the right-hand side violates the column
    // condition and so has no valid preimage
    CHECK(solve_binomial(BitPoly::from_bits({1, 0, 0, 1, 0, 0}), 3, 6, 3, 2).kind ==
          Kind::NoSolution);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(solve_binomial(BitPoly(6), 0, 6, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(solve_binomial(BitPoly(6), 6, 6, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(solve_binomial(BitPoly(5), 2, 6, 3, 2), std::invalid_argument);
}

TEST_CASE("round trip over all multiples, exhaustive at small n") {
    for (auto [n, p] : {std::pair{6, 3}, {6, 2}, {9, 3}, {10, 5}, {10, 2}, {15, 3}, {15, 5}}) {
        const int tau = n / p;
        const int dim = n - tau;
        const bool mds = is_mds_shape(p, tau);
        for (int d = 1; d < n; ++d) {
            const int kernel_dim = static_cast<int>(kernel_basis(n, p, tau, d).size());
            for (uint32_t mask = 0; mask < (1u << dim); ++mask) {
                std::vector<uint8_t> data(dim);
                for (int t = 0; t < dim; ++t) data[t] = (mask >> t) & 1u;
                BitPoly w = lift(data, p, tau);
                BitPoly u = mul_binomial(w, d);
                RecursionOutcome out = solve_binomial(u, d, n, p, tau);
                REQUIRE(out.kind != Kind::NoSolution);
                REQUIRE(mul_binomial(out.solution, d) == u);
                REQUIRE(column_valid(out.solution, p, tau));
                if (mds) {
                    REQUIRE(out.kind == Kind::Unique);
                    REQUIRE(out.solution == w);
                }
                REQUIRE((out.kind == Kind::Unique) == (kernel_dim == 0));
                if (out.kind == Kind::Multiple) REQUIRE(out.count_log2 == kernel_dim);
            }
        }
    }
}

TEST_CASE("outcome is deterministic") {
    std::mt19937 rng(5);
    BitPoly u = mul_binomial(random_valid(2, 3, rng), 3);
    RecursionOutcome a = solve_binomial(u, 3, 6, 2, 3);
    RecursionOutcome b = solve_binomial(u, 3, 6, 2, 3);
    REQUIRE(a.kind == Kind::Multiple);
    CHECK(a.solution == b.solution);
    CHECK(a.count_log2 == b.count_log2);
}

TEST_CASE("agrees with the dense reference solve on random instances") {
    std::mt19937 rng(99);
    for (auto [n, p] : {std::pair{6, 3}, {6, 2}, {12, 2}, {15, 3}, {27, 3}, {45, 5}}) {
        const int tau = n / p;
        for (int trial = 0; trial < 60; ++trial) {
            int d = 1 + static_cast<int>(rng() % (n - 1));
            BitPoly u = (trial % 2) ? mul_binomial(random_valid(p, tau, rng), d)
                                    : random_any(n, rng);
            check_against_dense(u, d, p, tau);
        }
    }
}
