#include "doctest.h"
#include "powersum/sequences.hpp"
#include "powersum/sum_engine.hpp"

using namespace powersum;

namespace {

std::vector<long> as_longs(const CoefficientRow& row) {
    std::vector<long> out;
    for (const auto& v : row.values) out.push_back(v.to_long());
    return out;
}

}  // namespace

TEST_CASE("coefficient rows") {
    CHECK(as_longs(c_row(2, 2)) == std::vector<long>{1, 2, 1});
    CHECK(as_longs(c_row(7, 1)) == std::vector<long>{1});
    CHECK(as_longs(c_row(2, 3)) == std::vector<long>{1, 2, 3, 2, 1});
    CHECK(as_longs(c_row_oracle(3, 2)) == std::vector<long>{1, 3, 3, 1});
    CHECK(as_longs(c_row_oracle(1, 4)) == std::vector<long>{1, 1, 1, 1});
}

TEST_CASE("recurrence row equals expansion oracle") {
    for (unsigned j = 1; j <= 8; ++j)
        for (unsigned n = 1; n <= 8; ++n) CHECK(c_row(j, n).values == c_row_oracle(j, n).values);
}

TEST_CASE("row invariants") {
    for (unsigned j = 1; j <= 10; ++j)
        for (unsigned n = 1; n <= 10; ++n) {
            const CoefficientRow row = c_row(j, n);
            const std::size_t len = static_cast<std::size_t>(j) * (n - 1) + 1;
            REQUIRE(row.values.size() == len);
            ExactInteger sum(0), weighted(0);
            for (std::size_t q = 0; q < len; ++q) {
                CHECK(row.values[q] >= ExactInteger(1));
                CHECK(row.values[q] == row.values[len - 1 - q]);  // palindrome
                sum += row.values[q];
                weighted += ExactInteger(static_cast<long>(q)) * row.values[q];
            }
            const ExactInteger nPowJ = pow(ExactInteger(static_cast<long>(n)), j);
            CHECK(sum == nPowJ);
            CHECK(weighted * ExactInteger(2) ==
                  ExactInteger(static_cast<long>(j) * (static_cast<long>(n) - 1)) * nPowJ);
        }
}

TEST_CASE("n = 2 rows are binomial rows") {
    for (unsigned j = 1; j <= 12; ++j) {
        const CoefficientRow row = c_row(j, 2);
        for (unsigned q = 0; q <= j; ++q)
            CHECK(row.values[q] == binomial(static_cast<long>(j), static_cast<long>(q)));
    }
}

TEST_CASE("s sums") {
    CHECK(s_sum(SumCell{1, 1, 3}) == ExactInteger(36));
    CHECK(s_sum(SumCell{0, 2, 2}) == ExactInteger(12));
    for (unsigned k = 0; k <= 3; ++k)
        for (unsigned j = 1; j <= 5; ++j)
            CHECK(s_sum(SumCell{k, j, 1}) == pow(ExactInteger(static_cast<long>(j)), 2 * k + 1));
    // s_{k,1}(n) = S_{2k+1}(n)
    for (unsigned k = 0; k <= 4; ++k)
        for (unsigned n = 1; n <= 8; ++n) {
            ExactInteger direct(0);
            for (unsigned q = 1; q <= n; ++q)
                direct += pow(ExactInteger(static_cast<long>(q)), 2 * k + 1);
            CHECK(s_sum(SumCell{k, 1, n}) == direct);
        }
}

TEST_CASE("j = 2 closed form") {
    CHECK(s_sum_j2_closed(0, 2) == ExactInteger(12));
    CHECK(s_sum_j2_closed(1, 2) == ExactInteger(126));
    for (unsigned k = 0; k <= 3; ++k)
        CHECK(s_sum_j2_closed(k, 1) == pow(ExactInteger(2), 2 * k + 1));
    for (unsigned k = 0; k <= 6; ++k)
        for (unsigned n = 1; n <= 10; ++n)
            CHECK(s_sum_j2_closed(k, n) == s_sum(SumCell{k, 2, n}));
}

TEST_CASE("big S") {
    CHECK(big_S(SumCell{0, 2, 2}) == ExactInteger(30));
    CHECK(big_S(SumCell{1, 2, 1}) == ExactInteger(12));
    // S_{k,1}(n) = sigma_{2k+1}(n)
    for (unsigned k = 0; k <= 6; ++k) {
        const UniPoly sigma = sigma_poly(2 * k + 1);
        for (unsigned n = 1; n <= 12; ++n)
            CHECK(ExactRational(big_S(SumCell{k, 1, n})) ==
                  sigma.eval(ExactRational(static_cast<long>(n))));
    }
}

TEST_CASE("n = 1 specialization") {
    CHECK(big_S_j1_special(1, 2) == ExactInteger(12));
    for (unsigned k = 0; k <= 6; ++k)
        for (unsigned j = 1; j <= 6; ++j)
            CHECK(big_S_j1_special(k, j) == big_S(SumCell{k, j, 1}));
    // S_{0,j}(1) = g_j since P_0 = 1
    for (unsigned j = 1; j <= 8; ++j)
        CHECK(big_S_j1_special(0, j) == g_value(j));
    // recurrence S_{k,j}(1) = j^2 S_{k-1,j}(1) - 2j(2j-1) S_{k-1,j-1}(1)
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned j = 2; j <= 6; ++j)
            CHECK(big_S_j1_special(k, j) ==
                  ExactInteger(static_cast<long>(j) * j) * big_S_j1_special(k - 1, j) -
                      ExactInteger(2L * j * (2L * j - 1)) * big_S_j1_special(k - 1, j - 1));
    // S_{k,j}(1) = P_k(j) g_j with the Tuenter polynomial
    for (unsigned k = 0; k <= 6; ++k)
        for (unsigned j = 1; j <= 6; ++j)
            CHECK(ExactRational(big_S_j1_special(k, j)) ==
                  tuenter_poly(k).eval(ExactRational(static_cast<long>(j))) *
                      ExactRational(g_value(j)));
}

TEST_CASE("multiset oracle") {
    const TildeResult r1 = tilde_S_oracle(SumCell{0, 2, 2});
    REQUIRE_FALSE(r1.refused());
    CHECK(*r1.value == ExactInteger(30));
    CHECK(r1.tuple_count == ExactInteger(10));

    const TildeResult r2 = tilde_S_oracle(SumCell{1, 2, 1});
    REQUIRE_FALSE(r2.refused());
    CHECK(*r2.value == ExactInteger(12));  // tuples (1,1), (1,2), (2,2) give 1 + 2 + 9

    // S~_{k,1}(n) = S_{2k+1}(n)
    for (unsigned k = 0; k <= 3; ++k)
        for (unsigned n = 1; n <= 6; ++n) {
            ExactInteger direct(0);
            for (unsigned q = 1; q <= n; ++q)
                direct += pow(ExactInteger(static_cast<long>(q)), 2 * k + 1);
            const TildeResult r = tilde_S_oracle(SumCell{k, 1, n});
            REQUIRE_FALSE(r.refused());
            CHECK(*r.value == direct);
        }
}

TEST_CASE("negative bases follow the x_r = -x_{-r} rule through odd powers") {
    // signed exponentiation realizes the sign rule with no special case
    for (unsigned k = 0; k <= 4; ++k)
        for (long r = 1; r <= 9; ++r)
            CHECK(pow(ExactInteger(-r), 2 * k + 1) == -pow(ExactInteger(r), 2 * k + 1));
    CHECK(pow(ExactInteger(0), 5) == ExactInteger(0));
}

TEST_CASE("budget refusal carries the tuple count and no value") {
    const TildeResult refused = tilde_S_oracle(SumCell{0, 3, 3}, 10);
    CHECK(refused.refused());
    CHECK(refused.tuple_count == ExactInteger(165));  // binom(11, 3)
    CHECK(refused.tuple_count == tilde_tuple_count(3, 3));
}

TEST_CASE("conjecture 1 sweeps") {
    const Conjecture1Report grid = verify_conjecture1(2, 3, 3);
    CHECK(grid.all_equal());
    CHECK(grid.verified == 3 * 3 * 3);
    CHECK(grid.skipped.empty());

    // the j = 2 slice also has the independent closed-form route
    const Conjecture1Report j2 = verify_conjecture1(3, 2, 6);
    CHECK(j2.all_equal());

    // deterministic report independent of parallelism
    const Conjecture1Report serial = verify_conjecture1(2, 3, 4, kDefaultEnumerationBudget, 1);
    const Conjecture1Report parallel = verify_conjecture1(2, 3, 4, kDefaultEnumerationBudget, 4);
    CHECK(serial.verified == parallel.verified);
    REQUIRE(serial.skipped.size() == parallel.skipped.size());
    CHECK(serial.counterexamples.empty());
    CHECK(parallel.counterexamples.empty());

    // a tight budget skips the big cells instead of sampling them
    const Conjecture1Report tight = verify_conjecture1(1, 3, 3, 50);
    CHECK(tight.all_equal());
    CHECK_FALSE(tight.skipped.empty());
    for (const auto& s : tight.skipped) CHECK(s.tuple_count > ExactInteger(50));
}
