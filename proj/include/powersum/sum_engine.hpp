#ifndef POWERSUM_SUM_ENGINE_HPP
#define POWERSUM_SUM_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "powersum/exact.hpp"

namespace powersum {

/// The full coefficient row C_{j,0}(n) .. C_{j,j(n-1)}(n) of
/// (a + a^2 + ... + a^n)^j = sum_q C_{j,q}(n) a^{q+j}.
/// Palindromic, entries >= 1, sums to n^j.
struct CoefficientRow {
    unsigned j = 1;
    unsigned n = 1;
    std::vector<ExactInteger> values;
};

/// Row built by the window recurrence C_{j,r}(n) = sum_{q=r-n+1}^{r}
/// C_{j-1,q}(n) from the all-ones j=1 row, with rolling prefix sums.
/// Rows are memoized by (j, n).
CoefficientRow c_row(unsigned j, unsigned n);

/// Independent oracle: j-1 explicit convolutions of the length-n
/// all-ones vector.
CoefficientRow c_row_oracle(unsigned j, unsigned n);

/// Index triple of the sums s_{k,j}(n), S_{k,j}(n), S~_{k,j}(n).
struct SumCell {
    unsigned k = 0;
    unsigned j = 1;
    unsigned n = 1;
};

/// s_{k,j}(n) = sum_q C_{j,q}(n) (j+q)^{2k+1}.
ExactInteger s_sum(const SumCell& cell);

/// Closed form for j = 2:
/// s_{k,2}(n) = -sum_{q=1}^{n}(2n-2q+2) q^{2k+1} + sum_{q=1}^{2n}(2n-q+1) q^{2k+1}.
ExactInteger s_sum_j2_closed(unsigned k, unsigned n);

/// S_{k,j}(n) = sum_{q=0}^{j-1} binom(j(n+1), q) s_{k,j-q}(n).
ExactInteger big_S(const SumCell& cell);

/// The n = 1 specialization S_{k,j}(1) = sum_{q=0}^{j-1} binom(2j, q) (j-q)^{2k+1}.
ExactInteger big_S_j1_special(unsigned k, unsigned j);

/// Number of weakly increasing j-tuples in [1, jn]: binom(jn+j-1, j).
ExactInteger tilde_tuple_count(unsigned j, unsigned n);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100000000;

/// Result of the multiset enumeration oracle. When the tuple count
/// exceeds the budget the value is absent: a refusal, never a partial sum.
struct TildeResult {
    std::optional<ExactInteger> value;
    ExactInteger tuple_count;
    bool refused() const { return !value.has_value(); }
};

/// S~_{k,j}(n) = sum over weakly increasing tuples 1 <= l_1 <= ... <= l_j <= jn
/// of sum_i (l_i - (i-1) n)^{2k+1}; odd powers of signed integers realize
/// the x_r = -x_{-r} rule automatically.
TildeResult tilde_S_oracle(const SumCell& cell,
                           std::uint64_t budget = kDefaultEnumerationBudget);

struct Conjecture1Counterexample {
    SumCell cell;
    ExactInteger lhs;  // S~ (oracle)
    ExactInteger rhs;  // S (formula)
};

struct Conjecture1Skip {
    SumCell cell;
    ExactInteger tuple_count;
};

struct Conjecture1Report {
    unsigned kmax = 0, jmax = 1, nmax = 1;
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned verified = 0;
    std::vector<Conjecture1Skip> skipped;
    std::vector<Conjecture1Counterexample> counterexamples;
    bool all_equal() const { return counterexamples.empty(); }
};

/// Checks S~ = S on the full grid k <= kmax, j <= jmax, n <= nmax.
/// Cells may be evaluated concurrently; the report is assembled in
/// lexicographic (k, j, n) order regardless of completion order.
Conjecture1Report verify_conjecture1(unsigned kmax, unsigned jmax, unsigned nmax,
                                     std::uint64_t budget = kDefaultEnumerationBudget,
                                     unsigned parallelism = 1);

}  // namespace powersum

#endif
