#ifndef POWERSUM_SEQUENCES_HPP
#define POWERSUM_SEQUENCES_HPP

#include <optional>
#include <vector>

#include "powersum/exact.hpp"
#include "powersum/poly.hpp"

namespace powersum {

/// Bernoulli number B_q under the recursion
/// sum_{q=0}^{k} binom(k+1, q) B_q = 0, B_0 = 1 (so B_1 = -1/2). Memoized.
ExactRational bernoulli(unsigned q);

/// Genocchi number G_{2k} = 2(1 - 2^{2k}) B_{2k}; defined at even
/// indices >= 2 only, odd or zero input is a domain error.
ExactRational genocchi(unsigned twoK);

/// sigma_m as a polynomial in n: degree m+1, zero constant term,
/// sigma_m(n) = sum_{q=1}^{n} q^m.
UniPoly sigma_poly(unsigned m);

/// Tuenter polynomial P_k(x): P_0 = 1,
/// P_{k+1}(x) = x^2 (P_k(x) - P_k(x-1)) + x P_k(x-1). Memoized.
UniPoly tuenter_poly(unsigned k);

/// g_j(n) = j/(j-1)! * prod_{q=1}^{j-1} (jn + q); always an integer.
ExactInteger g_value_n(unsigned j, unsigned n);
/// g_j = g_j(1).
ExactInteger g_value(unsigned j);

/// Row of Faulhaber coefficients A_0^{(k)} .. A_{k-1}^{(k)} of
/// S_{k-1,1}(n) written in t = n(n+1); A_0 = 1 and A_{k-1} = 0.
struct FaulhaberRow {
    unsigned k = 1;
    std::vector<ExactRational> A;
};

/// Solves the triangular system sum_{q<=r} binom(k-q, 2r+1-2q) A_q = 0.
FaulhaberRow faulhaber_row_knuth(unsigned k);

/// Downward recurrence from the (k+1) row:
/// (2k+2)(2k+1) A_q^{(k)} = 2(k-q+1)(2k-2q+1) A_q^{(k+1)}
///                          + (k-q+1)(k-q+2) A_{q-1}^{(k+1)}.
FaulhaberRow faulhaber_row_jacobi(unsigned k, const FaulhaberRow& row_k_plus_1);

/// A_q^{(k)} via the banded binomial determinant with prefactor
/// 1/((1-k)...(q-k)); exact fraction-free determinant. 1 <= q <= k-1.
ExactRational faulhaber_coeff_determinant(unsigned k, unsigned q);

/// Cross-check of the determinant route against the Knuth route.
struct DeterminantDiscrepancy {
    unsigned k = 0;
    unsigned q = 0;
    ExactRational determinant_value;
    ExactRational knuth_value;
};

/// nullopt if the two routes agree; the Knuth route is authoritative.
std::optional<DeterminantDiscrepancy> check_determinant_route(unsigned k, unsigned q);

/// Closed forms for A_q^{(k)} with q in 1..4, valid for k >= q+1.
std::optional<ExactRational> faulhaber_closed_form(unsigned q, unsigned k);

/// S_{k,1}(n) as a polynomial in t assembled from the (k+1) Faulhaber row:
/// 1/(2(k+1)) * sum_q A_q^{(k+1)} t^{k-q+1}.
UniPoly faulhaber_sum_poly(unsigned k);

/// Venn number T(p, q) = (binom(p-1, q) + (-1)^{q+1}) / p for odd p.
ExactRational venn_T(unsigned p, unsigned q);
/// Row sum sum_{q=1}^{p-2} T(p, q); equals the Fermat quotient
/// (2^{p-1} - 1)/p for prime p.
ExactRational venn_row_sum(unsigned p);

/// Trial-division primality, adequate for the Venn range.
bool is_prime(unsigned p);

/// N_k = sum_{j=0}^{k-1} (floor(j/3) + 1), the number of alpha parameters
/// defining P_k(t, x).
unsigned n_param_count(unsigned k);

}  // namespace powersum

#endif
