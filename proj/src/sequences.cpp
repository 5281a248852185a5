#include "powersum/sequences.hpp"

#include <mutex>

namespace powersum {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<ExactRational>& bernoulli_cache() {
    static std::vector<ExactRational> cache{ExactRational(1), ExactRational(-1, 2)};
    return cache;
}

std::mutex g_tuenter_mutex;
std::vector<UniPoly>& tuenter_cache() {
    static std::vector<UniPoly> cache{UniPoly::constant(ExactRational(1))};
    return cache;
}

}  // namespace

ExactRational bernoulli(unsigned q) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    auto& cache = bernoulli_cache();
    while (cache.size() <= q) {
        const unsigned k = static_cast<unsigned>(cache.size());
        ExactRational acc(0);
        for (unsigned i = 0; i < k; ++i)
            acc += ExactRational(binomial(static_cast<long>(k) + 1, static_cast<long>(i))) * cache[i];
        cache.push_back(-acc / ExactRational(static_cast<long>(k) + 1));
    }
    return cache[q];
}

ExactRational genocchi(unsigned twoK) {
    if (twoK == 0 || twoK % 2 != 0) throw std::domain_error("genocchi: index must be even and >= 2");
    const ExactRational twoPow(pow(ExactInteger(2), twoK));
    return ExactRational(2) * (ExactRational(1) - twoPow) * bernoulli(twoK);
}

UniPoly sigma_poly(unsigned m) {
    if (m < 1) throw std::domain_error("sigma_poly: m >= 1 required");
    std::vector<ExactRational> c(m + 2, ExactRational(0));
    const ExactRational inv(ExactInteger(1), ExactInteger(static_cast<long>(m) + 1));
    ExactRational sign(1);
    for (unsigned q = 0; q <= m; ++q) {
        c[m - q + 1] = inv * sign * ExactRational(binomial(static_cast<long>(m) + 1, static_cast<long>(q))) *
                       bernoulli(q);
        sign = -sign;
    }
    return UniPoly(std::move(c));
}

UniPoly tuenter_poly(unsigned k) {
    std::lock_guard<std::mutex> lock(g_tuenter_mutex);
    auto& cache = tuenter_cache();
    const UniPoly x = UniPoly::monomial(1);
    const UniPoly x2 = UniPoly::monomial(2);
    while (cache.size() <= k) {
        const UniPoly& prev = cache.back();
        const UniPoly shifted = prev.shifted_down();
        cache.push_back(x2 * (prev - shifted) + x * shifted);
    }
    return cache[k];
}

ExactInteger g_value_n(unsigned j, unsigned n) {
    if (j < 1 || n < 1) throw std::domain_error("g_value_n: j >= 1 and n >= 1 required");
    ExactInteger prod(static_cast<long>(j));
    for (unsigned q = 1; q <= j - 1; ++q)
        prod *= ExactInteger(static_cast<long>(j) * n + q);
    // prod_{q=1}^{j-1}(jn+q) is a run of j-1 consecutive integers, so the
    // division by (j-1)! is exact; divexact throws if that ever breaks.
    return prod.divexact(factorial(static_cast<unsigned long>(j) - 1));
}

ExactInteger g_value(unsigned j) { return g_value_n(j, 1); }

namespace {

FaulhaberRow row_with_invariants(FaulhaberRow row) {
    if (!(row.A.at(0) == ExactRational(1)))
        throw internal_error("FaulhaberRow: A_0 != 1");
    if (row.k >= 2 && !row.A.back().is_zero())
        throw internal_error("FaulhaberRow: A_{k-1} != 0");
    return row;
}

}  // namespace

FaulhaberRow faulhaber_row_knuth(unsigned k) {
    if (k < 1) throw std::domain_error("faulhaber_row_knuth: k >= 1 required");
    std::vector<ExactRational> A(k, ExactRational(0));
    A[0] = ExactRational(1);
    for (unsigned r = 1; r < k; ++r) {
        ExactRational acc(0);
        for (unsigned q = 0; q < r; ++q)
            acc += ExactRational(binomial(static_cast<long>(k) - q, 2L * r + 1 - 2L * q)) * A[q];
        // pivot binom(k-r, 1) = k-r, nonzero for r < k
        A[r] = -acc / ExactRational(static_cast<long>(k) - r);
    }
    return row_with_invariants(FaulhaberRow{k, std::move(A)});
}

FaulhaberRow faulhaber_row_jacobi(unsigned k, const FaulhaberRow& up) {
    if (k < 1) throw std::domain_error("faulhaber_row_jacobi: k >= 1 required");
    if (up.k != k + 1 || up.A.size() != k + 1)
        throw std::domain_error("faulhaber_row_jacobi: expected the (k+1) row");
    std::vector<ExactRational> A(k, ExactRational(0));
    const ExactRational denom(static_cast<long>(2 * k + 2) * static_cast<long>(2 * k + 1));
    for (unsigned q = 0; q < k; ++q) {
        ExactRational acc = ExactRational(2L * (static_cast<long>(k) - q + 1) * (2L * (static_cast<long>(k) - q) + 1)) *
                            up.A[q];
        if (q > 0)
            acc += ExactRational((static_cast<long>(k) - q + 1) * (static_cast<long>(k) - q + 2)) * up.A[q - 1];
        A[q] = acc / denom;
    }
    return row_with_invariants(FaulhaberRow{k, std::move(A)});
}

namespace {

// det by fraction-free Bareiss over ExactRational entries scaled to integers;
// entries here are already integers (binomials).
ExactInteger integer_determinant(std::vector<std::vector<ExactInteger>> m) {
    const std::size_t n = m.size();
    if (n == 0) return ExactInteger(1);
    ExactInteger prev(1);
    int signFlips = 0;
    for (std::size_t s = 0; s + 1 < n; ++s) {
        std::size_t pivot = s;
        while (pivot < n && m[pivot][s].is_zero()) ++pivot;
        if (pivot == n) return ExactInteger(0);
        if (pivot != s) {
            std::swap(m[pivot], m[s]);
            ++signFlips;
        }
        for (std::size_t i = s + 1; i < n; ++i) {
            for (std::size_t j = s + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[s][s] - m[i][s] * m[s][j]).divexact(prev);
            m[i][s] = ExactInteger(0);
        }
        prev = m[s][s];
    }
    ExactInteger det = m[n - 1][n - 1];
    return (signFlips % 2 == 0) ? det : -det;
}

}  // namespace

ExactRational faulhaber_coeff_determinant(unsigned k, unsigned q) {
    if (q < 1 || q > k - 1) throw std::domain_error("faulhaber_coeff_determinant: 1 <= q <= k-1 required");
    // q x q band: row r (1-based) holds binom(k-q+r, 2(r-s)+3), zero when
    // the lower index is negative.
    std::vector<std::vector<ExactInteger>> m(q, std::vector<ExactInteger>(q));
    for (unsigned r = 1; r <= q; ++r)
        for (unsigned s = 1; s <= q; ++s)
            m[r - 1][s - 1] = binomial(static_cast<long>(k) - q + r, 2L * r - 2L * s + 3);
    const ExactInteger det = integer_determinant(std::move(m));
    ExactInteger pre(1);
    for (unsigned i = 1; i <= q; ++i) pre *= ExactInteger(static_cast<long>(i) - static_cast<long>(k));
    return ExactRational(det, pre);
}

std::optional<DeterminantDiscrepancy> check_determinant_route(unsigned k, unsigned q) {
    const ExactRational viaDet = faulhaber_coeff_determinant(k, q);
    const ExactRational viaKnuth = faulhaber_row_knuth(k).A.at(q);
    if (viaDet == viaKnuth) return std::nullopt;
    return DeterminantDiscrepancy{k, q, viaDet, viaKnuth};
}

std::optional<ExactRational> faulhaber_closed_form(unsigned q, unsigned k) {
    if (q < 1 || q > 4 || k < q + 1) return std::nullopt;
    const ExactRational kk(static_cast<long>(k));
    auto at = [&kk](long c) { return kk - ExactRational(c); };
    switch (q) {
        case 1:
            return -(at(2) * kk) / ExactRational(6);
        case 2:
            return at(3) * at(1) * kk * (ExactRational(7) * kk - ExactRational(8)) / ExactRational(360);
        case 3:
            return -(at(4) * at(2) * at(1) * kk *
                     (ExactRational(31) * kk * kk - ExactRational(89) * kk + ExactRational(48))) /
                   ExactRational(15120);
        case 4:
            return at(5) * at(3) * at(2) * at(1) * kk *
                   (ExactRational(127) * kk * kk * kk - ExactRational(691) * kk * kk +
                    ExactRational(1038) * kk - ExactRational(384)) /
                   ExactRational(604800);
    }
    return std::nullopt;
}

UniPoly faulhaber_sum_poly(unsigned k) {
    const FaulhaberRow row = faulhaber_row_knuth(k + 1);
    const ExactRational scale(ExactInteger(1), ExactInteger(2L * (static_cast<long>(k) + 1)));
    std::vector<ExactRational> c(k + 2, ExactRational(0));
    for (unsigned q = 0; q <= k; ++q) c[k - q + 1] = scale * row.A[q];
    return UniPoly(std::move(c));
}

ExactRational venn_T(unsigned p, unsigned q) {
    if (p < 3 || p % 2 == 0) throw std::domain_error("venn_T: odd p >= 3 required");
    if (q < 1 || q > p - 2) throw std::domain_error("venn_T: 1 <= q <= p-2 required");
    const ExactInteger b = binomial(static_cast<long>(p) - 1, static_cast<long>(q));
    const ExactInteger s = (q % 2 == 1) ? ExactInteger(1) : ExactInteger(-1);
    return ExactRational(b + s, ExactInteger(static_cast<long>(p)));
}

ExactRational venn_row_sum(unsigned p) {
    ExactRational acc(0);
    for (unsigned q = 1; q <= p - 2; ++q) acc += venn_T(p, q);
    return acc;
}

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

unsigned n_param_count(unsigned k) {
    if (k < 1) throw std::domain_error("n_param_count: k >= 1 required");
    unsigned total = 0;
    for (unsigned j = 0; j < k; ++j) total += j / 3 + 1;
    return total;
}

}  // namespace powersum
