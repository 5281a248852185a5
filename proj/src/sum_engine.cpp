#include "powersum/sum_engine.hpp"

#include <map>
#include <mutex>
#include <thread>

namespace powersum {

namespace {

std::mutex g_row_mutex;
std::map<std::pair<unsigned, unsigned>, CoefficientRow>& row_cache() {
    static std::map<std::pair<unsigned, unsigned>, CoefficientRow> cache;
    return cache;
}

CoefficientRow build_row(unsigned j, unsigned n) {
    // C_{1,q}(n) = 1 for q = 0..n-1; each next row is a width-n window sum
    // over the previous one, maintained as a rolling sum.
    std::vector<ExactInteger> prev(n, ExactInteger(1));
    for (unsigned level = 2; level <= j; ++level) {
        const std::size_t len = static_cast<std::size_t>(level) * (n - 1) + 1;
        std::vector<ExactInteger> cur(len);
        ExactInteger window(0);
        for (std::size_t r = 0; r < len; ++r) {
            if (r < prev.size()) window += prev[r];
            if (r >= n && r - n < prev.size()) window -= prev[r - n];
            cur[r] = window;
        }
        prev = std::move(cur);
    }
    return CoefficientRow{j, n, std::move(prev)};
}

void check_row_invariants(const CoefficientRow& row) {
    const std::size_t len = static_cast<std::size_t>(row.j) * (row.n - 1) + 1;
    if (row.values.size() != len) throw internal_error("CoefficientRow: wrong length");
    for (const auto& v : row.values)
        if (v < ExactInteger(1)) throw internal_error("CoefficientRow: entry below 1");
}

}  // namespace

CoefficientRow c_row(unsigned j, unsigned n) {
    if (j < 1 || n < 1) throw std::domain_error("c_row: j >= 1 and n >= 1 required");
    if (n == 1) return CoefficientRow{j, n, {ExactInteger(1)}};
    {
        std::lock_guard<std::mutex> lock(g_row_mutex);
        auto it = row_cache().find({j, n});
        if (it != row_cache().end()) return it->second;
    }
    CoefficientRow row = build_row(j, n);
    check_row_invariants(row);
    {
        std::lock_guard<std::mutex> lock(g_row_mutex);
        row_cache().emplace(std::make_pair(j, n), row);
    }
    return row;
}

CoefficientRow c_row_oracle(unsigned j, unsigned n) {
    if (j < 1 || n < 1) throw std::domain_error("c_row_oracle: j >= 1 and n >= 1 required");
    std::vector<ExactInteger> acc(n, ExactInteger(1));
    for (unsigned level = 2; level <= j; ++level) {
        std::vector<ExactInteger> next(acc.size() + n - 1, ExactInteger(0));
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < n; ++b) next[a + b] += acc[a];
        acc = std::move(next);
    }
    return CoefficientRow{j, n, std::move(acc)};
}

ExactInteger s_sum(const SumCell& cell) {
    const CoefficientRow row = c_row(cell.j, cell.n);
    const unsigned long e = 2UL * cell.k + 1;
    ExactInteger acc(0);
    for (std::size_t q = 0; q < row.values.size(); ++q)
        acc += row.values[q] * pow(ExactInteger(static_cast<long>(cell.j + q)), e);
    return acc;
}

ExactInteger s_sum_j2_closed(unsigned k, unsigned n) {
    const unsigned long e = 2UL * k + 1;
    ExactInteger acc(0);
    for (unsigned q = 1; q <= n; ++q)
        acc -= ExactInteger(2L * n - 2L * q + 2) * pow(ExactInteger(static_cast<long>(q)), e);
    for (unsigned q = 1; q <= 2 * n; ++q)
        acc += ExactInteger(2L * n - q + 1) * pow(ExactInteger(static_cast<long>(q)), e);
    return acc;
}

ExactInteger big_S(const SumCell& cell) {
    ExactInteger acc(0);
    const long top = static_cast<long>(cell.j) * (static_cast<long>(cell.n) + 1);
    for (unsigned q = 0; q < cell.j; ++q)
        acc += binomial(top, static_cast<long>(q)) * s_sum(SumCell{cell.k, cell.j - q, cell.n});
    return acc;
}

ExactInteger big_S_j1_special(unsigned k, unsigned j) {
    const unsigned long e = 2UL * k + 1;
    ExactInteger acc(0);
    for (unsigned q = 0; q < j; ++q)
        acc += binomial(2L * j, static_cast<long>(q)) *
               pow(ExactInteger(static_cast<long>(j) - q), e);
    return acc;
}

ExactInteger tilde_tuple_count(unsigned j, unsigned n) {
    return binomial(static_cast<long>(j) * n + j - 1, static_cast<long>(j));
}

TildeResult tilde_S_oracle(const SumCell& cell, std::uint64_t budget) {
    const ExactInteger count = tilde_tuple_count(cell.j, cell.n);
    if (mpz_cmp_ui(count.raw(), static_cast<unsigned long>(budget)) > 0)
        return TildeResult{std::nullopt, count};

    const unsigned j = cell.j, n = cell.n;
    const long hi = static_cast<long>(j) * n;
    const unsigned long e = 2UL * cell.k + 1;

    // x_r = r^{2k+1} for every base the shifted terms can take:
    // r = l_i - (i-1) n ranges over [1 - (j-1)n, jn].
    const long lo = 1 - static_cast<long>(j - 1) * n;
    std::vector<ExactInteger> power(static_cast<std::size_t>(hi - lo + 1));
    for (long r = lo; r <= hi; ++r)
        power[static_cast<std::size_t>(r - lo)] = pow(ExactInteger(r), e);

    // iterative odometer over weakly increasing tuples 1 <= l_1 <= ... <= l_j <= jn
    std::vector<long> lam(j, 1);
    ExactInteger total(0);
    while (true) {
        for (unsigned i = 0; i < j; ++i)
            total += power[static_cast<std::size_t>(lam[i] - static_cast<long>(i) * n - lo)];
        unsigned i = j;
        while (i > 0 && lam[i - 1] == hi) --i;
        if (i == 0) break;
        const long next = lam[i - 1] + 1;
        for (unsigned l = i - 1; l < j; ++l) lam[l] = next;
    }
    return TildeResult{std::move(total), count};
}

Conjecture1Report verify_conjecture1(unsigned kmax, unsigned jmax, unsigned nmax,
                                     std::uint64_t budget, unsigned parallelism) {
    if (jmax < 1 || nmax < 1 || parallelism < 1)
        throw std::domain_error("verify_conjecture1: bad grid or parallelism");

    std::vector<SumCell> cells;
    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned j = 1; j <= jmax; ++j)
            for (unsigned n = 1; n <= nmax; ++n) cells.push_back(SumCell{k, j, n});

    struct CellOutcome {
        bool skipped = false;
        ExactInteger tuple_count;
        bool equal = true;
        ExactInteger lhs, rhs;
    };
    std::vector<CellOutcome> outcomes(cells.size());

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const SumCell& cell = cells[i];
            const TildeResult oracle = tilde_S_oracle(cell, budget);
            CellOutcome& out = outcomes[i];
            out.tuple_count = oracle.tuple_count;
            if (oracle.refused()) {
                out.skipped = true;
                continue;
            }
            out.lhs = *oracle.value;
            out.rhs = big_S(cell);
            out.equal = (out.lhs == out.rhs);
        }
    };

    const unsigned workers = std::min<std::size_t>(parallelism, cells.size() ? cells.size() : 1);
    if (workers <= 1) {
        work(0, cells.size());
    } else {
        std::vector<std::thread> threads;
        const std::size_t chunk = (cells.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(cells.size(), begin + chunk);
            if (begin < end) threads.emplace_back(work, begin, end);
        }
        for (auto& t : threads) t.join();
    }

    Conjecture1Report report;
    report.kmax = kmax;
    report.jmax = jmax;
    report.nmax = nmax;
    report.budget = budget;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const CellOutcome& out = outcomes[i];
        if (out.skipped)
            report.skipped.push_back(Conjecture1Skip{cells[i], out.tuple_count});
        else if (!out.equal)
            report.counterexamples.push_back(Conjecture1Counterexample{cells[i], out.lhs, out.rhs});
        else
            ++report.verified;
    }
    return report;
}

}  // namespace powersum
