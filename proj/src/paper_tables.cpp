#include "powersum/paper_tables.hpp"

#include <stdexcept>

namespace powersum::paper_tables {

namespace {

UniPoly int_poly(std::vector<long> ascending) {
    std::vector<ExactRational> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.emplace_back(v);
    return UniPoly(std::move(c));
}

ExactRational frac(long n, long d) { return ExactRational(n, d); }

}  // namespace

UniPoly tuenter_printed(unsigned k) {
    switch (k) {
        case 0: return int_poly({1});
        case 1: return int_poly({0, 1});
        case 2: return int_poly({0, -1, 2});
        case 3: return int_poly({0, 3, -8, 6});
        case 4: return int_poly({0, -17, 54, -60, 24});
        case 5: return int_poly({0, 155, -556, 762, -480, 120});
        case 6: return int_poly({0, -2073, 8146, -12840, 10248, -4200, 720});
        case 7: return int_poly({0, 38227, -161424, 282078, -263040, 139440, -40320, 5040});
    }
    throw std::domain_error("tuenter_printed: only k <= 7 is in the printed list");
}

std::vector<ExactRational> alpha_printed(unsigned k, unsigned j) {
    if (k > kPListMax || j >= k) throw std::domain_error("alpha_printed: out of table");
    if (j == 0) return {ExactRational(factorial(static_cast<unsigned long>(k)))};
    switch (k) {
        case 2:
            if (j == 1) return {frac(2, 3)};
            break;
        case 3:
            if (j == 1) return {frac(16, 3)};
            if (j == 2) return {frac(4, 3)};
            break;
        case 4:
            if (j == 1) return {frac(40, 1)};
            if (j == 2) return {frac(24, 1)};
            if (j == 3) return {frac(24, 5), frac(8, 5)};
            break;
        case 5:
            if (j == 1) return {frac(320, 1)};
            if (j == 2) return {frac(1016, 3)};
            if (j == 3) return {frac(160, 1), frac(32, 1)};
            if (j == 4) return {frac(80, 3), frac(80, 3)};
            break;
        case 6:
            if (j == 1) return {frac(2800, 1)};
            if (j == 2) return {frac(13664, 3)};
            if (j == 3) return {frac(55936, 15), frac(7632, 15)};
            if (j == 4) return {frac(22112, 15), frac(13664, 15)};
            if (j == 5) return {frac(22112, 105), frac(44224, 105)};
            break;
        case 7:
            if (j == 1) return {frac(26880, 1)};
            if (j == 2) return {frac(185920, 3)};
            if (j == 3) return {frac(76800, 1), frac(7680, 1)};
            if (j == 4) return {frac(157088, 3), frac(67968, 3)};
            if (j == 5) return {frac(17920, 1), frac(22528, 1)};
            if (j == 6) return {frac(2240, 1), frac(22400, 3), frac(448, 1)};
            break;
    }
    throw std::domain_error("alpha_printed: out of table");
}

XPolynomial p_printed(unsigned k) {
    if (k > kPListMax) throw std::domain_error("p_printed: only k <= 7 is in the printed list");
    if (k == 0) return XPolynomial({RationalCoefficient{UniPoly::constant(ExactRational(1)), 0}});
    std::vector<RationalCoefficient> coeffs(k + 1);
    const UniPoly tPlus1 = int_poly({1, 1});
    for (unsigned j = 0; j < k; ++j) {
        const auto alphas = alpha_printed(k, j);
        UniPoly num;
        for (unsigned q = 0; q < alphas.size(); ++q) {
            UniPoly term = UniPoly::constant(alphas[q]).times_power(2 * q);
            for (unsigned e = 0; e < j - 3 * q; ++e) term = term * tPlus1;
            num += term;
        }
        if (j % 2 == 1) num = -num;
        coeffs[k - j] = reduce_rational_coefficient(std::move(num), j);
    }
    return XPolynomial(std::move(coeffs));
}

const FaulhaberFixture& faulhaber_printed(unsigned k) {
    static const std::vector<FaulhaberFixture> table = [] {
        std::vector<FaulhaberFixture> t;
        auto scaled = [](std::vector<long> inner, long divisor, unsigned shift) {
            // inner is ascending in t and gets multiplied by t^shift / divisor
            std::vector<ExactRational> c(inner.size() + shift, ExactRational(0));
            for (std::size_t i = 0; i < inner.size(); ++i)
                c[i + shift] = ExactRational(inner[i], divisor);
            return UniPoly(std::move(c));
        };
        t.push_back({0, scaled({1}, 2, 1), std::nullopt, FixtureStatus::kMatch});
        t.push_back({1, scaled({1}, 4, 2), std::nullopt, FixtureStatus::kMatch});
        t.push_back({2, scaled({-1, 2}, 12, 2), std::nullopt, FixtureStatus::kMatch});
        t.push_back({3, scaled({2, -4, 3}, 24, 2), std::nullopt, FixtureStatus::kMatch});
        t.push_back({4, scaled({-3, 6, -5, 2}, 20, 2), std::nullopt, FixtureStatus::kMatch});
        t.push_back({5, scaled({10, -20, 17, -8, 2}, 24, 2), std::nullopt, FixtureStatus::kMatch});
        // printed inner t^2 coefficient -46584 equals the typo'd general
        // bracket at j = 1; the derived value is -2360
        t.push_back({6, scaled({-1382, 2764, -46584, 1148, -350, 60}, 840, 2),
                     scaled({-1382, 2764, -2360, 1148, -350, 60}, 840, 2),
                     FixtureStatus::kSuspectedTypo});
        // printed with a doubled t^2 prefactor
        t.push_back({7, scaled({420, -840, 718, -352, 112, -24, 3}, 48, 4),
                     scaled({420, -840, 718, -352, 112, -24, 3}, 48, 2),
                     FixtureStatus::kSuspectedTypo});
        return t;
    }();
    if (k >= table.size()) throw std::domain_error("faulhaber_printed: only k <= 7 is in the printed list");
    return table[k];
}

const BracketFixture& bracket_printed(unsigned k) {
    static const std::vector<BracketFixture> table = [] {
        std::vector<BracketFixture> t;
        {
            BracketFixture f{0, 2, 1, 1, {int_poly({1})}, {}, FixtureStatus::kMatch};
            t.push_back(std::move(f));
        }
        {
            BracketFixture f{1, 4, 2, 2, {int_poly({1})}, {}, FixtureStatus::kMatch};
            t.push_back(std::move(f));
        }
        {
            BracketFixture f{2, 12, 2, 2, {int_poly({-1}), int_poly({-1, 3})}, {}, FixtureStatus::kMatch};
            t.push_back(std::move(f));
        }
        {
            BracketFixture f{3, 24, 2, 2,
                             {int_poly({2}), int_poly({4, -8}), int_poly({2, -8, 9})},
                             {},
                             FixtureStatus::kMatch};
            t.push_back(std::move(f));
        }
        {
            BracketFixture f{4, 20, 2, 2,
                             {int_poly({-3}), int_poly({-9, 15}), int_poly({-10, 30, -25}),
                              int_poly({-3, 15, -25, 15})},
                             {},
                             FixtureStatus::kMatch};
            t.push_back(std::move(f));
        }
        {
            BracketFixture f{5, 24, 2, 2,
                             {int_poly({10}), int_poly({40, -60}), int_poly({70, -180, 127}),
                              int_poly({50, -192, 254, -120}),
                              int_poly({10, -60, 127, -120, 45})},
                             {},
                             FixtureStatus::kMatch};
            t.push_back(std::move(f));
        }
        {
            BracketFixture f{6, 840, 2, 2,
                             {int_poly({-1382}), int_poly({-6910, 9674}),
                              // printed -(24472 j^2 + 38696 j - 16584): breaks the
                              // sign pattern of every neighboring row
                              int_poly({16584, -38696, -24472}),
                              int_poly({-19348, 64022, -73416, 29890}),
                              int_poly({-9674, 44674, -76755, 59780, -18375}),
                              int_poly({-1382, 9674, -24472, 29890, -18375, 4725})},
                             {},
                             FixtureStatus::kSuspectedTypo};
            f.derived_override.emplace(2u, int_poly({-16584, 38696, -24472}));
            t.push_back(std::move(f));
        }
        {
            BracketFixture f{7, 48, 2, 2,
                             {int_poly({420}), int_poly({2520, -3360}),
                              int_poly({7700, -16800, 9818}),
                              int_poly({12600, -37824, 39272, -14400}),
                              int_poly({10584, -42048, 63156, -43200, 11620}),
                              int_poly({3920, -21024, 43520, -44640, 23240, -5040}),
                              int_poly({420, -3360, 9818, -14400, 11620, -5040, 945})},
                             {},
                             FixtureStatus::kMatch};
            t.push_back(std::move(f));
        }
        return t;
    }();
    if (k >= table.size()) throw std::domain_error("bracket_printed: only k <= 7 is in the printed list");
    return table[k];
}

}  // namespace powersum::paper_tables
