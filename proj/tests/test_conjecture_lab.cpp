#include "doctest.h"
#include "powersum/conjecture_lab.hpp"
#include "powersum/paper_tables.hpp"
#include "powersum/sequences.hpp"
#include "powersum/sum_engine.hpp"

using namespace powersum;

namespace {

UniPoly ipoly(std::vector<long> ascending) {
    std::vector<ExactRational> c;
    for (long v : ascending) c.emplace_back(v);
    return UniPoly(std::move(c));
}

const RecoveredP& recovered(unsigned k) {
    static std::vector<std::optional<RecoveredP>> cache;
    if (cache.size() <= k) cache.resize(k + 1);
    if (!cache[k]) {
        Outcome<RecoveredP> outcome = recover_P(k);
        REQUIRE(outcome.ok());
        cache[k] = std::move(*outcome.value);
    }
    return *cache[k];
}

}  // namespace

TEST_CASE("recover_P reproduces the printed list") {
    CHECK(recovered(0).poly ==
          XPolynomial({RationalCoefficient{UniPoly::constant(ExactRational(1)), 0}}));
    CHECK(recovered(1).poly ==
          XPolynomial({RationalCoefficient{}, RationalCoefficient{ipoly({1}), 0}}));
    for (unsigned k = 0; k <= 5; ++k) CHECK(recovered(k).poly == paper_tables::p_printed(k));
}

TEST_CASE("recover_P invariants") {
    for (unsigned k = 0; k <= 6; ++k) {
        const RecoveredP& p = recovered(k);
        CHECK(p.poly.degree() == static_cast<int>(k));
        if (k >= 1) CHECK(p.poly.coeff(0).is_zero());
        CHECK(p.poly.coeff(k) ==
              RationalCoefficient{
                  UniPoly::constant(ExactRational(factorial(static_cast<unsigned long>(k)))), 0});
        CHECK_FALSE(p.validation.empty());
        // P_k(2, x) is the Tuenter polynomial
        CHECK(p.poly.at_t(ExactRational(2)) == tuenter_poly(k));
    }
    CHECK_THROWS_AS(recover_P(2, 1), std::domain_error);
}

TEST_CASE("recover_P parallel evaluation is identical") {
    Outcome<RecoveredP> serial = recover_P(4, 2, 1);
    Outcome<RecoveredP> parallel = recover_P(4, 3, 4);
    REQUIRE(serial.ok());
    REQUIRE(parallel.ok());
    CHECK(serial.value->poly == parallel.value->poly);
}

TEST_CASE("signed coefficients") {
    const auto c2 = signed_coefficients(recovered(2));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] == RationalCoefficient{ipoly({2}), 0});
    CHECK(c2[1] == RationalCoefficient{ipoly({2, 2}).scaled(ExactRational(1, 3)), 1});

    // p_{4,3} = (24(t+1)^3 + 8t^2)/(5t^3)
    const auto c4 = signed_coefficients(recovered(4));
    REQUIRE(c4.size() == 4);
    CHECK(c4[3].tExp == 3);
    CHECK(c4[3].num == ipoly({24, 72, 80, 24}).scaled(ExactRational(1, 5)));

    for (unsigned k = 1; k <= 6; ++k)
        CHECK(signed_coefficients(recovered(k))[0] ==
              RationalCoefficient{
                  UniPoly::constant(ExactRational(factorial(static_cast<unsigned long>(k)))), 0});

    CHECK(signed_coefficients(recovered(0)).empty());
}

TEST_CASE("structure fits") {
    const auto c2 = signed_coefficients(recovered(2));
    Outcome<StructureFit> fit21 = fit_structure(2, 1, c2[1]);
    REQUIRE(fit21.ok());
    CHECK(fit21.value->m == 0);
    CHECK(fit21.value->l == 1);
    REQUIRE(fit21.value->alphas.size() == 1);
    CHECK(fit21.value->alphas[0] == ExactRational(2, 3));

    const auto c4 = signed_coefficients(recovered(4));
    Outcome<StructureFit> fit43 = fit_structure(4, 3, c4[3]);
    REQUIRE(fit43.ok());
    CHECK(fit43.value->m == 1);
    CHECK(fit43.value->l == 0);
    REQUIRE(fit43.value->alphas.size() == 2);
    CHECK(fit43.value->alphas[0] == ExactRational(24, 5));
    CHECK(fit43.value->alphas[1] == ExactRational(8, 5));
}

TEST_CASE("structure fit violations") {
    // wrong denominator exponent
    Outcome<StructureFit> wrongExp = fit_structure(3, 2, RationalCoefficient{ipoly({1, 1}), 1});
    CHECK_FALSE(wrongExp.ok());
    REQUIRE(wrongExp.violations.size() == 1);
    CHECK(wrongExp.violations[0].clause == "denominator exponent");

    // t^3 + 1 is not in the span of {(t+1)^3, t^2}
    Outcome<StructureFit> inconsistent =
        fit_structure(4, 3, RationalCoefficient{ipoly({1, 0, 0, 1}), 3});
    CHECK_FALSE(inconsistent.ok());
    REQUIRE(inconsistent.violations.size() == 1);
    CHECK(inconsistent.violations[0].clause == "basis fit inconsistent");

    // -(t+1) has a negative alpha
    Outcome<StructureFit> negative = fit_structure(2, 1, RationalCoefficient{ipoly({-1, -1}), 1});
    CHECK_FALSE(negative.ok());
    REQUIRE(negative.violations.size() == 1);
    CHECK(negative.violations[0].clause == "nonpositive alpha");

    CHECK_THROWS_AS(fit_structure(3, 3, RationalCoefficient{ipoly({1}), 3}), std::domain_error);
}

TEST_CASE("verify_structure counts parameters against N_k") {
    for (unsigned k = 1; k <= 7; ++k) {
        const StructureReport report = verify_structure(recovered(k));
        CHECK(report.ok());
        CHECK(report.alpha_count == n_param_count(k));
        CHECK(report.fits.size() == k - 1);
    }
}

TEST_CASE("alpha closed forms") {
    CHECK(alpha_closed_form(1, 0, 2) == ExactRational(2, 3));
    CHECK(alpha_closed_form(2, 0, 3) == ExactRational(4, 3));
    CHECK(alpha_closed_form(3, 1, 4) == ExactRational(8, 5));
    CHECK_FALSE(alpha_closed_form(1, 0, 1).has_value());
    CHECK_FALSE(alpha_closed_form(4, 0, 9).has_value());

    for (unsigned k = 2; k <= 7; ++k) {
        const AlphaClosedFormReport report = alpha_closed_forms(verify_structure(recovered(k)));
        CHECK_FALSE(report.comparisons.empty());
        CHECK(report.all_match());
    }
}

TEST_CASE("exploratory alpha fit recovers the printed patterns") {
    std::vector<StructureReport> reports;
    for (unsigned k = 1; k <= 8; ++k) reports.push_back(verify_structure(recovered(k)));
    const auto fits = exploratory_alpha_fits(reports);
    REQUIRE(fits.size() >= 3);
    CHECK(fits[0].j == 1);
    CHECK(fits[0].enough_points);
    CHECK(fits[0].consistent);
    CHECK(fits[0].p_of_k == UniPoly::constant(ExactRational(1, 9)));
    CHECK(fits[1].enough_points);
    CHECK(fits[1].consistent);
    // p_2(k) = (5k^2 + k - 3)/810
    CHECK(fits[1].p_of_k == ipoly({-3, 1, 5}).scaled(ExactRational(1, 810)));
}

TEST_CASE("venn extraction") {
    {
        const auto coeffs = signed_coefficients(recovered(2));
        Outcome<VennFactorization> v = extract_venn(2, coeffs.back());
        REQUIRE(v.ok());
        CHECK(v.value->cK == ExactRational(2, 3));
        CHECK(v.value->vK == ipoly({1, 1, 1}));
    }
    {
        const auto coeffs = signed_coefficients(recovered(3));
        Outcome<VennFactorization> v = extract_venn(3, coeffs.back());
        REQUIRE(v.ok());
        CHECK(v.value->cK == ExactRational(4, 3));
        CHECK(v.value->vK == ipoly({1, 2, 3, 2, 1}));
    }
    {
        const auto coeffs = signed_coefficients(recovered(4));
        Outcome<VennFactorization> v = extract_venn(4, coeffs.back());
        REQUIRE(v.ok());
        CHECK(v.value->cK == ExactRational(24, 5));
        const std::vector<ExactRational> expected{
            ExactRational(1),     ExactRational(3), ExactRational(19, 3), ExactRational(23, 3),
            ExactRational(19, 3), ExactRational(3), ExactRational(1)};
        CHECK(v.value->vK.coeffs() == expected);
    }
    for (unsigned k = 2; k <= 7; ++k) {
        const auto coeffs = signed_coefficients(recovered(k));
        CHECK(extract_venn(k, coeffs.back()).ok());
    }
    // a wrong denominator exponent is a structured violation
    Outcome<VennFactorization> bad = extract_venn(3, RationalCoefficient{ipoly({1, 1}), 1});
    CHECK_FALSE(bad.ok());
    CHECK(bad.violations[0].clause == "denominator exponent");
    CHECK_THROWS_AS(extract_venn(1, RationalCoefficient{ipoly({1}), 0}), std::domain_error);
}

TEST_CASE("venn coefficients are the Venn numbers for prime 2k+1") {
    for (unsigned k = 2; k <= 7; ++k) {
        const unsigned p = 2 * k + 1;
        if (!is_prime(p)) continue;
        const auto coeffs = signed_coefficients(recovered(k));
        Outcome<VennFactorization> v = extract_venn(k, coeffs.back());
        REQUIRE(v.ok());
        for (unsigned q = 1; q <= p - 2; ++q)
            CHECK(v.value->vK.coeff(2 * k - q - 1) == venn_T(p, q));
        CHECK(v.value->vK.eval(ExactRational(1)) == venn_row_sum(p));
    }
}

TEST_CASE("genocchi evaluation readings") {
    {
        const GenocchiEvalReport r = genocchi_evaluation_check(recovered(2));
        CHECK(r.p_at_t2 == ExactRational(1));
        CHECK(r.signed_value == ExactRational(-1));
        CHECK(r.tuenter_constant == ExactRational(-1));
        CHECK(r.minus_genocchi == ExactRational(-1));
        CHECK(r.signed_identity);
        CHECK_FALSE(r.plain_identity);  // equal only up to the sign (-1)^{k-1}
    }
    {
        const GenocchiEvalReport r = genocchi_evaluation_check(recovered(3));
        CHECK(r.p_at_t2 == ExactRational(3));
        CHECK(r.signed_identity);
        CHECK(r.plain_identity);
    }
    {
        const GenocchiEvalReport r = genocchi_evaluation_check(recovered(5));
        CHECK(r.p_at_t2 == ExactRational(155));
        CHECK(r.minus_genocchi == ExactRational(155));
        CHECK(r.signed_identity);
    }
    for (unsigned k = 1; k <= 7; ++k) CHECK(genocchi_evaluation_check(recovered(k)).signed_identity);
}

TEST_CASE("a perturbed polynomial is caught, not absorbed") {
    // double the x-coefficient of P_2 and run the checkers on the fake
    RecoveredP fake = recovered(2);
    std::vector<RationalCoefficient> coeffs = fake.poly.coeffs();
    coeffs[1].num = coeffs[1].num.scaled(ExactRational(2));
    fake.poly = XPolynomial(std::move(coeffs));

    const Conjecture43Report r = verify_conjecture43(fake, 4);
    CHECK_FALSE(r.violations.empty());
    CHECK(r.violations[0].clause == "big_S equality");
    CHECK(r.has_unexplained_mismatch());

    const GenocchiEvalReport g = genocchi_evaluation_check(fake);
    CHECK_FALSE(g.signed_identity);
}

TEST_CASE("conjecture 4.3 polynomiality and brackets") {
    {
        // S_{0,j}(n) = (t/2) j/(j-1)! prod(jn+q)
        const Conjecture43Report r = verify_conjecture43(recovered(0), 5);
        CHECK(r.violations.empty());
        REQUIRE(r.entries.size() == 5);
        CHECK(r.entries[0].t_poly == ipoly({0, 1}).scaled(ExactRational(1, 2)));
        REQUIRE(r.bracket_checks.size() == 1);
        CHECK(r.bracket_checks[0].status == PaperComparisonStatus::kMatch);
    }
    {
        const Conjecture43Report r = verify_conjecture43(recovered(3), 6);
        CHECK(r.violations.empty());
        CHECK_FALSE(r.has_unexplained_mismatch());
        REQUIRE(r.bracket_checks.size() == 3);
        // bracket (9j^2-8j+2)t^2 - (8j-4)t + 2
        CHECK(r.bracket_checks[2].derived == ipoly({2, -8, 9}));
        CHECK(r.bracket_checks[1].derived == ipoly({4, -8}));
        CHECK(r.bracket_checks[0].derived == ipoly({2}));
        for (const auto& b : r.bracket_checks) CHECK(b.status == PaperComparisonStatus::kMatch);
    }
    {
        const Conjecture43Report r = verify_conjecture43(recovered(6), 6);
        CHECK(r.violations.empty());
        CHECK_FALSE(r.has_unexplained_mismatch());
        REQUIRE(r.bracket_checks.size() == 6);
        CHECK(r.bracket_checks[2].status == PaperComparisonStatus::kKnownTypo);
        CHECK(r.bracket_checks[2].derived == ipoly({-16584, 38696, -24472}));
        for (unsigned row : {0u, 1u, 3u, 4u, 5u})
            CHECK(r.bracket_checks[row].status == PaperComparisonStatus::kMatch);
    }
    for (unsigned k = 0; k <= 5; ++k) {
        const Conjecture43Report r = verify_conjecture43(recovered(k), 6);
        CHECK(r.violations.empty());
        CHECK_FALSE(r.has_unexplained_mismatch());
        for (const auto& e : r.entries) CHECK(e.big_s_match);
    }
}
