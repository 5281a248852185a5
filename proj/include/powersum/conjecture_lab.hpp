#ifndef POWERSUM_CONJECTURE_LAB_HPP
#define POWERSUM_CONJECTURE_LAB_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powersum/exact.hpp"
#include "powersum/poly.hpp"

namespace powersum {

/// A falsified conjecture clause with its exact witness. Violations are
/// report content, never process aborts.
struct ConjectureViolation {
    std::string conjecture;  // "1" | "main" | "4.2" | "4.3" | "venn"
    std::string clause;
    std::vector<std::pair<std::string, std::string>> witness;  // ordered key/value
};

/// Either a value or the violations that prevented one.
template <typename T>
struct Outcome {
    std::optional<T> value;
    std::vector<ConjectureViolation> violations;
    bool ok() const { return value.has_value() && violations.empty(); }

    static Outcome success(T v) { return Outcome{std::move(v), {}}; }
    static Outcome failure(ConjectureViolation v) {
        Outcome o;
        o.violations.push_back(std::move(v));
        return o;
    }
};

/// P_k(t, x) reconstructed from exact S_{k,j}(n) samples, together with
/// the held-out (j, n) cells that confirmed it.
struct RecoveredP {
    unsigned k = 0;
    XPolynomial poly;
    std::vector<std::pair<unsigned, unsigned>> validation;
};

/// Reconstruction pipeline: samples Q(j,n) = S_{k,j}(n) 2^{k+1} / (t^{k+1} g_j(n))
/// on n = 1..k+3, j = 1..k+1+extraValidation; per n interpolates the
/// x-polynomial through j = 1..k+1 and checks the extra j's; per x-power fits
/// the t-dependence as numerator(t)/t^e with minimal e by exact linear solve
/// on n = 1..k+1 and checks the held-out n; finally re-checks the assembled
/// polynomial against every sample.
Outcome<RecoveredP> recover_P(unsigned k, unsigned extraValidation = 2,
                              unsigned parallelism = 1);

/// The sign-absorbed coefficients p_{k,0..k-1}(t) of
/// P_k(t,x) = x (p_{k,0} x^{k-1} - p_{k,1} x^{k-2} + ... + (-1)^{k-1} p_{k,k-1}),
/// i.e. p_{k,j} = (-1)^j [x^{k-j}] P_k. Empty for k = 0.
std::vector<RationalCoefficient> signed_coefficients(const RecoveredP& p);

/// The (m, l, alpha) decomposition of one r_{k,j}(t):
/// r_{k,j}(t) = sum_{q=0}^{m} alpha_q t^{2q} (t+1)^{j-3q}, j = 3m + l,
/// with every alpha strictly positive.
struct StructureFit {
    unsigned k = 0, j = 0;
    unsigned m = 0, l = 0;
    std::vector<ExactRational> alphas;
};

/// Fits p_{k,j} (the sign-absorbed coefficient) in the conjectured basis.
/// Checks the reduced denominator exponent equals j, solves the
/// overdetermined system exactly, re-checks the residual is identically
/// zero, and requires every alpha > 0.
Outcome<StructureFit> fit_structure(unsigned k, unsigned j, const RationalCoefficient& p);

/// All fits for one recovered polynomial (j = 1..k-1) plus the parameter
/// count comparison against N_k.
struct StructureReport {
    unsigned k = 0;
    std::vector<StructureFit> fits;
    unsigned alpha_count = 0;     // 1 (for p_{k,0} = k!) + sum over fits
    unsigned expected_count = 0;  // n_param_count(k)
    std::vector<ConjectureViolation> violations;
    bool ok() const { return violations.empty() && alpha_count == expected_count; }
};

StructureReport verify_structure(const RecoveredP& p);

/// Closed forms for alpha_{k,1,0}, alpha_{k,2,0}, alpha_{k,3,0},
/// alpha_{k,3,1}; valid for k >= j+1, nullopt outside.
std::optional<ExactRational> alpha_closed_form(unsigned j, unsigned q, unsigned k);

struct AlphaComparison {
    unsigned k = 0, j = 0, q = 0;
    ExactRational fitted;
    ExactRational closed;
    bool match = false;
};

struct AlphaClosedFormReport {
    unsigned k = 0;
    std::vector<AlphaComparison> comparisons;
    bool all_match() const {
        for (const auto& c : comparisons)
            if (!c.match) return false;
        return true;
    }
};

/// Compares the fitted alphas of one k against the four printed closed forms.
AlphaClosedFormReport alpha_closed_forms(const StructureReport& fits);

/// Exploratory fit of the guessed alpha_{k,j,0} = (k-j)(k+1) p_j(k) k!
/// pattern: a degree-(2j-2) polynomial in k through the available k.
/// Reported, never asserted.
struct ExploratoryAlphaFit {
    unsigned j = 0;
    bool enough_points = false;
    UniPoly p_of_k;          // meaningful only when enough_points
    bool consistent = true;  // leftover samples, when any, matched the fit
};

std::vector<ExploratoryAlphaFit> exploratory_alpha_fits(
    const std::vector<StructureReport>& reports);

/// p_{k,k-1}(t)|_{t=n(n+1)} = cK vK(n) / (n(n+1))^{k-1} with vK monic of
/// degree 2k-2, palindromic, matching the binomial formula for v_k and
/// the Bernoulli formula for c_k.
struct VennFactorization {
    unsigned k = 0;
    ExactRational cK;
    UniPoly vK;  // polynomial in n
};

Outcome<VennFactorization> extract_venn(unsigned k, const RationalCoefficient& pLast);

/// The two signed readings of p_{k,k-1}(n)|_{n=1} = -G_{2k}: the raw
/// evaluation is always positive while -G_{2k} alternates, and the
/// identity holds after restoring (-1)^{k-1}.
struct GenocchiEvalReport {
    unsigned k = 0;
    ExactRational p_at_t2;           // p_{k,k-1}(t = 2), always positive
    ExactRational signed_value;      // (-1)^{k-1} p_{k,k-1}(2)
    ExactRational tuenter_constant;  // constant term of P_k(x)/x
    ExactRational minus_genocchi;    // -G_{2k}
    bool signed_identity = false;    // signed_value == tuenter_constant == -G_{2k}
    bool plain_identity = false;     // p_at_t2 == -G_{2k} (odd k only)
};

GenocchiEvalReport genocchi_evaluation_check(const RecoveredP& p);

enum class PaperComparisonStatus { kMatch, kKnownTypo, kMismatch };

/// Comparison of one derived bracket t-coefficient (a polynomial in j)
/// against the printed display.
struct BracketCoefficientCheck {
    unsigned tPower = 0;
    UniPoly derived;  // in j
    UniPoly printed;  // in j
    PaperComparisonStatus status = PaperComparisonStatus::kMatch;
};

struct Conjecture43Entry {
    unsigned j = 0;
    UniPoly t_poly;  // S_{k,j}(n) / prod_{q=1}^{j-1}(jn+q) as a member of Q[t]
    bool big_s_match = false;
};

struct Conjecture43Report {
    unsigned k = 0;
    std::vector<Conjecture43Entry> entries;
    std::vector<BracketCoefficientCheck> bracket_checks;  // k <= 7 only
    std::vector<ConjectureViolation> violations;
    bool has_unexplained_mismatch() const {
        for (const auto& c : bracket_checks)
            if (c.status == PaperComparisonStatus::kMismatch) return true;
        return false;
    }
    bool ok() const { return violations.empty() && !has_unexplained_mismatch(); }
};

/// Checks that (t^{k+1}/2^{k+1}) P_k(t,j) j/(j-1)! clears every t
/// denominator, that the resulting member of Q[t] reproduces big_S for
/// n = 1..k+3, and (k <= 7) that the bracket coefficients match the
/// printed displays up to the known-typo fixture.
Conjecture43Report verify_conjecture43(const RecoveredP& p, unsigned jMax);

}  // namespace powersum

#endif
