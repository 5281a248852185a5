#ifndef POWERSUM_POLY_HPP
#define POWERSUM_POLY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powersum/exact.hpp"

namespace powersum {

/// Dense univariate polynomial over ExactRational, coefficients stored in
/// ascending degree. The zero polynomial is the empty coefficient list;
/// the leading coefficient of a nonzero polynomial is never zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<ExactRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(ExactRational v);
    static UniPoly monomial(std::size_t deg, ExactRational coeff = ExactRational(1));

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of x^i, zero beyond the stored degree.
    ExactRational coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : ExactRational(0);
    }
    const std::vector<ExactRational>& coeffs() const { return c_; }
    ExactRational leading() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

    UniPoly scaled(const ExactRational& s) const;
    /// Multiplication by x^e.
    UniPoly times_power(std::size_t e) const;

    /// Horner evaluation.
    ExactRational eval(const ExactRational& v) const;

    /// p(x-1) and p(x+1), exact binomial expansion.
    UniPoly shifted_down() const;
    UniPoly shifted_up() const;

    /// Substitutes another polynomial for the variable (Horner).
    UniPoly compose(const UniPoly& inner) const;

    bool divisible_by_var() const { return c_.empty() || c_[0].is_zero(); }
    /// p / x; requires a zero constant term.
    UniPoly divided_by_var() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Human-readable form, highest power first, e.g. "2*t^2 - t + 1/3".
    std::string to_string(std::string_view var) const;

private:
    void trim();
    std::vector<ExactRational> c_;
};

/// Unique polynomial of degree < #points through the given points
/// (Newton divided differences). Duplicate abscissae are a domain error.
UniPoly interpolate(const std::vector<std::pair<ExactRational, ExactRational>>& points);

/// Exact solution of A x = b (rows >= cols) by fraction-free Bareiss
/// elimination with final back-substitution in rationals. An inconsistent
/// system yields the (original) index of a failing row instead of a
/// solution; no approximate answer is ever produced. A system without a
/// unique solution on its column space is a domain error.
struct LinearSolveResult {
    std::optional<std::vector<ExactRational>> solution;
    std::optional<std::size_t> inconsistent_row;
    bool consistent() const { return solution.has_value(); }
};

LinearSolveResult solve_linear(const std::vector<std::vector<ExactRational>>& A,
                               const std::vector<ExactRational>& b);

/// numerator(t) / t^tExp in reduced form: when tExp > 0 the numerator is
/// not divisible by t, and the zero function is stored as (0, 0).
struct RationalCoefficient {
    UniPoly num;
    unsigned tExp = 0;

    bool is_zero() const { return num.is_zero(); }
    /// Evaluation at t != 0.
    ExactRational eval(const ExactRational& t) const;

    friend bool operator==(const RationalCoefficient&, const RationalCoefficient&) = default;

    std::string to_string() const;
};

/// Cancels common powers of t between num and t^e.
RationalCoefficient reduce_rational_coefficient(UniPoly num, unsigned e);

/// True iff coefficient i equals coefficient d - i for all i (d >= deg p).
bool palindrome_check(const UniPoly& p, unsigned d);

/// Polynomial in x whose coefficients are rational functions num(t)/t^e.
/// Every P_k(t, x) with k >= 1 is divisible by x (zero x^0 coefficient).
class XPolynomial {
public:
    XPolynomial() = default;
    explicit XPolynomial(std::vector<RationalCoefficient> coeffs) : c_(std::move(coeffs)) {
        trim();
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    RationalCoefficient coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : RationalCoefficient{};
    }
    const std::vector<RationalCoefficient>& coeffs() const { return c_; }

    /// Collapses P(t, x)|_{x=j} into a single reduced rational function of t.
    RationalCoefficient eval_at_x(const ExactRational& j) const;
    /// Evaluation at a specific (t, x), t != 0.
    ExactRational eval(const ExactRational& t, const ExactRational& x) const;
    /// The x-polynomial at a fixed t (t = 2 recovers the one-variable family).
    UniPoly at_t(const ExactRational& t) const;

    friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<RationalCoefficient> c_;
};

}  // namespace powersum

#endif
