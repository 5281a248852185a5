#ifndef POWERSUM_EXACT_HPP
#define POWERSUM_EXACT_HPP

#include <gmp.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace powersum {

/// Thrown when an internal consistency condition that must never fail does.
/// Maps to CLI exit code 3.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Arbitrary-precision signed integer with value semantics.
/// Zero has a unique representation and values round-trip losslessly
/// through the decimal string encoding "-?[0-9]+".
class ExactInteger {
public:
    ExactInteger() { mpz_init(z_); }
    ExactInteger(long v) { mpz_init_set_si(z_, v); }
    ExactInteger(const ExactInteger& o) { mpz_init_set(z_, o.z_); }
    ExactInteger(ExactInteger&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    ExactInteger& operator=(const ExactInteger& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    ExactInteger& operator=(ExactInteger&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~ExactInteger() { mpz_clear(z_); }

    /// Parses the canonical decimal encoding; rejects anything outside
    /// the grammar (leading '+', whitespace, "-0" is accepted as 0).
    static std::optional<ExactInteger> parse(std::string_view s);
    std::string to_string() const;

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_negative() const { return mpz_sgn(z_) < 0; }
    bool is_odd() const { return mpz_odd_p(z_) != 0; }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const;

    ExactInteger operator-() const;
    ExactInteger abs() const;

    ExactInteger& operator+=(const ExactInteger& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    ExactInteger& operator-=(const ExactInteger& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    ExactInteger& operator*=(const ExactInteger& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    friend ExactInteger operator+(ExactInteger a, const ExactInteger& b) { return a += b; }
    friend ExactInteger operator-(ExactInteger a, const ExactInteger& b) { return a -= b; }
    friend ExactInteger operator*(ExactInteger a, const ExactInteger& b) { return a *= b; }

    /// Exact division; throws internal_error if o does not divide *this.
    ExactInteger divexact(const ExactInteger& o) const;

    friend bool operator==(const ExactInteger& a, const ExactInteger& b) {
        return mpz_cmp(a.z_, b.z_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactInteger& a, const ExactInteger& b) {
        const int c = mpz_cmp(a.z_, b.z_);
        return c <=> 0;
    }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

ExactInteger pow(const ExactInteger& base, unsigned long exponent);
ExactInteger gcd(const ExactInteger& a, const ExactInteger& b);

/// binom(n, k) with the zero-extension convention: 0 when k < 0 or k > n.
/// Negative n is a domain error.
ExactInteger binomial(const ExactInteger& n, const ExactInteger& k);
ExactInteger binomial(long n, long k);

/// n!; negative n is a domain error.
ExactInteger factorial(const ExactInteger& n);
ExactInteger factorial(unsigned long n);

/// Normalized rational: gcd(|num|, den) = 1 and den > 0 after every
/// operation. String encoding "-?[0-9]+(/[0-9]+)?", denominator omitted
/// when it is 1 and the sign carried by the numerator.
class ExactRational {
public:
    ExactRational() { mpq_init(q_); }
    ExactRational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    ExactRational(long num, long den);
    ExactRational(const ExactInteger& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    ExactRational(const ExactInteger& num, const ExactInteger& den);
    ExactRational(const ExactRational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    ExactRational(ExactRational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    ExactRational& operator=(const ExactRational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    ExactRational& operator=(ExactRational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~ExactRational() { mpq_clear(q_); }

    static std::optional<ExactRational> parse(std::string_view s);
    std::string to_string() const;

    ExactInteger numerator() const;
    ExactInteger denominator() const;
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_positive() const { return mpq_sgn(q_) > 0; }
    bool is_negative() const { return mpq_sgn(q_) < 0; }

    ExactRational operator-() const;
    ExactRational inverse() const;

    ExactRational& operator+=(const ExactRational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    ExactRational& operator-=(const ExactRational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    ExactRational& operator*=(const ExactRational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    /// Integer power; negative exponents invert (zero base is a domain error).
    ExactRational pow(long e) const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = mpq_cmp(a.q_, b.q_);
        return c <=> 0;
    }

    mpq_srcptr raw() const { return q_; }

private:
    mpq_t q_;
};

}  // namespace powersum

#endif
