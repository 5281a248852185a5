#include "powersum/exact.hpp"

#include <cstdlib>

namespace powersum {

namespace {

bool valid_decimal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

std::optional<ExactInteger> ExactInteger::parse(std::string_view s) {
    if (!valid_decimal(s)) return std::nullopt;
    ExactInteger r;
    if (mpz_set_str(r.z_, std::string(s).c_str(), 10) != 0) return std::nullopt;
    return r;
}

std::string ExactInteger::to_string() const {
    char* buf = mpz_get_str(nullptr, 10, z_);
    std::string s(buf);
    std::free(buf);
    return s;
}

long ExactInteger::to_long() const {
    if (!fits_long()) throw internal_error("ExactInteger::to_long: value out of range");
    return mpz_get_si(z_);
}

ExactInteger ExactInteger::operator-() const {
    ExactInteger r;
    mpz_neg(r.z_, z_);
    return r;
}

ExactInteger ExactInteger::abs() const {
    ExactInteger r;
    mpz_abs(r.z_, z_);
    return r;
}

ExactInteger ExactInteger::divexact(const ExactInteger& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    ExactInteger q, r;
    mpz_tdiv_qr(q.z_, r.z_, z_, o.z_);
    if (!r.is_zero()) throw internal_error("divexact: operands not divisible");
    return q;
}

ExactInteger pow(const ExactInteger& base, unsigned long exponent) {
    ExactInteger r;
    mpz_pow_ui(r.raw(), base.raw(), exponent);
    return r;
}

ExactInteger gcd(const ExactInteger& a, const ExactInteger& b) {
    ExactInteger r;
    mpz_gcd(r.raw(), a.raw(), b.raw());
    return r;
}

ExactInteger binomial(const ExactInteger& n, const ExactInteger& k) {
    if (n.is_negative()) throw std::domain_error("binomial: negative upper index");
    if (k.is_negative() || k > n) return ExactInteger(0);
    if (!k.fits_long()) throw internal_error("binomial: lower index out of range");
    ExactInteger r;
    mpz_bin_ui(r.raw(), n.raw(), static_cast<unsigned long>(k.to_long()));
    return r;
}

ExactInteger binomial(long n, long k) { return binomial(ExactInteger(n), ExactInteger(k)); }

ExactInteger factorial(const ExactInteger& n) {
    if (n.is_negative()) throw std::domain_error("factorial: negative argument");
    if (!n.fits_long()) throw internal_error("factorial: argument out of range");
    return factorial(static_cast<unsigned long>(n.to_long()));
}

ExactInteger factorial(unsigned long n) {
    ExactInteger r;
    mpz_fac_ui(r.raw(), n);
    return r;
}

ExactRational::ExactRational(long num, long den)
    : ExactRational(ExactInteger(num), ExactInteger(den)) {}

ExactRational::ExactRational(const ExactInteger& num, const ExactInteger& den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

std::optional<ExactRational> ExactRational::parse(std::string_view s) {
    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto num = ExactInteger::parse(s);
        if (!num) return std::nullopt;
        return ExactRational(*num);
    }
    auto num = ExactInteger::parse(s.substr(0, slash));
    auto den = ExactInteger::parse(s.substr(slash + 1));
    // the grammar forbids a sign on the denominator
    if (!num || !den || den->is_negative() || den->is_zero()) return std::nullopt;
    return ExactRational(*num, *den);
}

std::string ExactRational::to_string() const {
    char* buf = mpq_get_str(nullptr, 10, q_);
    std::string s(buf);
    std::free(buf);
    return s;
}

ExactInteger ExactRational::numerator() const {
    ExactInteger r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
}

ExactInteger ExactRational::denominator() const {
    ExactInteger r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
}

ExactRational ExactRational::operator-() const {
    ExactRational r;
    mpq_neg(r.q_, q_);
    return r;
}

ExactRational ExactRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    ExactRational r;
    mpq_inv(r.q_, q_);
    return r;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

ExactRational ExactRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ExactRational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
    // gcd(num, den) = 1 is preserved by powering
    return r;
}

}  // namespace powersum
