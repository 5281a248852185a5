#include "powersum/poly.hpp"

#include <set>
#include <sstream>

namespace powersum {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(ExactRational v) {
    std::vector<ExactRational> c;
    c.push_back(std::move(v));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monomial(std::size_t deg, ExactRational coeff) {
    std::vector<ExactRational> c(deg + 1, ExactRational(0));
    c[deg] = std::move(coeff);
    return UniPoly(std::move(c));
}

ExactRational UniPoly::leading() const {
    return c_.empty() ? ExactRational(0) : c_.back();
}

UniPoly UniPoly::operator-() const {
    std::vector<ExactRational> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(-v);
    return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ExactRational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ExactRational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<ExactRational> c(a.c_.size() + b.c_.size() - 1, ExactRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const ExactRational& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<ExactRational> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v * s);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::times_power(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    std::vector<ExactRational> c(c_.size() + e, ExactRational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + e] = c_[i];
    return UniPoly(std::move(c));
}

ExactRational UniPoly::eval(const ExactRational& v) const {
    ExactRational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
}

namespace {

UniPoly shifted_by(const std::vector<ExactRational>& c, long delta) {
    // p(x + delta) via binomial expansion of each monomial
    std::vector<ExactRational> out(c.size(), ExactRational(0));
    const ExactRational d(delta);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        ExactRational dpow(1);
        for (std::size_t m = 0; m <= i; ++m) {
            // coefficient of x^{i-m}: binom(i, m) * delta^m * c_i
            out[i - m] += c[i] * ExactRational(binomial(static_cast<long>(i), static_cast<long>(m))) * dpow;
            dpow *= d;
        }
    }
    return UniPoly(std::move(out));
}

}  // namespace

UniPoly UniPoly::shifted_down() const { return shifted_by(c_, -1); }
UniPoly UniPoly::shifted_up() const { return shifted_by(c_, 1); }

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * inner;
        acc += UniPoly::constant(c_[i]);
    }
    return acc;
}

UniPoly UniPoly::divided_by_var() const {
    if (is_zero()) return UniPoly();
    if (!c_[0].is_zero()) throw std::domain_error("divided_by_var: nonzero constant term");
    std::vector<ExactRational> c(c_.begin() + 1, c_.end());
    return UniPoly(std::move(c));
}

std::string UniPoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const ExactRational& v = c_[i];
        if (v.is_zero()) continue;
        const ExactRational a = v.is_negative() ? -v : v;
        if (first) {
            if (v.is_negative()) os << "-";
            first = false;
        } else {
            os << (v.is_negative() ? " - " : " + ");
        }
        const bool unit = a == ExactRational(1);
        if (i == 0) {
            os << a.to_string();
        } else {
            if (!unit) os << a.to_string() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly interpolate(const std::vector<std::pair<ExactRational, ExactRational>>& points) {
    if (points.empty()) throw std::domain_error("interpolate: no points");
    {
        std::set<std::string> seen;
        for (const auto& [x, y] : points)
            if (!seen.insert(x.to_string()).second)
                throw std::domain_error("interpolate: duplicate abscissa " + x.to_string());
    }
    const std::size_t n = points.size();
    // Newton divided differences; diff[i] holds f[x_i, ..., x_{i+level}]
    std::vector<ExactRational> diff;
    diff.reserve(n);
    for (const auto& p : points) diff.push_back(p.second);
    std::vector<ExactRational> newton;
    newton.reserve(n);
    newton.push_back(diff[0]);
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i)
            diff[i] = (diff[i + 1] - diff[i]) / (points[i + level].first - points[i].first);
        newton.push_back(diff[0]);
    }
    // expand sum_l newton[l] * prod_{i<l} (x - x_i)
    UniPoly result = UniPoly::constant(newton[0]);
    UniPoly basis = UniPoly::constant(ExactRational(1));
    for (std::size_t l = 1; l < n; ++l) {
        basis = basis * UniPoly(std::vector<ExactRational>{-points[l - 1].first, ExactRational(1)});
        result += basis.scaled(newton[l]);
    }
    return result;
}

LinearSolveResult solve_linear(const std::vector<std::vector<ExactRational>>& A,
                               const std::vector<ExactRational>& b) {
    const std::size_t rows = A.size();
    if (rows == 0 || b.size() != rows) throw std::domain_error("solve_linear: bad shape");
    const std::size_t cols = A[0].size();
    for (const auto& row : A)
        if (row.size() != cols) throw std::domain_error("solve_linear: ragged matrix");
    if (rows < cols) throw std::domain_error("solve_linear: underdetermined system");

    // Scale each augmented row to integers (lcm of denominators).
    std::vector<std::vector<ExactInteger>> M(rows, std::vector<ExactInteger>(cols + 1));
    std::vector<std::size_t> origin(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        origin[i] = i;
        ExactInteger lcm(1);
        auto fold = [&lcm](const ExactRational& v) {
            const ExactInteger d = v.denominator();
            lcm = lcm.divexact(gcd(lcm, d)) * d;
        };
        for (const auto& v : A[i]) fold(v);
        fold(b[i]);
        for (std::size_t jcol = 0; jcol < cols; ++jcol) {
            const ExactRational s = A[i][jcol] * ExactRational(lcm);
            M[i][jcol] = s.numerator();
        }
        M[i][cols] = (b[i] * ExactRational(lcm)).numerator();
    }

    // Fraction-free Bareiss elimination over the first `cols` columns.
    ExactInteger prev(1);
    for (std::size_t s = 0; s < cols; ++s) {
        std::size_t pivot = s;
        while (pivot < rows && M[pivot][s].is_zero()) ++pivot;
        if (pivot == rows) throw std::domain_error("solve_linear: rank-deficient system");
        if (pivot != s) {
            std::swap(M[pivot], M[s]);
            std::swap(origin[pivot], origin[s]);
        }
        for (std::size_t i = s + 1; i < rows; ++i) {
            for (std::size_t jcol = s + 1; jcol <= cols; ++jcol)
                M[i][jcol] = (M[i][jcol] * M[s][s] - M[i][s] * M[s][jcol]).divexact(prev);
            M[i][s] = ExactInteger(0);
        }
        prev = M[s][s];
    }

    // Extra rows must have reduced to 0 = 0; a nonzero residual is the
    // inconsistency witness.
    for (std::size_t i = cols; i < rows; ++i)
        if (!M[i][cols].is_zero()) return LinearSolveResult{std::nullopt, origin[i]};

    std::vector<ExactRational> x(cols, ExactRational(0));
    for (std::size_t i = cols; i-- > 0;) {
        ExactRational acc(M[i][cols]);
        for (std::size_t jcol = i + 1; jcol < cols; ++jcol)
            acc -= ExactRational(M[i][jcol]) * x[jcol];
        x[i] = acc / ExactRational(M[i][i]);
    }
    return LinearSolveResult{std::move(x), std::nullopt};
}

ExactRational RationalCoefficient::eval(const ExactRational& t) const {
    if (t.is_zero()) throw std::domain_error("RationalCoefficient::eval at t = 0");
    return num.eval(t) / t.pow(static_cast<long>(tExp));
}

std::string RationalCoefficient::to_string() const {
    if (tExp == 0) return num.to_string("t");
    return "(" + num.to_string("t") + ")/t" + (tExp == 1 ? "" : "^" + std::to_string(tExp));
}

RationalCoefficient reduce_rational_coefficient(UniPoly num, unsigned e) {
    if (num.is_zero()) return RationalCoefficient{UniPoly(), 0};
    while (e > 0 && num.divisible_by_var()) {
        num = num.divided_by_var();
        --e;
    }
    return RationalCoefficient{std::move(num), e};
}

bool palindrome_check(const UniPoly& p, unsigned d) {
    if (p.degree() > static_cast<int>(d)) throw std::domain_error("palindrome_check: d below degree");
    for (unsigned i = 0; i <= d; ++i)
        if (!(p.coeff(i) == p.coeff(d - i))) return false;
    return true;
}

void XPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RationalCoefficient XPolynomial::eval_at_x(const ExactRational& j) const {
    unsigned maxExp = 0;
    for (const auto& c : c_)
        if (!c.is_zero() && c.tExp > maxExp) maxExp = c.tExp;
    UniPoly total;
    ExactRational jpow(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero())
            total += c_[i].num.times_power(maxExp - c_[i].tExp).scaled(jpow);
        jpow *= j;
    }
    return reduce_rational_coefficient(std::move(total), maxExp);
}

ExactRational XPolynomial::eval(const ExactRational& t, const ExactRational& x) const {
    ExactRational acc(0);
    ExactRational xpow(1);
    for (const auto& c : c_) {
        if (!c.is_zero()) acc += c.eval(t) * xpow;
        xpow *= x;
    }
    return acc;
}

UniPoly XPolynomial::at_t(const ExactRational& t) const {
    std::vector<ExactRational> c;
    c.reserve(c_.size());
    for (const auto& rc : c_) c.push_back(rc.is_zero() ? ExactRational(0) : rc.eval(t));
    return UniPoly(std::move(c));
}

std::string XPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << c_[i].to_string() << "]";
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace powersum
