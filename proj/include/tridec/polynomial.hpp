#ifndef TRIDEC_POLYNOMIAL_HPP
#define TRIDEC_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tridec {

using Rational = mpq_class;
using Integer = mpz_class;

/// Index of a variable. Index order is the variable order: x_0 < x_1 < ...
/// Auxiliary variables are allocated above every original variable.
using Var = std::size_t;

/// Exponent vector with trailing zeros trimmed, so monomials over different
/// numbers of variables compare and hash consistently.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(Var v, std::uint32_t power = 1);

    std::uint32_t operator[](Var v) const { return v < exps_.size() ? exps_[v] : 0; }
    std::size_t size() const { return exps_.size(); }
    bool is_one() const { return exps_.empty(); }
    unsigned total_degree() const;
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& other) const;
    /// Requires other | *this.
    Monomial operator/(const Monomial& other) const;
    bool divisible_by(const Monomial& other) const;
    Monomial with_exponent(Var v, std::uint32_t e) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

private:
    void trim();
    std::vector<std::uint32_t> exps_;
};

/// Lexicographic order where the highest variable is most significant.
/// Returns negative/zero/positive like strcmp.
int lex_compare(const Monomial& a, const Monomial& b);

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted lex-descending with no zero coefficients.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Polynomial variable(Var v, std::uint32_t power = 1);
    static Polynomial monomial(const Monomial& m, const Rational& c);
    /// Builds from arbitrary (possibly duplicated, possibly zero) terms.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; requires is_constant().
    Rational constant_value() const;

    /// Degree in v; nullopt for the zero polynomial.
    std::optional<unsigned> degree(Var v) const;
    /// Degree in v with the zero polynomial mapped to 0. Use only where the
    /// caller has already handled the zero case.
    unsigned degree_or_zero(Var v) const;
    std::optional<unsigned> total_degree() const;
    /// max_v deg_v(p); 0 for constants and the zero polynomial.
    unsigned height() const;
    /// Highest variable that occurs; nullopt for constants.
    std::optional<Var> leader() const;
    /// One past the highest variable index that occurs.
    std::size_t variable_span() const;
    bool involves(Var v) const;

    /// Coefficients as a univariate polynomial in v, index = power.
    std::vector<Polynomial> coefficients(Var v) const;
    /// Coefficient of v^k.
    Polynomial coefficient(Var v, unsigned k) const;
    /// Leading coefficient in v; zero polynomial for zero.
    Polynomial leading_coefficient(Var v) const;
    /// Leading coefficient in the leader (the initial); the polynomial itself for constants.
    Polynomial initial() const;
    static Polynomial from_coefficients(Var v, const std::vector<Polynomial>& coeffs);

    const Rational& leading_term_coefficient() const { return terms_.front().second; }
    const Monomial& leading_monomial() const { return terms_.front().first; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial pow(unsigned e) const;
    Polynomial mul_monomial(const Monomial& m, const Rational& c) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Substitute v := value.
    Polynomial evaluate(Var v, const Rational& value) const;
    /// Evaluate every variable; missing entries are treated as 0.
    Rational evaluate_all(const std::vector<Rational>& point) const;
    /// Rename variables: variable v becomes mapping[v]. Variables beyond the
    /// mapping keep their index.
    Polynomial rename(const std::vector<Var>& mapping) const;

    /// Divide out the rational content and make the leading coefficient positive.
    Polynomial primitive_integer() const;
    /// Scale so the lex-leading coefficient is 1.
    Polynomial monic() const;

    /// Aux-coefficients: groups terms by their exponents on variables >= first_aux.
    /// Each returned polynomial involves only variables < first_aux.
    std::vector<Polynomial> split_auxiliary(Var first_aux) const;

private:
    std::vector<Term> terms_;
};

/// Exact division; nullopt when b does not divide a. Requires b != 0.
std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b);
/// Exact division; throws std::logic_error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// k-th partial derivative.
Polynomial derivative(const Polynomial& f, Var x, unsigned k = 1);

/// Canonical gcd over Q (monic in lex order); gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Content with respect to v: gcd of the coefficients in v.
Polynomial content(const Polynomial& p, Var v);
/// p / content(p, v).
Polynomial primitive_part(const Polynomial& p, Var v);
/// Squarefree part with respect to v over the field of fractions of the other
/// variables, returned primitive in v.
Polynomial squarefree_part(const Polynomial& p, Var v);

}  // namespace tridec

#endif
