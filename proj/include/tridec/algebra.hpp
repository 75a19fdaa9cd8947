#ifndef TRIDEC_ALGEBRA_HPP
#define TRIDEC_ALGEBRA_HPP

#include <span>
#include <variant>
#include <vector>

#include "tridec/chains.hpp"
#include "tridec/polynomial.hpp"

namespace tridec {

/// num/den with den != 0, common factors cancelled and den's leading term
/// coefficient scaled to 1.
struct Fraction {
    Polynomial num;
    Polynomial den{1};

    Fraction() = default;
    Fraction(Polynomial n, Polynomial d = Polynomial(1));

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.is_constant(); }
    unsigned height() const;

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);
    Fraction operator-() const;
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
};

struct AlgebraElement {
    std::vector<Fraction> coords;

    bool integral() const;
    unsigned height() const;
};

/// A(chain) over k(x_1..x_l) for a normalized regular chain with leaders
/// x_{l+1}..x_{l+m}.
struct QuotientAlgebra {
    std::vector<Polynomial> chain;
    std::size_t l = 0;
    std::vector<unsigned> degrees;
    /// Exponent tuples (a_1..a_m), graded lexicographic.
    std::vector<std::vector<unsigned>> basis;
    /// table[i][j] = coordinates of basis[i] * basis[j].
    std::vector<std::vector<std::vector<Fraction>>> table;

    std::size_t dimension() const { return basis.size(); }
    std::size_t index_of(const std::vector<unsigned>& exps) const;
    Polynomial basis_polynomial(std::size_t i) const;
    AlgebraElement one() const;
};

/// Refuses (returns the regularity refusal) when the chain is not regular.
/// Throws std::invalid_argument when the chain is not normalized for l.
std::variant<QuotientAlgebra, ChainRefusal> build_algebra(std::span<const Polynomial> chain, std::size_t l);

/// Builds or throws std::logic_error; for chains already certified.
QuotientAlgebra build_algebra_checked(std::span<const Polynomial> chain, std::size_t l);

/// Max height over numerators and denominators of the table.
unsigned gamma(const QuotientAlgebra& algebra);

/// Coordinates of the class of p (reduced with prem_chain, divided by the
/// product of initial powers).
AlgebraElement to_element(const Polynomial& p, const QuotientAlgebra& algebra);

/// Integral representative sum(coords * basis) after clearing denominators;
/// returns (polynomial, common denominator).
std::pair<Polynomial, Polynomial> to_polynomial(const AlgebraElement& a, const QuotientAlgebra& algebra);

AlgebraElement algebra_multiply(const AlgebraElement& a, const AlgebraElement& b, const QuotientAlgebra& algebra);

struct PseudoInverse {
    Polynomial fbar;
    Polynomial r;
};

struct NotInvertible {
    Polynomial determinant;  // zero
};

/// f * fbar = r modulo Rep(chain) with r a nonzero polynomial in x_1..x_l.
/// fbar comes from the adjugate of the multiplication-by-f matrix applied to
/// the coordinates of 1 and r from its determinant, both scaled by the lcm of
/// any denominators and by a sign making r's leading coefficient positive.
std::variant<PseudoInverse, NotInvertible> pinvert(const QuotientAlgebra& algebra, const Polynomial& f);

}  // namespace tridec

#endif
