#ifndef TRIDEC_PSEUDO_HPP
#define TRIDEC_PSEUDO_HPP

#include <span>
#include <vector>

#include "tridec/polynomial.hpp"

namespace tridec {

/// lc(g)^alpha * f = quotient * g + remainder with alpha minimal.
struct PseudoDivisionResult {
    unsigned alpha = 0;
    Polynomial quotient;
    Polynomial remainder;
};

/// Pseudo-division of f by g in x. Throws std::invalid_argument when deg_x(g) = 0.
/// When deg_x(f) < deg_x(g) the result is (0, 0, f).
PseudoDivisionResult prem(const Polynomial& f, const Polynomial& g, Var x);

/// Pseudo-division with the exponent fixed at deg_x(f) - deg_x(g) + 1
/// (or 0 when deg_x f < deg_x g). Cheaper; used where minimality is irrelevant.
PseudoDivisionResult prem_full(const Polynomial& f, const Polynomial& g, Var x);

/// lc(g_m)^{a_m} ... lc(g_1)^{a_1} f = sum q_s g_s + remainder.
/// alphas[s] and quotients[s] refer to chain position s (0-based, g_1 first).
struct ChainReductionTrace {
    std::vector<unsigned> alphas;
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Reduces f by g_m, then g_{m-1}, ..., g_1 using each polynomial's leader.
ChainReductionTrace prem_chain(const Polynomial& f, std::span<const Polynomial> chain);

/// Remainder only, using the fixed-exponent pseudo-division at each step.
/// Differs from prem_chain(f, chain).remainder by a product of initials.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> chain);

/// Pseudo-remainder assembled from the matrix form
/// r = g_d^d f_lower - G_0 adj(G_d) f_upper, i.e. with exponent exactly d.
/// Requires d = deg_x g >= 1 and deg_x f <= 2d - 1.
Polynomial matrix_prem(const Polynomial& f, const Polynomial& g, Var x);

/// Fraction-free determinant of a square polynomial matrix (Bareiss).
Polynomial determinant(std::vector<std::vector<Polynomial>> m);

/// j-th subresultant of f and g with respect to x (determinant-polynomial of
/// the Sylvester-derived matrix). Requires deg_x f >= 1 or deg_x g >= 1 and
/// 0 <= j <= min(deg_x f, deg_x g), excluding j = deg_x f = deg_x g.
Polynomial subresultant(unsigned j, const Polynomial& f, const Polynomial& g, Var x);

/// Coefficient of x^j in the j-th subresultant.
Polynomial principal_subresultant_coefficient(unsigned j, const Polynomial& f, const Polynomial& g, Var x);

/// Res_x(f, g), with Res(f, c) = c^{deg f} for g free of x.
Polynomial resultant(const Polynomial& f, const Polynomial& g, Var x);

}  // namespace tridec

#endif
