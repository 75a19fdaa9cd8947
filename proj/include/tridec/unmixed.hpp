#ifndef TRIDEC_UNMIXED_HPP
#define TRIDEC_UNMIXED_HPP

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "tridec/algebra.hpp"
#include "tridec/polynomial.hpp"

namespace tridec {

/// Raised when the phi/psi selection promised well-defined gcds of given
/// degrees and the component disagrees; always a bug, never a user error.
class InternalFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct UnmixedComponent {
    std::vector<Polynomial> chain;
    QuotientAlgebra algebra;
};

struct UnmixedOutput {
    std::vector<UnmixedComponent> components;
    /// Per-leader maxima of deg_{x_{l+s}} over the output chains.
    std::vector<unsigned> leader_degrees;
};

using DegreeTuple = std::array<unsigned, 6>;

struct PhiPsiPair {
    unsigned i = 0;
    DegreeTuple v{};
    Polynomial phi;
    Polynomial psi;
};

/// phi and psi for the top element g_m of chain (leaders x_{l+1}..x_{l+m},
/// m >= 1) with the fresh variables y, z, w. Both are reduced modulo the
/// chain without g_m. S_{t,u} is the principal coefficient of the u-th
/// subresultant of g_m and the family-t combination. phi collects w^k * S_{t,u}
/// for every family t and index u < v_t (families in order, u ascending, k
/// counting up from 0); psi is the product of the six S_{t, v_t}.
PhiPsiPair phi_psi(std::span<const Polynomial> chain, std::size_t l, const Polynomial& f, const Polynomial& h,
                   unsigned i, const DegreeTuple& v, Var y, Var z, Var w);

/// q for one component (lambda, its algebra) of the recursive call: six
/// generalized gcds, pseudo-inverted initials, p1 = d1 d3 d5^2,
/// p2 = d2^2 d4 d6 and the pseudo-quotient of p1 by p2, reduced modulo
/// lambda. Throws InternalFault when a gcd is not well defined or has a
/// degree other than v_t.
Polynomial compute_q(const QuotientAlgebra& lambda, const Polynomial& g, const Polynomial& f, const Polynomial& h,
                     unsigned i, const DegreeTuple& v, Var first_aux);

/// The recursive unmixed procedure for a normalized regular chain with l free
/// variables. f and h may involve auxiliary variables, which are all the
/// variables >= first_aux (first_aux must be >= l + m). The output chains
/// are squarefree regular and sorted canonically.
UnmixedOutput unmixed(std::span<const Polynomial> chain, std::size_t l, const Polynomial& f, const Polynomial& h,
                      Var first_aux);

/// Total order used to sort chains and polynomials in outputs.
int compare_polynomials(const Polynomial& a, const Polynomial& b);
bool chain_less(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

}  // namespace tridec

#endif
