#ifndef TRIDEC_ORACLE_HPP
#define TRIDEC_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tridec/decompose.hpp"
#include "tridec/polynomial.hpp"
#include "tridec/pseudo.hpp"

namespace tridec {

/// Schoolbook pseudo-division on dense coefficient lists in x, then the
/// exponent is lowered while lc(g) still divides quotient and remainder.
PseudoDivisionResult naive_prem(const Polynomial& f, const Polynomial& g, Var x);

struct LinearFactor {
    Var var;
    Rational root;
    bool operator==(const LinearFactor& o) const { return var == o.var && root == o.root; }
    bool operator<(const LinearFactor& o) const { return var != o.var ? var < o.var : root < o.root; }
};

/// Each polynomial as its distinct factors x_var - root (multiplicities and the
/// scalar dropped). A nonzero constant has no factors; zero is not allowed.
struct SplitLinearSystem {
    std::vector<std::vector<LinearFactor>> polys;
    std::size_t n = 0;
    /// Some input was the zero polynomial (satisfied everywhere).
    std::vector<bool> zero;
};

/// Rational roots of a univariate polynomial with multiplicity; nullopt when
/// it does not split over Q.
std::optional<std::vector<Rational>> rational_roots(const Polynomial& p, Var x);

/// Recognizes products of univariate linear factors; nullopt otherwise.
std::optional<SplitLinearSystem> factor_split_linear(const InputSystem& system);

/// A coordinate subspace: pinned variables, the rest free.
using SubspaceComponent = std::map<Var, Rational>;

struct SolutionDescription {
    std::vector<SubspaceComponent> components;
    std::size_t n = 0;
    /// Each component is a linear subspace of degree 1.
    std::size_t degree() const { return components.size(); }
};

/// Enumerates factor choices and keeps the minimal consistent assignments.
SolutionDescription split_linear_solve(const SplitLinearSystem& system);

struct VerificationReport {
    bool sound = true;
    bool complete = true;
    std::size_t samples_checked = 0;
    /// Points of zero-dimensional output components lying on a positive-
    /// dimensional truth component.
    std::size_t redundant_points = 0;
    /// Zero-dimensional output components with a point that is not rational.
    std::size_t unsplit_components = 0;
    std::vector<std::string> failures;
};

VerificationReport verify_decomposition(const Decomposition& decomp, const InputSystem& system,
                                        const SolutionDescription& truth, std::uint64_t seed = 1,
                                        std::size_t samples_per_component = 10);

/// Rational points of a zero-dimensional chain with leaders x_1..x_n in
/// order; nullopt when some fibre has an irrational root.
std::optional<std::vector<std::vector<Rational>>> chain_points(const std::vector<Polynomial>& chain,
                                                               const std::vector<Var>& order);

}  // namespace tridec

#endif
