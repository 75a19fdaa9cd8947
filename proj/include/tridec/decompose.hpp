#ifndef TRIDEC_DECOMPOSE_HPP
#define TRIDEC_DECOMPOSE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tridec/algebra.hpp"
#include "tridec/instrument.hpp"
#include "tridec/polynomial.hpp"

namespace tridec {

/// f_0..f_r in x_1..x_n (variables 0..n-1).
struct InputSystem {
    std::vector<Polynomial> polys;
    std::size_t n = 0;
};

/// Variable order used for an index set: the free variables first, then the
/// leaders, each ascending. order[p] is the original variable at position p.
std::vector<Var> order_for(const std::vector<Var>& free, std::size_t n);
/// Moves p into (to_local) or out of (to_original) the positions of order.
/// Variables >= order.size() are untouched.
Polynomial to_local(const Polynomial& p, const std::vector<Var>& order);
Polynomial to_original(const Polynomial& p, const std::vector<Var>& order);

/// A chain attached to an index set; polynomials in original variables,
/// ordered by their leader position in order_for(free, n).
struct IndexedChain {
    std::vector<Var> free;
    std::vector<Polynomial> chain;
};

struct AbsentChain {
    std::vector<Var> free;
    std::string reason;
};

struct CandidateFamily {
    std::vector<IndexedChain> chains;
    std::vector<AbsentChain> absent;
};

/// One chain per proper index set, built by iterated-resultant elimination of
/// the non-leader variables. Each element involves only the free variables
/// and its own leader. Index sets where elimination degenerates are absent.
CandidateFamily candidate_chains(const InputSystem& system, std::uint64_t seed = 1);

/// f_0 + f_1 y + ... + f_r y^r with y = variable n.
Polynomial combine_input(const InputSystem& system);

/// count integer linear combinations of the inputs, pseudo-random from seed.
/// Seed 0 is reserved for the identity rows (then all-ones rows past r + 1).
InputSystem generic_combination(const InputSystem& system, std::size_t count, std::uint64_t seed);
/// Explicit coefficient rows, one output polynomial per row.
InputSystem generic_combination(const InputSystem& system, const std::vector<std::vector<Rational>>& rows);

/// Squarefree part over all variables (product of the distinct irreducible
/// factors up to a scalar), made primitive over the integers.
Polynomial radical_part(const Polynomial& p);

struct DecompositionComponent {
    std::vector<Var> free;
    /// Position -> original variable, as in order_for.
    std::vector<Var> order;
    /// In original variables.
    std::vector<Polynomial> chain;
    /// Built over the local (permuted) coordinates.
    QuotientAlgebra algebra;
};

struct DecomposeOptions {
    std::uint64_t seed = 1;
    /// Replaces candidate_chains when set.
    std::optional<std::vector<IndexedChain>> bypass;
};

struct Decomposition {
    std::vector<DecompositionComponent> components;
    CandidateFamily family;
    /// Per-index-set failures that did not stop the others.
    std::vector<std::string> failures;
    /// How many of the failures were internal-consistency faults.
    std::size_t internal_faults = 0;
    /// Input contained a nonzero constant: the zero set is empty.
    bool inconsistent = false;
    Measurements measurements;
};

/// Throws std::invalid_argument when every input is zero or n is too small
/// for the variables used.
Decomposition triangular_decompose(const InputSystem& system, const DecomposeOptions& options = {});

/// rep_membership of f in the component's chain, in its own variable order.
bool component_contains(const DecompositionComponent& c, const Polynomial& f);

}  // namespace tridec

#endif
