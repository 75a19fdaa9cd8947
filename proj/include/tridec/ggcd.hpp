#ifndef TRIDEC_GGCD_HPP
#define TRIDEC_GGCD_HPP

#include <limits>
#include <span>
#include <variant>

#include "tridec/polynomial.hpp"

namespace tridec {

struct GgcdResult {
    Polynomial gcd;
    unsigned degree = 0;
    /// Subresultant index that certified the degree.
    unsigned witness = 0;
};

struct NotWellDefined {
    /// A coefficient that is neither zero nor regular modulo the chain.
    Polynomial hint;
    unsigned index = 0;
};

using GgcdOutcome = std::variant<GgcdResult, NotWellDefined>;

/// Generalized gcd in x of polys modulo the regular chain lambda (whose
/// leaders are all below x). Every variable >= first_aux is a generic
/// parameter: a polynomial in them is split into its coefficient family.
/// The family is folded left to right; when an intermediate pair is not well
/// defined the whole family is retried as one generic combination
/// p_1 + y p_2 + y^2 p_3 + ... against the first member.
/// Throws std::invalid_argument when every member reduces to zero.
GgcdOutcome ggcd(std::span<const Polynomial> lambda, std::span<const Polynomial> polys, Var x,
                 Var first_aux = std::numeric_limits<Var>::max());

}  // namespace tridec

#endif
