#ifndef TRIDEC_CHAINS_HPP
#define TRIDEC_CHAINS_HPP

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tridec/polynomial.hpp"

namespace tridec {

/// Throws std::invalid_argument unless leaders strictly increase and no
/// element is constant.
void check_triangular(std::span<const Polynomial> chain);

/// Leaders are exactly x_{l+1}, ..., x_{l+m}, every initial lies in
/// k[x_1..x_l] and each g_s is reduced modulo g_1..g_{s-1}.
bool is_normalized(std::span<const Polynomial> chain, std::size_t l);

/// prem(h, chain) == 0.
bool rep_membership(const Polynomial& h, std::span<const Polynomial> chain);

/// Res_{lead g_1}(g_1, ... Res_{lead g_m}(g_m, p) ...). Variables above the
/// chain (auxiliaries) are carried along as coefficients.
Polynomial iterated_resultant(const Polynomial& p, std::span<const Polynomial> chain);

/// p is a non-zero-divisor modulo Rep(chain), tested by a nonzero iterated
/// resultant. Meant for regular chains.
bool is_regular_modulo(const Polynomial& p, std::span<const Polynomial> chain);

/// p vanishes modulo every associated prime when all of its coefficients in
/// the variables >= first_aux reduce to zero; this is just rep_membership.
/// Some aux-coefficient is regular means p is nonzero modulo every prime.
bool some_aux_coefficient_regular(const Polynomial& p, std::span<const Polynomial> chain, Var first_aux);

enum class ChainKind { triangular, regular, squarefree_regular };

struct ChainCertificate {
    ChainKind kind = ChainKind::triangular;
    /// regular_witnesses[i] = iterated resultant of lc(g_{i+1}) modulo g_1..g_i.
    std::vector<Polynomial> regular_witnesses;
    /// separant_witnesses[i] = iterated resultant of Res(g_{i+1}, dg_{i+1}) modulo g_1..g_i.
    std::vector<Polynomial> separant_witnesses;
};

struct ChainRefusal {
    std::size_t level = 0;  // 1-based index of the offending element
    std::string reason;
    bool splitting_required = false;
};

using ChainCheck = std::variant<ChainCertificate, ChainRefusal>;

ChainCheck is_regular_chain(std::span<const Polynomial> chain);
ChainCheck is_squarefree_chain(std::span<const Polynomial> chain);

/// Re-derives every witness of a certificate and checks it is nonzero and
/// free of the chain's leaders.
bool verify_certificate(const ChainCertificate& cert, std::span<const Polynomial> chain);

}  // namespace tridec

#endif
