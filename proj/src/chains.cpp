#include "tridec/chains.hpp"

#include <stdexcept>

#include "tridec/pseudo.hpp"

namespace tridec {

void check_triangular(std::span<const Polynomial> chain) {
    std::optional<Var> prev;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        auto lead = chain[i].leader();
        if (!lead) throw std::invalid_argument("chain element " + std::to_string(i + 1) + " is constant");
        if (prev && *lead <= *prev)
            throw std::invalid_argument("chain leaders must strictly increase (element " + std::to_string(i + 1) + ")");
        prev = lead;
    }
}

bool is_normalized(std::span<const Polynomial> chain, std::size_t l) {
    for (std::size_t s = 0; s < chain.size(); ++s) {
        if (chain[s].leader() != std::optional<Var>(l + s)) return false;
        if (chain[s].initial().variable_span() > l) return false;
        for (std::size_t t = 0; t < s; ++t)
            if (chain[s].degree_or_zero(l + t) >= chain[t].degree_or_zero(l + t)) return false;
    }
    return true;
}

bool rep_membership(const Polynomial& h, std::span<const Polynomial> chain) {
    return prem_chain(h, chain).remainder.is_zero();
}

Polynomial iterated_resultant(const Polynomial& p, std::span<const Polynomial> chain) {
    // Res(g, c) = c^deg(g) for c free of the leader; the power is skipped since
    // only vanishing matters to callers and it keeps witnesses small.
    Polynomial cur = reduce(p, chain);
    for (std::size_t s = chain.size(); s-- > 0;) {
        if (cur.is_zero()) return cur;
        Var x = *chain[s].leader();
        if (!cur.involves(x)) continue;
        cur = resultant(chain[s], cur, x);
    }
    return cur;
}

bool is_regular_modulo(const Polynomial& p, std::span<const Polynomial> chain) {
    return !iterated_resultant(p, chain).is_zero();
}

bool some_aux_coefficient_regular(const Polynomial& p, std::span<const Polynomial> chain, Var first_aux) {
    for (const auto& c : p.split_auxiliary(first_aux))
        if (is_regular_modulo(c, chain)) return true;
    return false;
}

ChainCheck is_regular_chain(std::span<const Polynomial> chain) {
    check_triangular(chain);
    ChainCertificate cert;
    cert.kind = ChainKind::regular;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        Polynomial w = iterated_resultant(chain[i].initial(), chain.first(i));
        if (w.is_zero())
            return ChainRefusal{i + 1, "initial of element " + std::to_string(i + 1) + " is a zero divisor", false};
        cert.regular_witnesses.push_back(std::move(w));
    }
    return cert;
}

ChainCheck is_squarefree_chain(std::span<const Polynomial> chain) {
    ChainCheck reg = is_regular_chain(chain);
    if (std::holds_alternative<ChainRefusal>(reg)) return reg;
    ChainCertificate cert = std::get<ChainCertificate>(std::move(reg));
    for (std::size_t i = 0; i < chain.size(); ++i) {
        Var x = *chain[i].leader();
        auto below = chain.first(i);
        // Degree-0 test of the generalized gcd of g and dg/dx: the index-0
        // subresultant must be regular modulo the lower chain.
        Polynomial s0 = resultant(chain[i], derivative(chain[i], x), x);
        if (reduce(s0, below).is_zero())
            return ChainRefusal{i + 1, "element " + std::to_string(i + 1) + " is not squarefree", false};
        Polynomial w = iterated_resultant(s0, below);
        if (w.is_zero())
            return ChainRefusal{i + 1, "element " + std::to_string(i + 1) + " is squarefree only on some components",
                                true};
        cert.separant_witnesses.push_back(std::move(w));
    }
    cert.kind = ChainKind::squarefree_regular;
    return cert;
}

bool verify_certificate(const ChainCertificate& cert, std::span<const Polynomial> chain) {
    if (cert.regular_witnesses.size() != chain.size()) return false;
    auto leader_free = [&](const Polynomial& w) {
        for (const auto& g : chain)
            if (w.involves(*g.leader())) return false;
        return true;
    };
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const Polynomial& w = cert.regular_witnesses[i];
        if (w.is_zero() || !leader_free(w)) return false;
        if (w != iterated_resultant(chain[i].initial(), chain.first(i))) return false;
    }
    if (cert.kind != ChainKind::squarefree_regular) return true;
    if (cert.separant_witnesses.size() != chain.size()) return false;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const Polynomial& w = cert.separant_witnesses[i];
        if (w.is_zero() || !leader_free(w)) return false;
        Var x = *chain[i].leader();
        Polynomial s0 = resultant(chain[i], derivative(chain[i], x), x);
        if (w != iterated_resultant(s0, chain.first(i))) return false;
    }
    return true;
}

}  // namespace tridec
