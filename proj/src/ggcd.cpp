#include "tridec/ggcd.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tridec/chains.hpp"
#include "tridec/pseudo.hpp"

namespace tridec {

namespace {

bool vanishes(const Polynomial& p, std::span<const Polynomial> lambda) { return reduce(p, lambda).is_zero(); }

// Pairwise gcd; a must have an initial regular modulo lambda.
GgcdOutcome pair_gcd(std::span<const Polynomial> lambda, const Polynomial& a, const Polynomial& b, Var x) {
    if (b.is_zero()) return GgcdResult{a, a.degree_or_zero(x), a.degree_or_zero(x)};
    unsigned da = a.degree_or_zero(x), db = b.degree_or_zero(x);
    if (db == 0 || da == 0) {
        const Polynomial& c = db == 0 ? b : a;
        if (is_regular_modulo(c, lambda)) return GgcdResult{Polynomial(1), 0, 0};
        if (vanishes(c, lambda)) return GgcdResult{db == 0 ? a : b, db == 0 ? da : db, 0};
        return NotWellDefined{c, 0};
    }
    for (unsigned j = 0; j <= std::min(da, db); ++j) {
        if (j == da && j == db) break;
        Polynomial s = subresultant(j, a, b, x);
        Polynomial psc = s.coefficient(x, j);
        if (vanishes(psc, lambda)) continue;
        if (is_regular_modulo(psc, lambda)) return GgcdResult{reduce(s, lambda), j, j};
        return NotWellDefined{psc, j};
    }
    return GgcdResult{a, da, da};
}

std::size_t component_bound(std::span<const Polynomial> lambda) {
    std::size_t d = 1;
    for (const auto& g : lambda) d *= std::max(1u, g.degree_or_zero(*g.leader()));
    return d;
}

GgcdOutcome generic_gcd(std::span<const Polynomial> lambda, const std::vector<Polynomial>& family, Var x) {
    Var y = 0;
    for (const auto& g : lambda) y = std::max(y, g.variable_span());
    for (const auto& p : family) y = std::max(y, p.variable_span());
    y = std::max(y, x + 1);
    const Polynomial& a = family[0];
    Polynomial f;
    for (std::size_t k = 1; k < family.size(); ++k) f += family[k] * Polynomial::variable(y, k - 1);
    unsigned da = a.degree_or_zero(x), df = f.degree_or_zero(x);
    if (df == 0) {
        // every other member is free of x: the gcd is 1 unless all of them vanish somewhere
        return pair_gcd(lambda, a, family[1], x);
    }
    std::size_t comps = component_bound(lambda);
    for (unsigned j = 0; j <= std::min(da, df); ++j) {
        if (j == da && j == df) break;
        Polynomial s = subresultant(j, a, f, x);
        Polynomial psc = s.coefficient(x, j);
        auto ycoeffs = psc.coefficients(y);
        std::optional<Polynomial> nonzero;
        for (const auto& c : ycoeffs)
            if (!vanishes(c, lambda)) {
                nonzero = c;
                break;
            }
        if (!nonzero) continue;
        unsigned tries = psc.degree_or_zero(y) * comps + 1;
        for (unsigned t = 0; t <= tries; ++t) {
            Polynomial p0 = psc.evaluate(y, Rational(t));
            if (is_regular_modulo(p0, lambda)) return GgcdResult{reduce(s.evaluate(y, Rational(t)), lambda), j, j};
        }
        return NotWellDefined{*nonzero, j};
    }
    return GgcdResult{a, da, da};
}

}  // namespace

GgcdOutcome ggcd(std::span<const Polynomial> lambda, std::span<const Polynomial> polys, Var x, Var first_aux) {
    std::vector<Polynomial> family;
    for (const auto& p : polys) {
        Polynomial r = reduce(p, lambda);
        if (r.is_zero()) continue;
        if (r.variable_span() > first_aux) {
            for (auto& c : r.split_auxiliary(first_aux))
                if (!c.is_zero()) family.push_back(std::move(c));
        } else {
            family.push_back(std::move(r));
        }
    }
    if (family.empty()) throw std::invalid_argument("ggcd: every polynomial vanishes modulo the chain");

    // The leading member must have a regular initial in x.
    auto good_lead = [&](const Polynomial& p) {
        return p.degree_or_zero(x) == 0 ? is_regular_modulo(p, lambda)
                                        : is_regular_modulo(p.leading_coefficient(x), lambda);
    };
    if (!good_lead(family[0])) {
        auto it = std::find_if(family.begin() + 1, family.end(), good_lead);
        if (it == family.end()) {
            const Polynomial& p = family[0];
            return NotWellDefined{p.degree_or_zero(x) == 0 ? p : p.leading_coefficient(x), p.degree_or_zero(x)};
        }
        std::rotate(family.begin(), it, it + 1);
    }
    if (family[0].degree_or_zero(x) == 0) return GgcdResult{Polynomial(1), 0, 0};
    if (family.size() == 1) {
        unsigned d = family[0].degree_or_zero(x);
        return GgcdResult{family[0], d, d};
    }

    GgcdResult cur{family[0], family[0].degree_or_zero(x), family[0].degree_or_zero(x)};
    for (std::size_t k = 1; k < family.size(); ++k) {
        GgcdOutcome step = pair_gcd(lambda, cur.gcd, family[k], x);
        if (std::holds_alternative<NotWellDefined>(step)) {
            if (family.size() == 2) return step;
            return generic_gcd(lambda, family, x);
        }
        cur = std::get<GgcdResult>(std::move(step));
        if (cur.degree == 0) return GgcdResult{Polynomial(1), 0, cur.witness};
    }
    return cur;
}

}  // namespace tridec
