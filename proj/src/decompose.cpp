#include "tridec/decompose.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tridec/chains.hpp"
#include "tridec/pseudo.hpp"
#include "tridec/unmixed.hpp"

namespace tridec {

std::vector<Var> order_for(const std::vector<Var>& free, std::size_t n) {
    std::vector<Var> order(free.begin(), free.end());
    std::sort(order.begin(), order.end());
    for (Var v = 0; v < n; ++v)
        if (!std::binary_search(free.begin(), free.end(), v)) order.push_back(v);
    return order;
}

Polynomial to_local(const Polynomial& p, const std::vector<Var>& order) {
    std::vector<Var> inv(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) inv[order[pos]] = pos;
    return p.rename(inv);
}

Polynomial to_original(const Polynomial& p, const std::vector<Var>& order) { return p.rename(order); }

Polynomial combine_input(const InputSystem& system) {
    Polynomial f;
    for (std::size_t j = 0; j < system.polys.size(); ++j)
        f += j == 0 ? system.polys[j] : system.polys[j] * Polynomial::variable(system.n, j);
    return f;
}

InputSystem generic_combination(const InputSystem& system, const std::vector<std::vector<Rational>>& rows) {
    InputSystem out{{}, system.n};
    for (const auto& row : rows) {
        Polynomial acc;
        for (std::size_t j = 0; j < row.size() && j < system.polys.size(); ++j)
            if (row[j] != 0) acc += system.polys[j] * Polynomial(row[j]);
        out.polys.push_back(std::move(acc));
    }
    return out;
}

InputSystem generic_combination(const InputSystem& system, std::size_t count, std::uint64_t seed) {
    std::size_t r1 = system.polys.size();
    std::vector<std::vector<Rational>> rows(count, std::vector<Rational>(r1, 0));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(1, 9);
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t j = 0; j < r1; ++j) {
            if (seed == 0) rows[k][j] = k < r1 ? (j == k ? 1 : 0) : 1;
            else rows[k][j] = coef(rng);
        }
    return generic_combination(system, rows);
}

Polynomial radical_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    auto lead = p.leader();
    if (!lead) return Polynomial(1);
    Var v = *lead;
    Polynomial c = content(p, v);
    Polynomial pp = divide_exact(p, c);
    return (squarefree_part(pp, v) * radical_part(c)).primitive_integer();
}

namespace {

std::string describe(const std::vector<Var>& free) {
    std::string s = "{";
    for (std::size_t k = 0; k < free.size(); ++k) s += (k ? "," : "") + std::string("x") + std::to_string(free[k] + 1);
    return s + "}";
}

Polynomial combination(const std::vector<Polynomial>& ps, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(1, 9);
    Polynomial acc;
    for (const auto& p : ps) acc += p * Polynomial(Rational(coef(rng)));
    return acc;
}

// One elimination step: every returned polynomial is free of v and vanishes
// wherever the qualifying components of S do (see candidate_chains).
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& S, Var v, std::mt19937_64& rng) {
    std::vector<Polynomial> with_v, out;
    for (const auto& p : S) (p.involves(v) ? with_v : out).push_back(p);
    if (with_v.empty()) return out;

    Polynomial g = with_v[0];
    for (std::size_t k = 1; k < with_v.size(); ++k) g = gcd(g, with_v[k]);
    auto pair_resultant = [&](const std::vector<Polynomial>& ps) -> Polynomial {
        if (ps.size() == 2) return resultant(ps[0], ps[1], v);
        for (int attempt = 0; attempt < 5; ++attempt) {
            Polynomial r = resultant(combination(ps, rng), combination(ps, rng), v);
            if (!r.is_zero()) return r;
        }
        return {};
    };

    if (!g.involves(v)) {
        Polynomial r = with_v.size() >= 2 ? pair_resultant(with_v) : Polynomial();
        if (!r.is_zero()) out.push_back(radical_part(r));
        return out;
    }
    // A common factor involving v: the remaining members already constrain
    // every component, so only the factor-free case needs a fallback.
    if (!out.empty()) return out;
    // Nothing else is known. Project the singular locus of the common factor,
    // which contains the crossings with the cofactors' zero sets.
    Polynomial c = content(g, v);
    Polynomial h = c * squarefree_part(divide_exact(g, c), v);
    Polynomial rg = resultant(h, derivative(h, v), v);
    std::vector<Polynomial> cof_v;
    Polynomial cof_free(1);
    for (const auto& p : with_v) {
        Polynomial q = divide_exact(p, g);
        if (q.is_constant()) {
            cof_free = Polynomial(1);
            cof_v.clear();
            break;
        }
        if (q.involves(v)) cof_v.push_back(q);
        else cof_free = q;
    }
    Polynomial rc = cof_free;
    if (cof_v.size() >= 2 && cof_free.is_constant()) rc = pair_resultant(cof_v);
    Polynomial r = rg * rc;
    if (!r.is_zero() && !r.is_constant()) out.push_back(radical_part(r));
    return out;
}

std::optional<std::vector<Polynomial>> index_set_chain(const std::vector<Polynomial>& local, std::size_t l,
                                                       std::size_t n, std::mt19937_64& rng, std::string& why) {
    std::vector<Polynomial> chain;
    for (Var p = l; p < n; ++p) {
        std::vector<Polynomial> S = local;
        for (Var v = n; v-- > l;) {
            if (v == p) continue;
            S = eliminate(S, v, rng);
            if (S.empty()) break;
        }
        Polynomial e;
        for (const auto& s : S) {
            if (!s.involves(p)) {
                // a nonzero member in the free variables alone: no component
                // can be free over them
                why = "elimination left a polynomial free of x" + std::to_string(p + 1);
                return std::nullopt;
            }
            e = e.is_zero() ? s : gcd(e, s);
        }
        if (e.is_zero() || !e.involves(p)) {
            why = "no eliminant with positive degree in leader position " + std::to_string(p + 1);
            return std::nullopt;
        }
        chain.push_back(radical_part(e));
    }
    return chain;
}

bool all_zero(const std::vector<Polynomial>& ps) {
    return std::all_of(ps.begin(), ps.end(), [](const Polynomial& p) { return p.is_zero(); });
}

void check_variables(const InputSystem& system) {
    for (const auto& p : system.polys)
        if (p.variable_span() > system.n) throw std::invalid_argument("input uses variables beyond x_n");
}

}  // namespace

CandidateFamily candidate_chains(const InputSystem& system, std::uint64_t seed) {
    check_variables(system);
    std::size_t n = system.n;
    std::vector<Polynomial> inputs;
    for (const auto& p : system.polys)
        if (!p.is_zero()) inputs.push_back(p);
    CandidateFamily family;
    std::mt19937_64 rng(seed);
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t(1) << n); ++mask) {
        std::vector<Var> free;
        for (Var v = 0; v < n; ++v)
            if (mask >> v & 1) free.push_back(v);
        auto order = order_for(free, n);
        std::vector<Polynomial> local;
        for (const auto& p : inputs) local.push_back(to_local(p, order));
        std::string why;
        auto chain = index_set_chain(local, free.size(), n, rng, why);
        if (!chain) {
            family.absent.push_back({free, why});
            continue;
        }
        for (auto& g : *chain) g = to_original(g, order);
        family.chains.push_back({free, std::move(*chain)});
    }
    return family;
}

bool component_contains(const DecompositionComponent& c, const Polynomial& f) {
    std::vector<Polynomial> local;
    for (const auto& g : c.chain) local.push_back(to_local(g, c.order));
    return rep_membership(to_local(f, c.order), local);
}

Decomposition triangular_decompose(const InputSystem& system, const DecomposeOptions& options) {
    if (system.polys.empty() || all_zero(system.polys)) throw std::invalid_argument("every input polynomial is zero");
    check_variables(system);
    Decomposition out;
    for (const auto& p : system.polys)
        if (p.is_constant() && !p.is_zero()) {
            out.inconsistent = true;
            return out;
        }
    Recorder recorder(out.measurements);
    std::size_t n = system.n;
    out.family = options.bypass ? CandidateFamily{*options.bypass, {}} : candidate_chains(system, options.seed);
    Polynomial f = combine_input(system);

    for (const auto& ic : out.family.chains) {
        std::vector<Var> free = ic.free;
        std::sort(free.begin(), free.end());
        auto order = order_for(free, n);
        std::size_t l = free.size();
        std::vector<Polynomial> local;
        for (const auto& g : ic.chain) local.push_back(to_local(g, order));
        try {
            if (local.size() + l != n || !is_normalized(local, l))
                throw std::invalid_argument("chain is not normalized for its index set");
            auto res = unmixed(local, l, to_local(f, order), Polynomial(1), n);
            for (auto& comp : res.components) {
                DecompositionComponent dc;
                dc.free = free;
                dc.order = order;
                for (const auto& g : comp.chain) dc.chain.push_back(to_original(g, order));
                dc.algebra = std::move(comp.algebra);
                out.components.push_back(std::move(dc));
            }
        } catch (const InternalFault& e) {
            ++out.internal_faults;
            out.failures.push_back("index set " + describe(free) + ": " + e.what());
        } catch (const std::exception& e) {
            out.failures.push_back("index set " + describe(free) + ": " + e.what());
        }
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const DecompositionComponent& a, const DecompositionComponent& b) {
                  if (a.chain != b.chain) return chain_less(a.chain, b.chain);
                  return a.order < b.order;
              });
    out.components.erase(std::unique(out.components.begin(), out.components.end(),
                                     [](const DecompositionComponent& a, const DecompositionComponent& b) {
                                         return a.chain == b.chain;
                                     }),
                         out.components.end());
    return out;
}

}  // namespace tridec
