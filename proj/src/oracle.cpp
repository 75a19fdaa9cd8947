#include "tridec/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tridec/text.hpp"

namespace tridec {

PseudoDivisionResult naive_prem(const Polynomial& f, const Polynomial& g, Var x) {
    auto gc = g.coefficients(x);
    if (g.is_zero() || gc.size() < 2) throw std::invalid_argument("naive_prem: divisor has degree 0 in the variable");
    PseudoDivisionResult res;
    auto fc = f.coefficients(x);
    if (f.is_zero() || fc.size() < gc.size()) {
        res.remainder = f;
        return res;
    }
    std::size_t dg = gc.size() - 1, df = fc.size() - 1;
    const Polynomial& lc = gc.back();
    std::vector<Polynomial> r = fc, q(df - dg + 1);
    // every step multiplies the running remainder and quotient by lc
    for (std::size_t top = df + 1; top-- > dg;) {
        Polynomial t = r[top];
        for (auto& c : r) c *= lc;
        for (auto& c : q) c *= lc;
        q[top - dg] += t;
        for (std::size_t k = 0; k <= dg; ++k) r[top - dg + k] -= t * gc[k];
    }
    res.alpha = static_cast<unsigned>(df - dg + 1);
    res.quotient = Polynomial::from_coefficients(x, q);
    r.resize(dg);
    res.remainder = Polynomial::from_coefficients(x, r);
    if (lc.is_constant()) {
        Rational s = 1;
        for (unsigned k = 0; k < res.alpha; ++k) s /= lc.constant_value();
        res.quotient *= s;
        res.remainder *= s;
        res.alpha = 0;
        return res;
    }
    while (res.alpha > 0) {
        auto q2 = try_divide(res.quotient, lc);
        auto r2 = try_divide(res.remainder, lc);
        if (!q2 || !r2) break;
        res.quotient = *q2;
        res.remainder = *r2;
        --res.alpha;
    }
    return res;
}

namespace {

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const Polynomial& p, Var x) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
    if (p.variable_span() > x + 1 || (p.leader() && *p.leader() != x))
        throw std::invalid_argument("rational_roots: polynomial is not univariate in the variable");
    std::vector<Rational> roots;
    Polynomial cur = p.primitive_integer();
    Polynomial var = Polynomial::variable(x);
    while (cur.degree_or_zero(x) > 0 && cur.coefficient(x, 0).is_zero()) {
        roots.push_back(0);
        cur = divide_exact(cur, var);
    }
    if (cur.degree_or_zero(x) == 0) return roots;
    Integer a0 = cur.coefficient(x, 0).constant_value().get_num();
    Integer an = cur.leading_coefficient(x).constant_value().get_num();
    const Integer limit("1000000000000");
    if (abs(a0) > limit || abs(an) > limit) return std::nullopt;
    auto num = divisors(a0), den = divisors(an);
    std::set<Rational> tried;
    for (const auto& a : num)
        for (const auto& b : den)
            for (int sign : {1, -1}) {
                Rational r(a * sign, b);
                r.canonicalize();
                if (!tried.insert(r).second) continue;
                Polynomial lin = var - Polynomial(r);
                while (cur.degree_or_zero(x) > 0) {
                    auto q = try_divide(cur, lin);
                    if (!q) break;
                    roots.push_back(r);
                    cur = *q;
                }
            }
    if (cur.degree_or_zero(x) > 0) return std::nullopt;
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<SplitLinearSystem> factor_split_linear(const InputSystem& system) {
    SplitLinearSystem out;
    out.n = system.n;
    for (const auto& p : system.polys) {
        out.zero.push_back(p.is_zero());
        std::vector<LinearFactor> factors;
        if (p.is_zero() || p.is_constant()) {
            out.polys.push_back(factors);
            continue;
        }
        Polynomial product(1);
        for (Var v = 0; v < p.variable_span(); ++v) {
            if (!p.involves(v)) continue;
            // p = prod_w U_w(x_w): fixing the other variables at a point where
            // their factors do not vanish leaves U_v up to a scalar.
            std::optional<Polynomial> uv;
            for (int attempt = 0; attempt < 20 && !uv; ++attempt) {
                Polynomial e = p;
                for (Var w = 0; w < p.variable_span(); ++w)
                    if (w != v) e = e.evaluate(w, Rational(7 + 13 * attempt + 3 * static_cast<long>(w)));
                if (!e.is_zero()) uv = e;
            }
            if (!uv || uv->variable_span() > v + 1) return std::nullopt;
            auto roots = rational_roots(*uv, v);
            if (!roots) return std::nullopt;
            for (const auto& r : *roots) {
                product *= Polynomial::variable(v) - Polynomial(r);
                LinearFactor lf{v, r};
                if (std::find(factors.begin(), factors.end(), lf) == factors.end()) factors.push_back(lf);
            }
        }
        Rational scale = p.leading_term_coefficient() / product.leading_term_coefficient();
        if (product * Polynomial(scale) != p) return std::nullopt;
        std::sort(factors.begin(), factors.end());
        out.polys.push_back(std::move(factors));
    }
    return out;
}

namespace {

void enumerate(const SplitLinearSystem& sys, std::size_t k, SubspaceComponent& cur, std::set<SubspaceComponent>& out) {
    if (k == sys.polys.size()) {
        out.insert(cur);
        return;
    }
    if (sys.zero[k]) return enumerate(sys, k + 1, cur, out);
    for (const auto& f : sys.polys[k]) {
        auto it = cur.find(f.var);
        if (it != cur.end() && it->second == f.root) return enumerate(sys, k + 1, cur, out);
    }
    for (const auto& f : sys.polys[k]) {
        if (cur.count(f.var)) continue;
        cur.emplace(f.var, f.root);
        enumerate(sys, k + 1, cur, out);
        cur.erase(f.var);
    }
}

bool pins_subset(const SubspaceComponent& a, const SubspaceComponent& b) {
    for (const auto& [v, r] : a) {
        auto it = b.find(v);
        if (it == b.end() || it->second != r) return false;
    }
    return true;
}

bool on_component(const DecompositionComponent& c, const std::vector<Rational>& pt) {
    std::size_t l = c.free.size();
    for (std::size_t s = 0; s < c.chain.size(); ++s) {
        if (c.chain[s].evaluate_all(pt) != 0) return false;
        if (c.chain[s].leading_coefficient(c.order[l + s]).evaluate_all(pt) == 0) return false;
    }
    return true;
}

std::string point_text(const std::vector<Rational>& pt) {
    std::string s = "(";
    for (std::size_t k = 0; k < pt.size(); ++k) s += (k ? ", " : "") + to_string(pt[k]);
    return s + ")";
}

}  // namespace

SolutionDescription split_linear_solve(const SplitLinearSystem& system) {
    std::set<SubspaceComponent> all;
    SubspaceComponent cur;
    enumerate(system, 0, cur, all);
    SolutionDescription out;
    out.n = system.n;
    for (const auto& a : all) {
        bool minimal = true;
        for (const auto& b : all)
            if (b != a && pins_subset(b, a)) minimal = false;
        if (minimal) out.components.push_back(a);
    }
    return out;
}

std::optional<std::vector<std::vector<Rational>>> chain_points(const std::vector<Polynomial>& chain,
                                                               const std::vector<Var>& order) {
    std::vector<std::vector<Rational>> pts{std::vector<Rational>(order.size(), 0)};
    for (std::size_t s = 0; s < chain.size(); ++s) {
        std::vector<std::vector<Rational>> next;
        Var x = order[s];
        for (const auto& pt : pts) {
            Polynomial u = chain[s];
            for (std::size_t t = 0; t < s; ++t) u = u.evaluate(order[t], pt[order[t]]);
            if (u.is_zero()) throw std::invalid_argument("chain_points: fibre is not finite");
            auto roots = rational_roots(u, x);
            if (!roots) return std::nullopt;
            roots->erase(std::unique(roots->begin(), roots->end()), roots->end());
            for (const auto& r : *roots) {
                auto p2 = pt;
                p2[x] = r;
                next.push_back(std::move(p2));
            }
        }
        pts = std::move(next);
    }
    return pts;
}

VerificationReport verify_decomposition(const Decomposition& decomp, const InputSystem& system,
                                        const SolutionDescription& truth, std::uint64_t seed,
                                        std::size_t samples_per_component) {
    VerificationReport rep;
    for (std::size_t k = 0; k < decomp.components.size(); ++k)
        for (std::size_t j = 0; j < system.polys.size(); ++j)
            if (!component_contains(decomp.components[k], system.polys[j])) {
                rep.sound = false;
                rep.failures.push_back("component " + std::to_string(k) + " does not contain input " +
                                       std::to_string(j));
            }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-97, 97), den(1, 13);
    for (std::size_t t = 0; t < truth.components.size(); ++t) {
        const auto& tc = truth.components[t];
        for (std::size_t s = 0; s < samples_per_component; ++s) {
            std::vector<Rational> pt(system.n);
            for (Var v = 0; v < system.n; ++v) {
                auto it = tc.find(v);
                if (it != tc.end()) pt[v] = it->second;
                else {
                    pt[v] = Rational(num(rng), den(rng));
                    pt[v].canonicalize();
                }
            }
            ++rep.samples_checked;
            bool covered = std::any_of(decomp.components.begin(), decomp.components.end(),
                                       [&](const DecompositionComponent& c) { return on_component(c, pt); });
            if (!covered) {
                rep.complete = false;
                rep.failures.push_back("truth component " + std::to_string(t) + ": sample " + point_text(pt) +
                                       " is not covered");
            }
        }
    }

    for (const auto& c : decomp.components) {
        if (!c.free.empty()) continue;
        auto pts = chain_points(c.chain, c.order);
        if (!pts) {
            ++rep.unsplit_components;
            continue;
        }
        for (const auto& pt : *pts) {
            bool redundant = std::any_of(truth.components.begin(), truth.components.end(), [&](const auto& tc) {
                if (tc.size() >= system.n) return false;
                for (const auto& [v, r] : tc)
                    if (pt[v] != r) return false;
                return true;
            });
            rep.redundant_points += redundant;
        }
    }
    return rep;
}

}  // namespace tridec
