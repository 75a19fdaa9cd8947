#include "tridec/unmixed.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "tridec/chains.hpp"
#include "tridec/ggcd.hpp"
#include "tridec/instrument.hpp"
#include "tridec/pseudo.hpp"
#include "tridec/text.hpp"

namespace tridec {

int compare_polynomials(const Polynomial& a, const Polynomial& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t k = 0; k < std::min(ta.size(), tb.size()); ++k) {
        int c = lex_compare(ta[k].first, tb[k].first);
        if (c != 0) return c;
        if (ta[k].second != tb[k].second) return ta[k].second < tb[k].second ? -1 : 1;
    }
    if (ta.size() == tb.size()) return 0;
    return ta.size() < tb.size() ? -1 : 1;
}

bool chain_less(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
        int c = compare_polynomials(a[k], b[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

namespace {

struct Context {
    Var first_aux;
    Var next;
};

enum class Status { zero, regular, mixed };

// Removes the content lying in the free variables x_1..x_l and rational
// scaling. Both are units over every component of a normalized chain.
Polynomial normalize_top(const Polynomial& q, std::size_t l) {
    if (q.is_zero()) return q;
    std::map<Monomial, std::vector<Polynomial::Term>, LexGreater> groups;
    for (const auto& [m, c] : q.terms()) {
        std::vector<std::uint32_t> low, high(m.size(), 0);
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (v < l) low.push_back(m[v]);
            else high[v] = m[v];
        }
        groups[Monomial(high)].emplace_back(Monomial(low), c);
    }
    Polynomial content;
    for (auto& [key, terms] : groups) {
        Polynomial coeff = Polynomial::from_terms(std::move(terms));
        content = content.is_zero() ? coeff : gcd(content, coeff);
        if (content.is_constant()) break;
    }
    Polynomial out = content.is_constant() ? q : divide_exact(q, content);
    return out.primitive_integer();
}

std::vector<Polynomial> aux_family(const Polynomial& p, Var first_aux) {
    std::vector<Polynomial> out;
    if (p.is_zero()) return out;
    for (auto& c : p.split_auxiliary(first_aux))
        if (!c.is_zero()) out.push_back(std::move(c));
    return out;
}

// The six families of the gcd formula: t = 0..5 maps to k = i-1, i, i+1
// derivatives, t >= 3 additionally includes h. The combination for family t
// is f + sum_{l=1..k} g^(l) y^l (+ z h), so f, each derivative and h sit on
// distinct monomials in y, z.
unsigned family_k(unsigned i, unsigned t) { return i - 1 + t % 3; }
bool family_h(unsigned t) { return t >= 3; }

std::string tuple_text(const DegreeTuple& v) {
    std::string s = "(";
    for (unsigned t = 0; t < 6; ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s + ")";
}

std::string chain_text(std::span<const Polynomial> chain) {
    std::string s = "[";
    for (std::size_t k = 0; k < chain.size(); ++k) s += (k ? ", " : "") + to_string(chain[k], VariableOrder());
    return s + "]";
}

int q_degree(const DegreeTuple& v) {
    return static_cast<int>(v[0] + v[2] + 2 * v[4]) - static_cast<int>(2 * v[1] + v[3] + v[5]);
}

// S_j(g, F) in x, with the conventions that make "first index with a
// non-vanishing principal coefficient = gcd degree" hold on every component:
// S_j = 0 for deg F < j < deg g and S_{deg g} = g.
Polynomial level_subresultant(unsigned j, const Polynomial& g, const Polynomial& F, Var x) {
    unsigned d = g.degree_or_zero(x);
    if (j == d) return g;
    if (F.is_zero()) return {};
    Polynomial f = F;
    if (f.degree_or_zero(x) >= d) f = prem_full(f, g, x).remainder;
    if (f.is_zero()) return {};
    unsigned b = f.degree_or_zero(x);
    if (j > b) return {};
    return subresultant(j, g, f, x);
}

class LevelTable {
public:
    LevelTable(std::span<const Polynomial> lambda, const Polynomial& g, const Polynomial& f, const Polynomial& h, Var x,
               Var y, Var z, Var first_aux)
        : lambda_(lambda), g_(g), f_(f), h_(h), x_(x), y_(y), z_(z), first_aux_(first_aux),
          d_(g.degree_or_zero(x)) {}

    unsigned degree() const { return d_; }

    const Polynomial& entry(unsigned k, bool with_h, unsigned j) {
        auto key = std::make_tuple(k, with_h, j);
        auto it = s_.find(key);
        if (it != s_.end()) return it->second;
        Polynomial s = reduce(level_subresultant(j, g_, combined(k, with_h), x_).coefficient(x_, j), lambda_);
        observe(s);
        return s_.emplace(key, std::move(s)).first->second;
    }

    Status status(unsigned k, bool with_h, unsigned j) {
        auto key = std::make_tuple(k, with_h, j);
        auto it = status_.find(key);
        if (it != status_.end()) return it->second;
        const Polynomial& s = entry(k, with_h, j);
        Status st = s.is_zero() ? Status::zero
                    : some_aux_coefficient_regular(s, lambda_, first_aux_) ? Status::regular
                                                                            : Status::mixed;
        return status_.emplace(key, st).first->second;
    }

    /// Indices j that can be the gcd degree on some component.
    std::vector<unsigned> candidates(unsigned k, bool with_h) {
        std::vector<unsigned> out;
        for (unsigned j = 0; j <= d_; ++j) {
            Status st = status(k, with_h, j);
            if (st == Status::zero) continue;
            out.push_back(j);
            if (st == Status::regular) break;
        }
        return out;
    }

private:
    Polynomial combined(unsigned k, bool with_h) {
        auto key = std::make_pair(k, with_h);
        auto it = combined_.find(key);
        if (it != combined_.end()) return it->second;
        Polynomial F = f_;
        for (unsigned l = 1; l <= k; ++l) {
            Polynomial dl = derivative(g_, x_, l);
            if (dl.is_zero()) break;
            F += dl * Polynomial::variable(y_, l);
        }
        if (with_h) F += h_ * Polynomial::variable(z_);
        return combined_.emplace(key, std::move(F)).first->second;
    }

    std::span<const Polynomial> lambda_;
    const Polynomial& g_;
    const Polynomial& f_;
    const Polynomial& h_;
    Var x_, y_, z_, first_aux_;
    unsigned d_;
    std::map<std::tuple<unsigned, bool, unsigned>, Polynomial> s_;
    std::map<std::tuple<unsigned, bool, unsigned>, Status> status_;
    std::map<std::pair<unsigned, bool>, Polynomial> combined_;
};

PhiPsiPair assemble(LevelTable& table, std::span<const Polynomial> lambda, unsigned i, const DegreeTuple& v, Var w) {
    PhiPsiPair out;
    out.i = i;
    out.v = v;
    unsigned power = 0;
    for (unsigned t = 0; t < 6; ++t)
        for (unsigned u = 0; u < v[t]; ++u) {
            const Polynomial& s = table.entry(family_k(i, t), family_h(t), u);
            if (!s.is_zero()) out.phi += s * Polynomial::variable(w, power);
            ++power;
        }
    out.phi = reduce(out.phi, lambda);
    out.psi = Polynomial(1);
    for (unsigned t = 0; t < 6; ++t) {
        out.psi = reduce(out.psi * table.entry(family_k(i, t), family_h(t), v[t]), lambda);
        if (out.psi.is_zero()) break;
    }
    observe(out.phi);
    observe(out.psi);
    return out;
}

// Linearly independent polynomials spanning the same Q-space as ps, with
// distinct leading monomials.
std::vector<Polynomial> linear_basis(const std::vector<Polynomial>& ps) {
    std::map<Monomial, Polynomial, LexGreater> basis;
    for (Polynomial p : ps) {
        while (!p.is_zero()) {
            auto it = basis.find(p.leading_monomial());
            if (it == basis.end()) break;
            p -= it->second * Polynomial(p.leading_term_coefficient() / it->second.leading_term_coefficient());
        }
        if (!p.is_zero()) basis.emplace(p.leading_monomial(), p.primitive_integer());
    }
    std::vector<Polynomial> out;
    for (auto& [m, b] : basis) out.push_back(std::move(b));
    return out;
}

// Replaces p (generic in its auxiliary variables) by an equivalent polynomial
// with at most one fresh auxiliary variable: the aux coefficients are reduced
// by the chain, raised to the power d and replaced by a basis of their span.
// A prime contains the span iff it contains the original coefficients, and a
// root of g of multiplicity at most d is a root of each power of at least
// that multiplicity, so gcds with g see every common root with its full
// multiplicity in g.
Polynomial compress(const Polynomial& p, unsigned d, std::span<const Polynomial> chain, Context& ctx) {
    if (p.is_zero()) return p;
    std::vector<Polynomial> family;
    for (const auto& c : aux_family(p, ctx.first_aux)) {
        Polynomial r = reduce(c, chain);
        if (r.is_zero()) continue;
        if (r.is_constant()) return Polynomial(1);
        Polynomial acc = r;
        for (unsigned k = 1; k < d; ++k) acc = reduce(acc * r, chain);
        family.push_back(std::move(acc));
    }
    family = linear_basis(family);
    if (family.size() <= 1) return family.empty() ? Polynomial() : family[0];
    Var a = ctx.next++;
    Polynomial out;
    for (std::size_t k = 0; k < family.size(); ++k) out += family[k] * Polynomial::variable(a, k);
    return out;
}

// True when a and r are certainly coprime over Q(x_1..x_{x-1})[x]. A point
// that keeps lc(a) nonzero can only raise the gcd degree, so a constant gcd
// after specializing proves coprimality; anything else is inconclusive.
bool coprime_at_point(const Polynomial& a, const Polynomial& r, Var x) {
    static const long values[] = {3, -5, 7, 2, -11};
    for (int attempt = 0; attempt < 3; ++attempt) {
        Polynomial sa = a, sr = r;
        for (Var v = 0; v < x; ++v) {
            Rational val(values[(v + attempt) % 5] + 13 * attempt);
            sa = sa.evaluate(v, val);
            sr = sr.evaluate(v, val);
        }
        if (sa.degree_or_zero(x) != a.degree_or_zero(x)) continue;
        if (sr.is_zero()) return false;
        return !gcd(sa, sr).involves(x);
    }
    return false;
}

// Coefficients in x of p at x_1 = t; p involves only x_1 and x.
std::vector<Rational> specialize_univariate(const Polynomial& p, const Rational& t, Var x) {
    Polynomial s = p.evaluate(0, t);
    std::vector<Rational> out(s.degree_or_zero(x) + 1);
    for (const auto& [m, c] : s.terms()) out[m[x]] = c;
    return out;
}

// With one free variable the gcd divides the small a, so its coefficients
// have low degree in x_1: recover lc(a)/lc(G) * G from specialized gcds by
// interpolation and certify by exact division. Returns nullopt when the
// points were unlucky or the certificate fails.
std::optional<Polynomial> gcd_by_interpolation(const Polynomial& a, const Polynomial& r, Var x) {
    Polynomial lc = a.leading_coefficient(x);
    unsigned needed = lc.degree_or_zero(0) + a.degree_or_zero(0) + 1;
    unsigned best = a.degree_or_zero(x) + 1;
    std::vector<Rational> xs;
    std::vector<std::vector<Rational>> ys;
    for (long t = 1; xs.size() < needed && t < 4 * static_cast<long>(needed) + 20; ++t) {
        Rational tv(t);
        Polynomial lc_t = lc.evaluate(0, tv);
        if (lc_t.is_zero()) continue;
        Rational scale = lc_t.constant_value();
        auto ca = specialize_univariate(a, tv, x), cr = specialize_univariate(r, tv, x);
        Polynomial pa, pr;
        for (std::size_t k = 0; k < ca.size(); ++k) pa += Polynomial::variable(x, k) * Polynomial(ca[k]);
        for (std::size_t k = 0; k < cr.size(); ++k) pr += Polynomial::variable(x, k) * Polynomial(cr[k]);
        if (pr.is_zero()) continue;
        Polynomial g = gcd(pa, pr);
        unsigned k = g.degree_or_zero(x);
        if (k > best) continue;
        if (k < best) {
            best = k;
            xs.clear();
            ys.clear();
        }
        if (k == 0) return Polynomial(1);
        auto cg = specialize_univariate(g, tv, x);
        Rational lead = cg.back();
        for (auto& c : cg) c = c * scale / lead;
        xs.push_back(tv);
        ys.push_back(std::move(cg));
    }
    if (xs.size() < needed) return std::nullopt;
    // Newton interpolation per coefficient of x^j.
    Polynomial G;
    Polynomial x1 = Polynomial::variable(0);
    for (unsigned j = 0; j <= best; ++j) {
        std::vector<Rational> dd(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) dd[i] = ys[i][j];
        for (std::size_t lvl = 1; lvl < xs.size(); ++lvl)
            for (std::size_t i = xs.size() - 1; i >= lvl; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
        Polynomial coeff(dd.back());
        for (std::size_t i = xs.size() - 1; i-- > 0;) coeff = coeff * (x1 - Polynomial(xs[i])) + Polynomial(dd[i]);
        G += coeff * Polynomial::variable(x, j);
    }
    G = primitive_part(G, x).primitive_integer();
    if (G.degree_or_zero(x) != best) return std::nullopt;
    if (!try_divide(a, G)) return std::nullopt;
    if (!prem(r, G, x).remainder.is_zero()) return std::nullopt;
    return G;
}

// Gcd over the field of the free variables, returned primitive in x. The
// accumulator a is small while c can be huge, so c is reduced modulo a first.
Polynomial gcd_over_free(const Polynomial& a, const Polynomial& c, Var x) {
    if (!a.involves(x) || !c.involves(x)) return Polynomial(1);
    Polynomial r = prem(c, a, x).remainder;
    if (r.is_zero()) return a;
    if (!r.involves(x) || coprime_at_point(a, r, x)) return Polynomial(1);
    if (x == 1)
        if (auto g = gcd_by_interpolation(a, r, x)) return *g;
    Polynomial g = gcd(a, r);
    return g.involves(x) ? primitive_part(g, x).primitive_integer() : Polynomial(1);
}

std::vector<UnmixedComponent> univariate_level(const Polynomial& g, std::size_t l, const Polynomial& f,
                                               const Polynomial& h, Var first_aux) {
    Var x = l;
    unsigned d = g.degree_or_zero(x);
    std::map<std::pair<unsigned, bool>, Polynomial> cache;
    auto family_gcd = [&](unsigned k, bool with_h) -> Polynomial {
        auto key = std::make_pair(k, with_h);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Polynomial acc = g.involves(x) ? primitive_part(g, x).primitive_integer() : Polynomial(1);
        for (unsigned j = 1; j <= k && !acc.is_constant(); ++j) {
            Polynomial dj = derivative(g, x, j);
            if (dj.is_zero()) break;
            acc = gcd_over_free(acc, dj, x);
        }
        for (const auto& c : aux_family(f, first_aux)) {
            if (acc.is_constant()) break;
            acc = gcd_over_free(acc, c, x);
        }
        if (with_h)
            for (const auto& c : aux_family(h, first_aux)) {
                if (acc.is_constant()) break;
                acc = gcd_over_free(acc, c, x);
            }
        observe(acc);
        return cache.emplace(key, acc).first->second;
    };

    std::vector<UnmixedComponent> out;
    for (unsigned i = 1; i <= d; ++i) {
        Polynomial num = family_gcd(i - 1, false) * family_gcd(i + 1, false) * family_gcd(i, true).pow(2);
        Polynomial den = family_gcd(i, false).pow(2) * family_gcd(i - 1, true) * family_gcd(i + 1, true);
        auto q = try_divide(num, den);
        if (!q) throw InternalFault("univariate multiplicity quotient is not exact");
        Polynomial qn = normalize_top(*q, l);
        observe(qn);
        if (qn.degree_or_zero(x) == 0) continue;
        std::vector<Polynomial> chain{qn};
        out.push_back(UnmixedComponent{chain, build_algebra_checked(chain, l)});
    }
    return out;
}

std::vector<UnmixedComponent> unmixed_rec(std::span<const Polynomial> chain, std::size_t l, const Polynomial& f_in,
                                          const Polynomial& h_in, Context& ctx) {
    std::size_t m = chain.size();
    if (m == 0) {
        std::vector<UnmixedComponent> out;
        if (f_in.is_zero() && !h_in.is_zero()) out.push_back(UnmixedComponent{{}, build_algebra_checked({}, l)});
        return out;
    }
    const Polynomial& g = chain[m - 1];
    unsigned top = g.degree_or_zero(l + m - 1);
    Polynomial f = compress(f_in, top, chain, ctx);
    Polynomial h = compress(h_in, top, chain, ctx);
    observe(f);
    observe(h);
    if (m == 1) return univariate_level(g, l, f, h, ctx.first_aux);

    auto lambda = chain.first(m - 1);
    Var x = l + m - 1;
    Var y = ctx.next++, z = ctx.next++, w = ctx.next++;
    LevelTable table(lambda, g, f, h, x, y, z, ctx.first_aux);
    unsigned d = table.degree();

    std::vector<UnmixedComponent> out;
    for (unsigned i = 1; i <= d; ++i) {
        std::array<std::vector<unsigned>, 6> cand;
        for (unsigned t = 0; t < 6; ++t) cand[t] = table.candidates(family_k(i, t), family_h(t));
        DegreeTuple v{};
        std::array<std::size_t, 6> pos{};
        // odometer over the candidate lists, first family most significant
        while (true) {
            for (unsigned t = 0; t < 6; ++t) v[t] = cand[t][pos[t]];
            bool ok = v[0] >= v[1] && v[1] >= v[2] && v[3] >= v[4] && v[4] >= v[5] && v[3] <= v[0] &&
                      v[4] <= v[1] && v[5] <= v[2] && q_degree(v) >= 1;
            if (ok) {
                PhiPsiPair pp = assemble(table, lambda, i, v, w);
                bool skip = pp.psi.is_zero() || (pp.phi.is_constant() && !pp.phi.is_zero());
                if (!skip) {
                    auto sub = unmixed_rec(lambda, l, pp.phi, pp.psi, ctx);
                    for (auto& comp : sub) {
                        Polynomial q = compute_q(comp.algebra, g, f, h, i, v, ctx.first_aux);
                        if (q.degree_or_zero(x) == 0) continue;
                        std::vector<Polynomial> next = comp.chain;
                        next.push_back(q);
                        out.push_back(UnmixedComponent{next, build_algebra_checked(next, l)});
                    }
                }
            }
            int t = 5;
            while (t >= 0 && ++pos[t] == cand[t].size()) pos[t--] = 0;
            if (t < 0) break;
        }
    }
    return out;
}

Var max_span(std::span<const Polynomial> ps) {
    Var s = 0;
    for (const auto& p : ps) s = std::max(s, p.variable_span());
    return s;
}

}  // namespace

PhiPsiPair phi_psi(std::span<const Polynomial> chain, std::size_t l, const Polynomial& f, const Polynomial& h,
                   unsigned i, const DegreeTuple& v, Var y, Var z, Var w) {
    if (chain.empty()) throw std::invalid_argument("phi_psi needs a nonempty chain");
    std::size_t m = chain.size();
    const Polynomial& g = chain[m - 1];
    Var x = l + m - 1;
    unsigned d = g.degree_or_zero(x);
    if (i < 1 || i > d) throw std::invalid_argument("phi_psi: i out of range");
    for (unsigned vt : v)
        if (vt > d) throw std::invalid_argument("phi_psi: tuple entry exceeds the top degree");
    Var first_aux = std::min({y, z, w});
    auto lambda = chain.first(m - 1);
    Polynomial fr = reduce(f, chain), hr = reduce(h, chain);
    LevelTable table(lambda, g, fr, hr, x, y, z, first_aux);
    return assemble(table, lambda, i, v, w);
}

Polynomial compute_q(const QuotientAlgebra& lambda, const Polynomial& g, const Polynomial& f, const Polynomial& h,
                     unsigned i, const DegreeTuple& v, Var first_aux) {
    auto x_opt = g.leader();
    if (!x_opt) throw std::invalid_argument("compute_q: g is constant");
    Var x = *x_opt;
    std::span<const Polynomial> chain = lambda.chain;
    std::array<Polynomial, 6> dbar;
    for (unsigned t = 0; t < 6; ++t) {
        std::vector<Polynomial> family;
        unsigned k = family_k(i, t);
        for (unsigned j = 0; j <= k; ++j) {
            Polynomial dj = derivative(g, x, j);
            if (dj.is_zero()) break;
            family.push_back(std::move(dj));
        }
        family.push_back(f);
        if (family_h(t)) family.push_back(h);
        GgcdOutcome out = ggcd(chain, family, x, first_aux);
        auto* res = std::get_if<GgcdResult>(&out);
        if (!res) throw InternalFault("generalized gcd " + std::to_string(t + 1) + " is not well defined on a component");
        if (res->degree != v[t])
            throw InternalFault("generalized gcd " + std::to_string(t + 1) + " has degree " +
                                std::to_string(res->degree) + ", expected " + std::to_string(v[t]) + " (i = " +
                                std::to_string(i) + ", v = " + tuple_text(v) + ", component " +
                                chain_text(chain) + ")");
        if (res->degree == 0) {
            // a unit on the component
            dbar[t] = Polynomial(1);
            continue;
        }
        Polynomial lc = res->gcd.leading_coefficient(x);
        auto inv = pinvert(lambda, lc);
        auto* pi = std::get_if<PseudoInverse>(&inv);
        if (!pi) throw InternalFault("initial of generalized gcd " + std::to_string(t + 1) + " is not invertible");
        dbar[t] = reduce(pi->fbar * res->gcd, chain);
        observe(dbar[t]);
    }
    auto product = [&](std::initializer_list<unsigned> idx) {
        Polynomial acc(1);
        for (unsigned t : idx) acc = reduce(acc * dbar[t], chain);
        observe(acc);
        return acc;
    };
    Polynomial p1 = product({0, 2, 4, 4});
    Polynomial p2 = product({1, 1, 3, 5});
    Polynomial q;
    if (p2.degree_or_zero(x) == 0) {
        q = p1;
    } else {
        auto div = prem(p1, p2, x);
        if (!reduce(div.remainder, chain).is_zero())
            throw InternalFault("p1 is not divisible by p2 modulo the component");
        q = div.quotient;
    }
    q = normalize_top(reduce(q, chain), lambda.l);
    observe(q);
    int expected = std::max(0, q_degree(v));
    if (static_cast<int>(q.degree_or_zero(x)) != expected)
        throw InternalFault("q has degree " + std::to_string(q.degree_or_zero(x)) + ", expected " +
                            std::to_string(expected));
    return q;
}

UnmixedOutput unmixed(std::span<const Polynomial> chain, std::size_t l, const Polynomial& f, const Polynomial& h,
                      Var first_aux) {
    check_triangular(chain);
    if (!is_normalized(chain, l)) throw std::invalid_argument("unmixed: chain is not normalized");
    if (first_aux < l + chain.size()) throw std::invalid_argument("unmixed: auxiliary variables overlap the chain");
    UnmixedScope scope;
    Context ctx{first_aux, std::max({first_aux, max_span(chain), f.variable_span(), h.variable_span()})};
    std::vector<UnmixedComponent> comps = unmixed_rec(chain, l, f, h, ctx);
    std::sort(comps.begin(), comps.end(),
              [](const UnmixedComponent& a, const UnmixedComponent& b) { return chain_less(a.chain, b.chain); });
    comps.erase(std::unique(comps.begin(), comps.end(),
                            [](const UnmixedComponent& a, const UnmixedComponent& b) { return a.chain == b.chain; }),
                comps.end());
    UnmixedOutput out;
    out.leader_degrees.assign(chain.size(), 0);
    for (const auto& c : comps)
        for (std::size_t s = 0; s < c.chain.size(); ++s)
            out.leader_degrees[s] = std::max(out.leader_degrees[s], c.chain[s].degree_or_zero(l + s));
    out.components = std::move(comps);
    return out;
}

}  // namespace tridec
