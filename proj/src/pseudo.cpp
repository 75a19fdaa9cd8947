#include "tridec/pseudo.hpp"

#include <stdexcept>

#include "tridec/instrument.hpp"

namespace tridec {

PseudoDivisionResult prem_full(const Polynomial& f, const Polynomial& g, Var x) {
    auto dg_opt = g.degree(x);
    if (!dg_opt || *dg_opt == 0) throw std::invalid_argument("pseudo-division by a polynomial of degree 0 in the variable");
    unsigned dg = *dg_opt;
    PseudoDivisionResult res;
    if (f.is_zero() || f.degree_or_zero(x) < dg) {
        res.remainder = f;
        return res;
    }
    unsigned e = f.degree_or_zero(x) - dg + 1;
    Polynomial lc = g.leading_coefficient(x);
    Polynomial r = f;
    Polynomial q;
    unsigned steps = 0;
    while (!r.is_zero() && r.degree_or_zero(x) >= dg) {
        unsigned dr = r.degree_or_zero(x);
        Polynomial t = r.leading_coefficient(x) * Polynomial::variable(x, dr - dg);
        r = lc * r - t * g;
        q = lc * q + t;
        ++steps;
    }
    if (steps < e) {
        Polynomial extra = lc.pow(e - steps);
        r *= extra;
        q *= extra;
    }
    res.alpha = e;
    res.quotient = std::move(q);
    res.remainder = std::move(r);
    return res;
}

PseudoDivisionResult prem(const Polynomial& f, const Polynomial& g, Var x) {
    PseudoDivisionResult res = prem_full(f, g, x);
    if (res.alpha == 0) return res;
    Polynomial lc = g.leading_coefficient(x);
    if (lc.is_constant()) {
        Rational inv = Rational(1) / lc.constant_value();
        Rational scale = 1;
        for (unsigned i = 0; i < res.alpha; ++i) scale *= inv;
        res.quotient *= scale;
        res.remainder *= scale;
        res.alpha = 0;
        return res;
    }
    while (res.alpha > 0) {
        auto q = try_divide(res.quotient, lc);
        if (!q) break;
        auto r = try_divide(res.remainder, lc);
        if (!r) break;
        res.quotient = std::move(*q);
        res.remainder = std::move(*r);
        --res.alpha;
    }
    return res;
}

namespace {

Var leader_of(const Polynomial& g) {
    auto l = g.leader();
    if (!l) throw std::invalid_argument("chain element is constant");
    return *l;
}

}  // namespace

ChainReductionTrace prem_chain(const Polynomial& f, std::span<const Polynomial> chain) {
    ChainReductionTrace trace;
    std::size_t m = chain.size();
    trace.alphas.assign(m, 0);
    std::vector<Polynomial> step_quotients(m);
    Polynomial cur = f;
    for (std::size_t s = m; s-- > 0;) {
        Var x = leader_of(chain[s]);
        if (cur.is_zero() || cur.degree_or_zero(x) < chain[s].degree_or_zero(x)) continue;
        auto r = prem(cur, chain[s], x);
        trace.alphas[s] = r.alpha;
        step_quotients[s] = std::move(r.quotient);
        cur = std::move(r.remainder);
        observe(cur);
        observe_alpha(s, trace.alphas[s]);
    }
    // Fold the per-step quotients into the combined identity: q_s picks up the
    // initials of every lower step.
    trace.quotients.resize(m);
    Polynomial lower(1);
    for (std::size_t s = 0; s < m; ++s) {
        trace.quotients[s] = step_quotients[s].is_zero() ? Polynomial() : step_quotients[s] * lower;
        if (trace.alphas[s] > 0) lower *= chain[s].initial().pow(trace.alphas[s]);
    }
    trace.remainder = std::move(cur);
    return trace;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> chain) {
    Polynomial cur = f;
    for (std::size_t s = chain.size(); s-- > 0;) {
        if (cur.is_zero()) break;
        Var x = leader_of(chain[s]);
        if (cur.degree_or_zero(x) < chain[s].degree_or_zero(x)) continue;
        Polynomial lc = chain[s].leading_coefficient(x);
        if (lc.is_constant()) {
            cur = prem(cur, chain[s], x).remainder;
        } else {
            cur = prem_full(cur, chain[s], x).remainder;
        }
    }
    observe(cur);
    return cur;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial(1);
    bool negate = false;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial();
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = prev.is_constant() ? Polynomial(num) * Polynomial(Rational(1) / prev.constant_value())
                                             : divide_exact(num, prev);
            }
            m[i][k] = Polynomial();
        }
        prev = m[k][k];
    }
    Polynomial d = m[n - 1][n - 1];
    return negate ? -d : d;
}

Polynomial matrix_prem(const Polynomial& f, const Polynomial& g, Var x) {
    auto dg = g.degree(x);
    if (!dg || *dg == 0) throw std::invalid_argument("matrix_prem: divisor has degree 0 in the variable");
    unsigned d = *dg;
    if (!f.is_zero() && f.degree_or_zero(x) >= 2 * d)
        throw std::invalid_argument("matrix_prem: dividend degree must be at most 2d - 1");
    auto gc = g.coefficients(x);
    auto fc = f.coefficients(x);
    auto fcoef = [&](unsigned k) { return k < fc.size() ? fc[k] : Polynomial(); };
    auto gcoef = [&](int k) { return (k >= 0 && static_cast<unsigned>(k) <= d) ? gc[k] : Polynomial(); };

    // G_d: rows for powers 2d-1 .. d, columns for q_{d-1} .. q_0.
    std::vector<std::vector<Polynomial>> gd(d, std::vector<Polynomial>(d));
    std::vector<std::vector<Polynomial>> g0(d, std::vector<Polynomial>(d));
    for (unsigned a = 0; a < d; ++a)
        for (unsigned b = 0; b < d; ++b) {
            if (b <= a) gd[a][b] = gcoef(static_cast<int>(d) - static_cast<int>(a) + static_cast<int>(b));
            if (b >= a) g0[a][b] = gcoef(static_cast<int>(b) - static_cast<int>(a));
        }
    // adj(G_d)[i][j] = (-1)^{i+j} det(minor without row j and column i).
    std::vector<std::vector<Polynomial>> adj(d, std::vector<Polynomial>(d));
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
            std::vector<std::vector<Polynomial>> minor;
            for (unsigned r = 0; r < d; ++r) {
                if (r == j) continue;
                std::vector<Polynomial> row;
                for (unsigned c = 0; c < d; ++c)
                    if (c != i) row.push_back(gd[r][c]);
                minor.push_back(std::move(row));
            }
            Polynomial det = determinant(std::move(minor));
            adj[i][j] = ((i + j) % 2 == 0) ? det : -det;
        }
    std::vector<Polynomial> upper(d), lower(d);
    for (unsigned a = 0; a < d; ++a) {
        upper[a] = fcoef(2 * d - 1 - a);
        lower[a] = fcoef(d - 1 - a);
    }
    std::vector<Polynomial> adj_upper(d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            if (!adj[i][j].is_zero() && !upper[j].is_zero()) adj_upper[i] += adj[i][j] * upper[j];
    Polynomial gdd = gc[d].pow(d);
    std::vector<Polynomial> rcoef(d);
    for (unsigned a = 0; a < d; ++a) {
        Polynomial acc = gdd * lower[a];
        for (unsigned b = 0; b < d; ++b)
            if (!g0[a][b].is_zero() && !adj_upper[b].is_zero()) acc -= g0[a][b] * adj_upper[b];
        rcoef[d - 1 - a] = std::move(acc);
    }
    Polynomial r = Polynomial::from_coefficients(x, rcoef);
    observe(r);
    return r;
}

namespace {

Polynomial shifted(const Polynomial& p, Var x, unsigned k) {
    return k == 0 ? p : p.mul_monomial(Monomial::variable(x, k), Rational(1));
}

}  // namespace

Polynomial subresultant(unsigned j, const Polynomial& f, const Polynomial& g, Var x) {
    if (f.is_zero() || g.is_zero()) return {};
    unsigned a = f.degree_or_zero(x);
    unsigned b = g.degree_or_zero(x);
    if (a == 0 && b == 0) throw std::invalid_argument("subresultant: both polynomials have degree 0");
    if (j > std::min(a, b) || (j == a && j == b)) throw std::invalid_argument("subresultant: index out of range");
    auto fc = f.coefficients(x);
    auto gc = g.coefficients(x);
    unsigned rows = a + b - 2 * j;
    // Row r holds x^k * f or x^k * g; column c corresponds to power a+b-j-1-c.
    std::vector<std::vector<Polynomial>> m(rows, std::vector<Polynomial>(rows));
    unsigned top = a + b - j - 1;
    auto fill = [&](unsigned row, const std::vector<Polynomial>& coeffs, unsigned shift, const Polynomial& full) {
        for (unsigned c = 0; c + 1 < rows; ++c) {
            unsigned power = top - c;
            if (power >= shift && power - shift < coeffs.size()) m[row][c] = coeffs[power - shift];
        }
        m[row][rows - 1] = shifted(full, x, shift);
    };
    unsigned row = 0;
    for (unsigned k = b - j; k-- > 0;) fill(row++, fc, k, f);
    for (unsigned k = a - j; k-- > 0;) fill(row++, gc, k, g);
    Polynomial s = determinant(std::move(m));
    observe(s);
    return s;
}

Polynomial principal_subresultant_coefficient(unsigned j, const Polynomial& f, const Polynomial& g, Var x) {
    return subresultant(j, f, g, x).coefficient(x, j);
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, Var x) {
    if (f.is_zero() || g.is_zero()) return {};
    unsigned a = f.degree_or_zero(x);
    unsigned b = g.degree_or_zero(x);
    if (a == 0 && b == 0) return Polynomial(1);
    if (b == 0) return g.pow(a);
    if (a == 0) return f.pow(b);
    return subresultant(0, f, g, x);
}

}  // namespace tridec
