#include "tridec/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "tridec/pseudo.hpp"

namespace tridec {

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_constant()) return b;
    if (b.is_constant()) return a;
    return divide_exact(a * b, gcd(a, b));
}

}  // namespace

Fraction::Fraction(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::invalid_argument("fraction with zero denominator");
    if (num.is_zero()) {
        den = Polynomial(1);
        return;
    }
    if (!den.is_constant()) {
        Polynomial g = gcd(num, den);
        if (!g.is_constant()) {
            num = divide_exact(num, g);
            den = divide_exact(den, g);
        }
    }
    Rational c = Rational(1) / den.leading_term_coefficient();
    num *= c;
    den *= c;
}

unsigned Fraction::height() const { return std::max(num.height(), den.height()); }

Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den == b.den) return Fraction(a.num + b.num, a.den);
    Polynomial g = gcd(a.den, b.den);
    Polynomial ad = divide_exact(a.den, g), bd = divide_exact(b.den, g);
    return Fraction(a.num * bd + b.num * ad, ad * b.den);
}

Fraction Fraction::operator-() const {
    Fraction out = *this;
    out.num = -out.num;
    return out;
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return Fraction(a.num * b.num, Polynomial(1));
    return Fraction(a.num * b.num, a.den * b.den);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.is_zero()) throw std::domain_error("fraction division by zero");
    return Fraction(a.num * b.den, a.den * b.num);
}

bool AlgebraElement::integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Fraction& c) { return c.is_polynomial(); });
}

unsigned AlgebraElement::height() const {
    unsigned h = 0;
    for (const auto& c : coords) h = std::max(h, c.height());
    return h;
}

std::size_t QuotientAlgebra::index_of(const std::vector<unsigned>& exps) const {
    auto it = std::find(basis.begin(), basis.end(), exps);
    if (it == basis.end()) throw std::out_of_range("not a standard basis monomial");
    return static_cast<std::size_t>(it - basis.begin());
}

Polynomial QuotientAlgebra::basis_polynomial(std::size_t i) const {
    std::vector<std::uint32_t> e(l + basis[i].size(), 0);
    for (std::size_t s = 0; s < basis[i].size(); ++s) e[l + s] = basis[i][s];
    return Polynomial::monomial(Monomial(std::move(e)), Rational(1));
}

AlgebraElement QuotientAlgebra::one() const {
    AlgebraElement e;
    e.coords.assign(dimension(), Fraction());
    e.coords[0] = Fraction(Polynomial(1));
    return e;
}

namespace {

std::vector<std::vector<unsigned>> standard_basis(const std::vector<unsigned>& degrees) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(degrees.size(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < cur.size() && cur[i] + 1 == degrees[i]) cur[i++] = 0;
        if (i == cur.size()) break;
        ++cur[i];
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        unsigned ta = 0, tb = 0;
        for (unsigned v : a) ta += v;
        for (unsigned v : b) tb += v;
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return out;
}

// Coordinates of a polynomial already reduced modulo the chain, divided by den.
std::vector<Fraction> coordinates(const Polynomial& reduced, const Polynomial& den, const QuotientAlgebra& alg) {
    std::size_t m = alg.degrees.size();
    std::vector<std::vector<Polynomial::Term>> parts(alg.dimension());
    for (const auto& [mono, c] : reduced.terms()) {
        if (mono.size() > alg.l + m) throw std::invalid_argument("element involves variables outside the algebra");
        std::vector<unsigned> key(m);
        std::vector<std::uint32_t> low(std::min(mono.size(), alg.l));
        for (std::size_t v = 0; v < low.size(); ++v) low[v] = mono[v];
        for (std::size_t s = 0; s < m; ++s) key[s] = mono[alg.l + s];
        parts[alg.index_of(key)].emplace_back(Monomial(std::move(low)), c);
    }
    std::vector<Fraction> out(alg.dimension());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!parts[i].empty()) out[i] = Fraction(Polynomial::from_terms(std::move(parts[i])), den);
    return out;
}

Polynomial initial_power_product(std::span<const Polynomial> chain, const std::vector<unsigned>& alphas) {
    Polynomial den(1);
    for (std::size_t s = 0; s < chain.size(); ++s)
        if (alphas[s] > 0) den *= chain[s].initial().pow(alphas[s]);
    return den;
}

}  // namespace

std::variant<QuotientAlgebra, ChainRefusal> build_algebra(std::span<const Polynomial> chain, std::size_t l) {
    check_triangular(chain);
    if (!is_normalized(chain, l)) throw std::invalid_argument("build_algebra: chain is not normalized");
    ChainCheck reg = is_regular_chain(chain);
    if (auto* refusal = std::get_if<ChainRefusal>(&reg)) return *refusal;

    QuotientAlgebra alg;
    alg.chain.assign(chain.begin(), chain.end());
    alg.l = l;
    std::size_t m = chain.size();
    for (std::size_t s = 0; s < m; ++s) alg.degrees.push_back(chain[s].degree_or_zero(l + s));
    alg.basis = standard_basis(alg.degrees);
    std::size_t dim = alg.dimension();
    alg.table.assign(dim, std::vector<std::vector<Fraction>>(dim));
    if (m == 0) {
        alg.table[0][0] = {Fraction(Polynomial(1))};
        return alg;
    }

    Var top = l + m - 1;
    unsigned dm = alg.degrees[m - 1];
    auto lower = chain.first(m - 1);
    // Remainders of powers of the top leader by g_m with exponent fixed at d_m.
    std::vector<Polynomial> top_rem(2 * dm);
    for (unsigned e = dm; e + 1 < 2 * dm; ++e) top_rem[e] = matrix_prem(Polynomial::variable(top, e), chain[m - 1], top);
    Polynomial top_den = chain[m - 1].initial().pow(dm);

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            std::vector<std::uint32_t> e(l + m, 0);
            for (std::size_t s = 0; s < m; ++s) e[l + s] = alg.basis[i][s] + alg.basis[j][s];
            unsigned em = e[top];
            Polynomial f;
            Polynomial den(1);
            if (em < dm) {
                f = Polynomial::monomial(Monomial(e), Rational(1));
            } else {
                e[top] = 0;
                f = top_rem[em].mul_monomial(Monomial(e), Rational(1));
                den = top_den;
            }
            auto trace = prem_chain(f, lower);
            den *= initial_power_product(lower, trace.alphas);
            alg.table[i][j] = coordinates(trace.remainder, den, alg);
            if (i != j) alg.table[j][i] = alg.table[i][j];
        }
    return alg;
}

QuotientAlgebra build_algebra_checked(std::span<const Polynomial> chain, std::size_t l) {
    auto res = build_algebra(chain, l);
    if (auto* refusal = std::get_if<ChainRefusal>(&res))
        throw std::logic_error("chain expected to be regular: " + refusal->reason);
    return std::get<QuotientAlgebra>(std::move(res));
}

unsigned gamma(const QuotientAlgebra& algebra) {
    unsigned g = 0;
    for (const auto& row : algebra.table)
        for (const auto& entry : row)
            for (const auto& c : entry) g = std::max(g, c.height());
    return g;
}

AlgebraElement to_element(const Polynomial& p, const QuotientAlgebra& algebra) {
    auto trace = prem_chain(p, algebra.chain);
    Polynomial den = initial_power_product(algebra.chain, trace.alphas);
    return AlgebraElement{coordinates(trace.remainder, den, algebra)};
}

std::pair<Polynomial, Polynomial> to_polynomial(const AlgebraElement& a, const QuotientAlgebra& algebra) {
    Polynomial common(1);
    for (const auto& c : a.coords)
        if (!c.is_zero()) common = lcm(common, c.den);
    Polynomial out;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        const auto& c = a.coords[i];
        if (c.is_zero()) continue;
        out += c.num * divide_exact(common, c.den) * algebra.basis_polynomial(i);
    }
    return {out, common};
}

AlgebraElement algebra_multiply(const AlgebraElement& a, const AlgebraElement& b, const QuotientAlgebra& algebra) {
    std::size_t dim = algebra.dimension();
    if (a.coords.size() != dim || b.coords.size() != dim)
        throw std::invalid_argument("algebra_multiply: coordinate length mismatch");
    AlgebraElement out;
    out.coords.assign(dim, Fraction());
    for (std::size_t i = 0; i < dim; ++i) {
        if (a.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b.coords[j].is_zero()) continue;
            Fraction ab = a.coords[i] * b.coords[j];
            const auto& entry = algebra.table[i][j];
            for (std::size_t k = 0; k < dim; ++k)
                if (!entry[k].is_zero()) out.coords[k] = out.coords[k] + ab * entry[k];
        }
    }
    return out;
}

std::variant<PseudoInverse, NotInvertible> pinvert(const QuotientAlgebra& algebra, const Polynomial& f) {
    std::size_t dim = algebra.dimension();
    AlgebraElement fe = to_element(f, algebra);
    // Column j of the multiplication matrix holds the coordinates of f * b_j.
    std::vector<std::vector<Fraction>> mat(dim, std::vector<Fraction>(dim + 1));
    for (std::size_t j = 0; j < dim; ++j) {
        AlgebraElement bj;
        bj.coords.assign(dim, Fraction());
        bj.coords[j] = Fraction(Polynomial(1));
        AlgebraElement col = algebra_multiply(fe, bj, algebra);
        for (std::size_t k = 0; k < dim; ++k) mat[k][j] = col.coords[k];
    }
    mat[0][dim] = Fraction(Polynomial(1));

    Fraction det(Polynomial(1));
    for (std::size_t k = 0; k < dim; ++k) {
        std::size_t p = k;
        while (p < dim && mat[p][k].is_zero()) ++p;
        if (p == dim) return NotInvertible{Polynomial()};
        if (p != k) {
            std::swap(mat[p], mat[k]);
            det = -det;
        }
        det = det * mat[k][k];
        for (std::size_t i = k + 1; i < dim; ++i) {
            if (mat[i][k].is_zero()) continue;
            Fraction ratio = mat[i][k] / mat[k][k];
            for (std::size_t j = k; j <= dim; ++j)
                if (!mat[k][j].is_zero()) mat[i][j] = mat[i][j] - ratio * mat[k][j];
        }
    }
    std::vector<Fraction> u(dim);
    for (std::size_t k = dim; k-- > 0;) {
        Fraction acc = mat[k][dim];
        for (std::size_t j = k + 1; j < dim; ++j)
            if (!mat[k][j].is_zero() && !u[j].is_zero()) acc = acc - mat[k][j] * u[j];
        u[k] = acc / mat[k][k];
    }
    // adj(M) e_1 = det * u; clear whatever denominators remain.
    AlgebraElement adj;
    Polynomial common = det.den;
    for (const auto& uk : u) {
        adj.coords.push_back(det * uk);
        if (!adj.coords.back().is_zero()) common = lcm(common, adj.coords.back().den);
    }
    Polynomial fbar;
    for (std::size_t k = 0; k < dim; ++k) {
        const auto& c = adj.coords[k];
        if (c.is_zero()) continue;
        fbar += c.num * divide_exact(common, c.den) * algebra.basis_polynomial(k);
    }
    Polynomial r = det.num * divide_exact(common, det.den);
    if (r.leading_term_coefficient() < 0) {
        r = -r;
        fbar = -fbar;
    }
    if (!prem_chain(f * fbar - r, algebra.chain).remainder.is_zero())
        throw std::logic_error("pinvert: identity f * fbar = r failed to verify");
    return PseudoInverse{std::move(fbar), std::move(r)};
}

}  // namespace tridec
