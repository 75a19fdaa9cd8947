#include "tridec/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace tridec {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) { trim(); }

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::variable(Var v, std::uint32_t power) {
    std::vector<std::uint32_t> e(v + 1, 0);
    e[v] = power;
    return Monomial(std::move(e));
}

unsigned Monomial::total_degree() const {
    unsigned s = 0;
    for (auto e : exps_) s += e;
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::uint32_t> e(std::max(exps_.size(), other.exps_.size()), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
    for (std::size_t i = 0; i < other.exps_.size(); ++i) e[i] += other.exps_[i];
    Monomial m;
    m.exps_ = std::move(e);
    return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
    std::vector<std::uint32_t> e = exps_;
    for (std::size_t i = 0; i < other.exps_.size(); ++i) {
        if (i >= e.size() || e[i] < other.exps_[i]) throw std::logic_error("monomial division: not divisible");
        e[i] -= other.exps_[i];
    }
    return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial& other) const {
    if (other.exps_.size() > exps_.size()) return false;
    for (std::size_t i = 0; i < other.exps_.size(); ++i)
        if (exps_[i] < other.exps_[i]) return false;
    return true;
}

Monomial Monomial::with_exponent(Var v, std::uint32_t e) const {
    std::vector<std::uint32_t> x = exps_;
    if (x.size() <= v) x.resize(v + 1, 0);
    x[v] = e;
    return Monomial(std::move(x));
}

int lex_compare(const Monomial& a, const Monomial& b) {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    if (ea.size() != eb.size()) return ea.size() > eb.size() ? 1 : -1;
    for (std::size_t i = ea.size(); i-- > 0;) {
        if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
    }
    return 0;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace_back(Monomial(), c);
}

Polynomial Polynomial::variable(Var v, std::uint32_t power) {
    return monomial(Monomial::variable(v, power), Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return lex_compare(a.first, b.first) > 0; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
        } else {
            if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.front().second;
}

std::optional<unsigned> Polynomial::degree(Var v) const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.first[v]);
    return d;
}

unsigned Polynomial::degree_or_zero(Var v) const { return degree(v).value_or(0); }

std::optional<unsigned> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
}

unsigned Polynomial::height() const {
    unsigned h = 0;
    for (const auto& t : terms_)
        for (auto e : t.first.exponents()) h = std::max<unsigned>(h, e);
    return h;
}

std::optional<Var> Polynomial::leader() const {
    // Terms are lex-descending with the highest variable most significant, so
    // the first term carries the longest exponent vector.
    if (terms_.empty() || terms_.front().first.is_one()) return std::nullopt;
    return terms_.front().first.size() - 1;
}

std::size_t Polynomial::variable_span() const {
    std::size_t s = 0;
    for (const auto& t : terms_) s = std::max(s, t.first.size());
    return s;
}

bool Polynomial::involves(Var v) const {
    for (const auto& t : terms_)
        if (t.first[v] > 0) return true;
    return false;
}

std::vector<Polynomial> Polynomial::coefficients(Var v) const {
    if (terms_.empty()) return {};
    std::vector<std::vector<Term>> buckets(degree_or_zero(v) + 1);
    for (const auto& t : terms_) {
        auto e = t.first[v];
        buckets[e].emplace_back(t.first.with_exponent(v, 0), t.second);
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
}

Polynomial Polynomial::coefficient(Var v, unsigned k) const {
    std::vector<Term> b;
    for (const auto& t : terms_)
        if (t.first[v] == k) b.emplace_back(t.first.with_exponent(v, 0), t.second);
    return from_terms(std::move(b));
}

Polynomial Polynomial::leading_coefficient(Var v) const {
    if (terms_.empty()) return {};
    return coefficient(v, degree_or_zero(v));
}

Polynomial Polynomial::initial() const {
    auto l = leader();
    if (!l) return *this;
    return leading_coefficient(*l);
}

Polynomial Polynomial::from_coefficients(Var v, const std::vector<Polynomial>& coeffs) {
    std::vector<Term> all;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (const auto& t : coeffs[k].terms_)
            all.emplace_back(t.first * Monomial::variable(v, static_cast<std::uint32_t>(k)), t.second);
    return from_terms(std::move(all));
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

namespace {

std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, bool subtract) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = -1;
        else if (j == b.size()) c = 1;
        else c = lex_compare(a[i].first, b[j].first);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
            ++j;
        } else {
            Rational s = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
            if (s != 0) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].first, b.terms_[0].second);
    // Integer coefficients scaled by the denominator lcms, summed with addmul
    // per product monomial; one rational division per output term.
    auto scaled = [](const std::vector<Polynomial::Term>& ts, Integer& den) {
        den = 1;
        for (const auto& t : ts) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
        std::vector<Integer> out;
        out.reserve(ts.size());
        for (const auto& t : ts) out.push_back(Integer(t.second.get_num() * (den / t.second.get_den())));
        return out;
    };
    Integer da, db;
    std::vector<Integer> ca = scaled(a.terms_, da), cb = scaled(b.terms_, db);
    Rational den(Integer(da * db));
    Polynomial p;
    Integer acc;

    // Exponents packed into one word, highest variable in the top bits, so
    // integer order is lex order.
    std::size_t nv = 0;
    for (const auto* ts : {&a.terms_, &b.terms_})
        for (const auto& t : *ts) nv = std::max(nv, t.first.size());
    std::vector<unsigned> width(nv, 1);
    unsigned total_bits = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        std::uint64_t top = std::uint64_t(a.degree_or_zero(v)) + b.degree_or_zero(v);
        while ((std::uint64_t(1) << width[v]) <= top) ++width[v];
        total_bits += width[v];
    }
    if (total_bits <= 64) {
        std::vector<unsigned> shift(nv, 0);
        for (std::size_t v = 1; v < nv; ++v) shift[v] = shift[v - 1] + width[v - 1];
        auto pack = [&](const Monomial& m) {
            std::uint64_t k = 0;
            for (std::size_t v = 0; v < m.size(); ++v) k |= std::uint64_t(m[v]) << shift[v];
            return k;
        };
        std::vector<std::uint64_t> ka, kb;
        for (const auto& t : a.terms_) ka.push_back(pack(t.first));
        for (const auto& t : b.terms_) kb.push_back(pack(t.first));
        if (ka.size() > kb.size()) {
            std::swap(ka, kb);
            std::swap(ca, cb);
        }
        // Row i walks b in order; rows are merged through a max-heap on the
        // packed key, so output terms arrive lex-descending.
        std::vector<std::uint32_t> next(ka.size(), 0);
        std::vector<std::pair<std::uint64_t, std::uint32_t>> heap;
        heap.reserve(ka.size());
        for (std::uint32_t i = 0; i < ka.size(); ++i) heap.emplace_back(ka[i] + kb[0], i);
        std::make_heap(heap.begin(), heap.end());
        std::vector<std::uint32_t> exps(nv);
        while (!heap.empty()) {
            std::uint64_t key = heap.front().first;
            acc = 0;
            while (!heap.empty() && heap.front().first == key) {
                std::pop_heap(heap.begin(), heap.end());
                std::uint32_t i = heap.back().second;
                mpz_addmul(acc.get_mpz_t(), ca[i].get_mpz_t(), cb[next[i]].get_mpz_t());
                if (++next[i] < kb.size()) {
                    heap.back().first = ka[i] + kb[next[i]];
                    std::push_heap(heap.begin(), heap.end());
                } else {
                    heap.pop_back();
                }
            }
            if (acc != 0) {
                for (std::size_t v = 0; v < nv; ++v)
                    exps[v] = static_cast<std::uint32_t>((key >> shift[v]) & ((std::uint64_t(1) << width[v]) - 1));
                Rational c(acc);
                c /= den;
                p.terms_.emplace_back(Monomial(exps), std::move(c));
            }
        }
        return p;
    }

    struct Prod {
        Monomial m;
        std::uint32_t i, j;
    };
    std::vector<Prod> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (std::uint32_t i = 0; i < a.terms_.size(); ++i)
        for (std::uint32_t j = 0; j < b.terms_.size(); ++j) prods.push_back({a.terms_[i].first * b.terms_[j].first, i, j});
    std::sort(prods.begin(), prods.end(), [](const Prod& x, const Prod& y) { return lex_compare(x.m, y.m) > 0; });
    for (std::size_t k = 0; k < prods.size();) {
        acc = 0;
        std::size_t e = k;
        for (; e < prods.size() && prods[e].m == prods[k].m; ++e)
            mpz_addmul(acc.get_mpz_t(), ca[prods[e].i].get_mpz_t(), cb[prods[e].j].get_mpz_t());
        if (acc != 0) {
            Rational c(acc);
            c /= den;
            p.terms_.emplace_back(std::move(prods[k].m), std::move(c));
        }
        k = e;
    }
    return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
    Polynomial p;
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.emplace_back(t.first * m, t.second * c);
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::evaluate(Var v, const Rational& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        auto e = t.first[v];
        Rational c = t.second;
        if (e > 0) {
            Rational pw;
            mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
            mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
            pw.canonicalize();
            c *= pw;
        }
        out.emplace_back(t.first.with_exponent(v, 0), c);
    }
    return from_terms(std::move(out));
}

Rational Polynomial::evaluate_all(const std::vector<Rational>& point) const {
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational c = t.second;
        const auto& ex = t.first.exponents();
        for (std::size_t v = 0; v < ex.size() && c != 0; ++v) {
            if (ex[v] == 0) continue;
            Rational val = v < point.size() ? point[v] : Rational(0);
            for (std::uint32_t k = 0; k < ex[v]; ++k) c *= val;
        }
        sum += c;
    }
    return sum;
}

Polynomial Polynomial::rename(const std::vector<Var>& mapping) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        const auto& ex = t.first.exponents();
        std::vector<std::uint32_t> ne;
        for (std::size_t v = 0; v < ex.size(); ++v) {
            if (ex[v] == 0) continue;
            Var target = v < mapping.size() ? mapping[v] : v;
            if (ne.size() <= target) ne.resize(target + 1, 0);
            ne[target] += ex[v];
        }
        out.emplace_back(Monomial(std::move(ne)), t.second);
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::primitive_integer() const {
    if (terms_.empty()) return {};
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.front().second < 0) scale = -scale;
    Polynomial p = *this;
    p *= scale;
    return p;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return {};
    Polynomial p = *this;
    p *= Rational(1) / terms_.front().second;
    return p;
}

std::vector<Polynomial> Polynomial::split_auxiliary(Var first_aux) const {
    std::map<Monomial, std::vector<Term>, LexGreater> groups;
    for (const auto& t : terms_) {
        const auto& ex = t.first.exponents();
        std::vector<std::uint32_t> low(ex.begin(), ex.begin() + std::min<std::size_t>(ex.size(), first_aux));
        std::vector<std::uint32_t> high(ex.size() > first_aux ? ex.size() : 0, 0);
        for (std::size_t v = first_aux; v < ex.size(); ++v) high[v] = ex[v];
        groups[Monomial(std::move(high))].emplace_back(Monomial(std::move(low)), t.second);
    }
    std::vector<Polynomial> out;
    out.reserve(groups.size());
    for (auto& [key, ts] : groups) out.push_back(from_terms(std::move(ts)));
    return out;
}

// ---------------------------------------------------------------------------

std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (b.term_count() == 1) {
        const auto& [bm, bc] = b.terms().front();
        std::vector<Polynomial::Term> out;
        out.reserve(a.term_count());
        Rational inv = Rational(1) / bc;
        for (const auto& [m, c] : a.terms()) {
            if (!m.divisible_by(bm)) return std::nullopt;
            out.emplace_back(m / bm, c * inv);
        }
        return Polynomial::from_terms(std::move(out));
    }
    Polynomial r = a;
    std::vector<Polynomial::Term> q;
    const Monomial& lm = b.leading_monomial();
    Rational inv = Rational(1) / b.leading_term_coefficient();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.terms().front();
        if (!rm.divisible_by(lm)) return std::nullopt;
        Monomial qm = rm / lm;
        Rational qc = rc * inv;
        r -= b.mul_monomial(qm, qc);
        q.emplace_back(std::move(qm), std::move(qc));
    }
    return Polynomial::from_terms(std::move(q));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto q = try_divide(a, b);
    if (!q) throw std::logic_error("divide_exact: divisor does not divide dividend");
    return *q;
}

Polynomial derivative(const Polynomial& f, Var x, unsigned k) {
    std::vector<Polynomial::Term> out;
    for (const auto& [m, c] : f.terms()) {
        auto e = m[x];
        if (e < k) continue;
        Rational nc = c;
        for (unsigned i = 0; i < k; ++i) nc *= static_cast<long>(e - i);
        out.emplace_back(m.with_exponent(x, e - k), nc);
    }
    return Polynomial::from_terms(std::move(out));
}

namespace {

// Pseudo-remainder with the full exponent; local helper for the gcd so this
// file does not depend on the pseudo-division module.
Polynomial sparse_prem(const Polynomial& f, const Polynomial& g, Var x) {
    unsigned dg = g.degree_or_zero(x);
    Polynomial lc = g.leading_coefficient(x);
    Polynomial r = f;
    while (!r.is_zero() && r.degree_or_zero(x) >= dg) {
        unsigned dr = r.degree_or_zero(x);
        Polynomial lr = r.leading_coefficient(x);
        r = lc * r - (lr * Polynomial::variable(x, dr - dg)) * g;
    }
    return r;
}

std::optional<Var> top_variable(const Polynomial& a, const Polynomial& b) {
    auto la = a.leader();
    auto lb = b.leader();
    if (!la) return lb;
    if (!lb) return la;
    return std::max(*la, *lb);
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

Polynomial content_impl(const Polynomial& p, Var v) {
    Polynomial g;
    for (const auto& c : p.coefficients(v)) {
        if (c.is_zero()) continue;
        g = gcd_impl(g, c);
        if (g.is_constant() && !g.is_zero()) return Polynomial(1);
    }
    return g;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto top = top_variable(a, b);
    if (!top) return Polynomial(1);
    Var v = *top;
    if (!a.involves(v)) return gcd_impl(a, content_impl(b, v));
    if (!b.involves(v)) return gcd_impl(content_impl(a, v), b);
    Polynomial ca = content_impl(a, v);
    Polynomial cb = content_impl(b, v);
    Polynomial c = gcd_impl(ca, cb);
    Polynomial p = divide_exact(a, ca);
    Polynomial q = divide_exact(b, cb);
    if (p.degree_or_zero(v) < q.degree_or_zero(v)) std::swap(p, q);
    while (true) {
        Polynomial r = sparse_prem(p, q, v);
        p = std::move(q);
        if (r.is_zero()) break;
        if (!r.involves(v)) {
            p = Polynomial(1);
            break;
        }
        q = divide_exact(r, content_impl(r, v)).primitive_integer();
    }
    if (!p.involves(v)) return c.monic();
    p = divide_exact(p, content_impl(p, v));
    return (p * c).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return gcd_impl(a, b); }

Polynomial content(const Polynomial& p, Var v) { return content_impl(p, v); }

Polynomial primitive_part(const Polynomial& p, Var v) {
    if (p.is_zero()) return p;
    return divide_exact(p, content_impl(p, v));
}

Polynomial squarefree_part(const Polynomial& p, Var v) {
    if (p.is_zero() || !p.involves(v)) return p.is_zero() ? p : Polynomial(1);
    Polynomial pp = primitive_part(p, v);
    Polynomial g = gcd(pp, derivative(pp, v));
    return divide_exact(pp, g).primitive_integer();
}

}  // namespace tridec
