#include "tridec/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <type_traits>

namespace tridec {

namespace {

// 50 decimal digits need 167 bits; a few extra absorb rounding in long products.
constexpr mpfr_prec_t kPrecision = 176;
constexpr unsigned kLogBits = 200;

class Mp {
public:
    Mp() { mpfr_init2(v_, kPrecision); mpfr_set_ui(v_, 0, MPFR_RNDU); }
    explicit Mp(const Rational& q) : Mp() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDU); }
    Mp(const Mp& o) : Mp() { mpfr_set(v_, o.v_, MPFR_RNDU); }
    Mp& operator=(const Mp& o) {
        mpfr_set(v_, o.v_, MPFR_RNDU);
        return *this;
    }
    ~Mp() { mpfr_clear(v_); }

    friend Mp operator+(const Mp& a, const Mp& b) {
        Mp r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDU);
        return r;
    }
    friend Mp operator-(const Mp& a, const Mp& b) {
        Mp r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDU);
        return r;
    }
    friend Mp operator*(const Mp& a, const Mp& b) {
        Mp r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDU);
        return r;
    }
    friend Mp operator/(const Mp& a, const Mp& b) {
        Mp r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDU);
        return r;
    }
    Mp log2() const {
        Mp r;
        mpfr_log2(r.v_, v_, MPFR_RNDU);
        return r;
    }

    std::string decimal() const {
        if (mpfr_zero_p(v_)) return "0";
        mpfr_exp_t exp = 0;
        char* raw = mpfr_get_str(nullptr, &exp, 10, kBoundDigits, v_, MPFR_RNDU);
        std::string digits(raw);
        mpfr_free_str(raw);
        bool negative = !digits.empty() && digits[0] == '-';
        if (negative) digits.erase(0, 1);
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out = negative ? "-" : "";
        out += digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        long e = static_cast<long>(exp) - 1;
        if (e != 0) out += "e" + std::to_string(e);
        return out;
    }

    mpfr_t v_;
};

struct FloatOps {
    using T = Mp;
    T num(const Rational& q) { return Mp(q); }
    T log2(const T& x) { return x.log2(); }
};

std::optional<unsigned long> exact_log2(const Integer& x) {
    if (x <= 0) return std::nullopt;
    std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    if (mpz_scan1(x.get_mpz_t(), 0) != bits - 1) return std::nullopt;
    return bits - 1;
}

// Truncated binary expansion of log2(x) for an integer x >= 1: returns floor(2^bits log2 x).
Integer log2_fixed(const Integer& x) {
    std::size_t e = mpz_sizeinbase(x.get_mpz_t(), 2) - 1;
    const unsigned guard = kLogBits + 64;
    // y = x / 2^e in [1, 2), scaled by 2^guard.
    Integer y = x;
    if (guard >= e)
        y <<= (guard - e);
    else
        y >>= (e - guard);
    Integer two = Integer(1) << (guard + 1);
    Integer result = Integer(e);
    for (unsigned i = 0; i < kLogBits; ++i) {
        y = (y * y) >> guard;
        result <<= 1;
        if (y >= two) {
            y >>= 1;
            result += 1;
        }
    }
    return result;
}

struct RationalOps {
    using T = Rational;
    bool exact = true;
    T num(const Rational& q) { return q; }
    T log2(const T& x) {
        if (x <= 0) throw std::domain_error("log2 of a nonpositive value");
        Integer p = x.get_num();
        Integer q = x.get_den();
        auto ep = exact_log2(p);
        auto eq = exact_log2(q);
        if (ep && eq) return Rational(Integer(*ep)) - Rational(Integer(*eq));
        exact = false;
        Integer scale = Integer(1) << kLogBits;
        // Upper estimate of log2 p minus lower estimate of log2 q.
        Integer hi = ep ? Integer(Integer(*ep) * scale) : Integer(log2_fixed(p) + 1);
        Integer lo = eq ? Integer(Integer(*eq) * scale) : log2_fixed(q);
        Rational r(hi - lo, scale);
        r.canonicalize();
        return r;
    }
};

template <class T>
T power(const T& base, unsigned e) {
    T r = base;
    if (e == 0) return T(base / base);
    for (unsigned i = 1; i < e; ++i) r = r * base;
    return r;
}

Rational q(const Integer& v) { return Rational(v); }

Integer ipow(unsigned long b, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

template <class F>
BoundValue evaluate(F&& formula) {
    BoundValue out;
    RationalOps rops;
    out.rational = formula(rops);
    out.exact = rops.exact;
    FloatOps fops;
    out.decimal = formula(fops).decimal();
    return out;
}

template <class Ops>
typename Ops::T gamma_formula(Ops& ops, unsigned d, unsigned m) {
    typename Ops::T a = ops.num(q(d + 2));
    typename Ops::T r = power(a, m + 1);
    if (m >= 2) r = r * power(ops.log2(a), m - 1);
    return r;
}

// 7 (a)^m (log2 a)^{m-1}
template <class Ops>
typename Ops::T tail_term(Ops& ops, const Integer& a, unsigned m) {
    typename Ops::T base = ops.num(q(a));
    typename Ops::T r = ops.num(7) * power(base, m);
    if (m >= 2) r = r * power(ops.log2(base), m - 1);
    return r;
}

template <class Ops>
typename Ops::T c_formula(Ops& ops, unsigned s, unsigned d) {
    typename Ops::T inner = ops.num(q(16 * ipow(d, s))) + ops.num(q(Integer(16 * d))) * ops.log2(ops.num(q(Integer(32 * d)))) +
                 ops.log2(ops.num(q(Integer(d + 2))));
    return ops.num(q(Integer(6 * (d + 2)))) * inner;
}

template <class Ops>
typename Ops::T c_cap_formula(Ops& ops, unsigned s, unsigned d) {
    typename Ops::T base = ops.num(q(Integer(d + 2) * ipow(d, s)));
    if (s == 1) return ops.num(678) * base * ops.log2(ops.num(q(Integer(d))));
    if (s == 2) return ops.num(387) * base;
    return ops.num(242) * base;
}

}  // namespace

bool BoundValue::admits(const Rational& measured) const {
    if (exact) return measured <= rational;
    mpfr_t b, m;
    mpfr_init2(b, kPrecision + 32);
    mpfr_init2(m, kPrecision + 32);
    mpfr_set_str(b, decimal.c_str(), 10, MPFR_RNDU);
    mpfr_set_q(m, measured.get_mpq_t(), MPFR_RNDU);
    bool ok = mpfr_cmp(m, b) <= 0;
    mpfr_clear(b);
    mpfr_clear(m);
    return ok;
}

double BoundValue::approx() const { return std::strtod(decimal.c_str(), nullptr); }

double BoundValue::path_gap() const {
    mpfr_t b, r;
    mpfr_init2(b, kPrecision + 32);
    mpfr_init2(r, kPrecision + 32);
    mpfr_set_str(b, decimal.c_str(), 10, MPFR_RNDN);
    mpfr_set_q(r, rational.get_mpq_t(), MPFR_RNDN);
    double gap;
    if (mpfr_zero_p(r)) {
        gap = mpfr_zero_p(b) ? 0.0 : 1.0;
    } else {
        mpfr_sub(b, b, r, MPFR_RNDN);
        mpfr_div(b, b, r, MPFR_RNDN);
        gap = std::fabs(mpfr_get_d(b, MPFR_RNDN));
    }
    mpfr_clear(b);
    mpfr_clear(r);
    return gap;
}

BoundValue gamma_bound(unsigned d, unsigned m) {
    return evaluate([&](auto& ops) { return gamma_formula(ops, d, m); });
}

Integer denom_exponent_bound(unsigned t, unsigned d, unsigned m, unsigned s) {
    if (s < 1 || s > m) throw std::invalid_argument("denom_exponent_bound: need 1 <= s <= m");
    return Integer(t) * ipow(d + 1, m - s);
}

BoundValue input_bound(unsigned s, unsigned m, unsigned d, const Rational& input_m) {
    if (s > m) throw std::invalid_argument("input_bound: need s <= m");
    return evaluate([&](auto& ops) {
        using T = typename std::remove_reference_t<decltype(ops)>::T;
        T pre = power(ops.num(q(Integer(6 * d))), m - s);
        return T(pre * (ops.num(input_m) + tail_term(ops, Integer(d + 2), m)));
    });
}

BoundValue c_of_s(unsigned s, unsigned d) {
    return evaluate([&](auto& ops) { return c_formula(ops, s, d); });
}

BoundValue c_of_s_cap(unsigned s, unsigned d) {
    return evaluate([&](auto& ops) { return c_cap_formula(ops, s, d); });
}

BoundValue c_product(unsigned m, unsigned d) {
    return evaluate([&](auto& ops) {
        using T = typename std::remove_reference_t<decltype(ops)>::T;
        T r = ops.num(1);
        for (unsigned s = 1; s <= m; ++s) r = r * c_formula(ops, s, d);
        return r;
    });
}

BoundValue c_product_cap(unsigned m, unsigned d) {
    return evaluate([&](auto& ops) {
        using T = typename std::remove_reference_t<decltype(ops)>::T;
        T lead = ops.num(Rational(678 * 387, 242 * 242));
        return T(lead * power(ops.num(q(Integer(242 * (d + 2)))), m) * ops.num(q(ipow(d, m * (m + 1) / 2))) *
               ops.log2(ops.num(q(Integer(d)))));
    });
}

BoundValue c_tail_sum(unsigned m, unsigned d) {
    return evaluate([&](auto& ops) {
        using T = typename std::remove_reference_t<decltype(ops)>::T;
        T sum = ops.num(0);
        for (unsigned s = 2; s <= m; ++s) {
            T prod = ops.num(1);
            for (unsigned i = s; i <= m; ++i) prod = prod * c_formula(ops, i, d);
            sum = sum + prod;
        }
        return sum;
    });
}

BoundValue c_tail_sum_cap(unsigned m, unsigned d) {
    if (m < 1) throw std::invalid_argument("c_tail_sum_cap: need m >= 1");
    return evaluate([&](auto& ops) {
        using T = typename std::remove_reference_t<decltype(ops)>::T;
        T lead = ops.num(Rational(387 * 4, 967));
        return T(lead * power(ops.num(q(Integer(242 * (d + 2)))), m - 1) * ops.num(q(ipow(d, m * (m + 1) / 2 - 1))));
    });
}

BoundValue output_height_bound(unsigned m, unsigned d, unsigned d_f, unsigned d_h) {
    m = std::max(m, 2u);
    d = std::max(d, 2u);
    unsigned top = std::max({d, d_f, d_h});
    return evaluate([&](auto& ops) {
        using T = typename std::remove_reference_t<decltype(ops)>::T;
        T r = ops.num(Rational(26, 5)) * power(ops.num(242), m) * power(ops.num(q(Integer(d * d + 2 * d))), m) *
                 ops.num(q(ipow(d, m * (m + 1) / 2)));
        r = r * (ops.num(q(Integer(top))) + tail_term(ops, Integer(d + 2), m));
        return T(r * ops.log2(ops.num(q(Integer(d)))));
    });
}

DegreeBound degree_bound_B(unsigned n, unsigned m, unsigned d, unsigned r) {
    if (d < 2 || m < 2) throw std::invalid_argument("degree_bound_B: need d >= 2 and m >= 2");
    if (n < 1) throw std::invalid_argument("degree_bound_B: need n >= 1");
    Integer dm = ipow(d, m);
    auto b_formula = [&](auto& ops) {
        using T = typename std::remove_reference_t<decltype(ops)>::T;
        T v = ops.num(Rational(26, 5)) * ops.num(q(Integer(n))) * power(ops.num(242), m) *
                 power(ops.num(q(ipow(d, 2 * m) + 2 * dm)), m) * ops.num(q(ipow(d, m * m * (m + 1) / 2)));
        Integer top = std::max(dm, Integer(r));
        v = v * (ops.num(q(top)) + tail_term(ops, dm + 2, m));
        return T(v * ops.log2(ops.num(q(dm))));
    };
    auto eps_formula = [&](auto& ops) {
        using T = typename std::remove_reference_t<decltype(ops)>::T;
        T b = b_formula(ops);
        T logd = ops.log2(b / ops.num(q(Integer(n)))) / ops.log2(ops.num(q(Integer(d))));
        return T(logd / ops.num(q(Integer(m * m * m))) - ops.num(Rational(1, 2)));
    };
    DegreeBound out;
    out.B = evaluate(b_formula);
    out.epsilon = evaluate(eps_formula);
    return out;
}

Integer component_bound(unsigned n, unsigned m, unsigned d) {
    if (m < 1 || m > n) throw std::invalid_argument("component_bound: need 1 <= m <= n");
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, m);
    Integer base = Integer(m + 1) * ipow(d, m) + 1;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), m);
    return binom * p;
}

GmTable gm_comparison(unsigned n, unsigned m, unsigned d, unsigned t) {
    Integer dp1 = ipow(d + 1, m);
    Integer ndp1 = ipow(static_cast<unsigned long>(n) * d + 1, m);
    Integer nt = Integer(n) * t;
    GmTable g;
    g.degree_height_column = {nt * dp1, (nt + 1) * ndp1};
    g.degree_degree_column = {nt * dp1, Integer(t + 1) * dp1};
    g.height_height_column = {Integer(t) * dp1, (nt + 1) * ndp1};
    g.height_degree_column = {Integer(t) * dp1, Integer(t + 1) * dp1};
    return g;
}

BoundCheck check_bound(std::string name, const BoundValue& bound, const Rational& measured) {
    BoundCheck c{std::move(name), bound, measured, false};
    c.pass = bound.admits(measured);
    return c;
}

}  // namespace tridec
