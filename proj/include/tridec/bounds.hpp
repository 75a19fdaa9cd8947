#ifndef TRIDEC_BOUNDS_HPP
#define TRIDEC_BOUNDS_HPP

#include <string>
#include <vector>

#include "tridec/polynomial.hpp"

namespace tridec {

/// Decimal digits carried by the floating evaluator.
inline constexpr unsigned kBoundDigits = 50;

/// A bound evaluated along two independent paths.
///   rational: exact arithmetic with binary logs taken from a fixed-point
///             expansion (exact when every log argument is a power of two).
///   decimal:  MPFR at kBoundDigits digits, every operation rounded toward +inf.
struct BoundValue {
    Rational rational;
    bool exact = false;
    std::string decimal;

    /// measured <= bound. Uses the rational value when exact, else the decimal.
    bool admits(const Rational& measured) const;
    double approx() const;
    /// |decimal - rational| / rational, evaluated in MPFR.
    double path_gap() const;
};

/// (d+2)^{m+1} (log2(d+2))^{m-1}
BoundValue gamma_bound(unsigned d, unsigned m);

/// t (d+1)^{m-s}. Requires 1 <= s <= m.
Integer denom_exponent_bound(unsigned t, unsigned d, unsigned m, unsigned s);

/// (6d)^{m-s} (input_m + 7(d+2)^m (log2(d+2))^{m-1}). Requires s <= m.
BoundValue input_bound(unsigned s, unsigned m, unsigned d, const Rational& input_m);

/// 6(d+2)(16 d^s + 16 d log2(32d) + log2(d+2))
BoundValue c_of_s(unsigned s, unsigned d);

/// Per-s cap used to bound products of c_of_s: 678(d+2)d log2 d at s = 1,
/// 387(d+2)d^2 at s = 2, 242(d+2)d^s above.
BoundValue c_of_s_cap(unsigned s, unsigned d);

/// prod_{s=1..m} c_of_s(s, d) and its closed-form cap
/// (678*387/242^2)(242(d+2))^m d^{m(m+1)/2} log2 d.
BoundValue c_product(unsigned m, unsigned d);
BoundValue c_product_cap(unsigned m, unsigned d);

/// sum_{s=2..m} prod_{i=s..m} c_of_s(i, d) and its cap
/// (387*4/967)(242(d+2))^{m-1} d^{m(m+1)/2 - 1}.
BoundValue c_tail_sum(unsigned m, unsigned d);
BoundValue c_tail_sum_cap(unsigned m, unsigned d);

/// 26/5 * 242^m (d^2+2d)^m d^{m(m+1)/2} (max{d,d_f,d_h} + 7(d+2)^m (log2(d+2))^{m-1}) log2 d.
/// Height ceiling for polynomials built inside unmixed on m chain elements.
/// m and d below 2 are raised to 2: the formula is monotone in both and log2 1 = 0
/// would collapse it.
BoundValue output_height_bound(unsigned m, unsigned d, unsigned d_f, unsigned d_h);

struct DegreeBound {
    BoundValue B;
    /// log_d(B/n)/m^3 - 1/2
    BoundValue epsilon;
};

/// 26/5 n 242^m (d^{2m}+2d^m)^m d^{m^2(m+1)/2}
///   (max{d^m, r} + 7(d^m+2)^m (log2(d^m+2))^{m-1}) log2 d^m.
/// Requires d >= 2, m >= 2.
DegreeBound degree_bound_B(unsigned n, unsigned m, unsigned d, unsigned r);

/// binom(n, m) ((m+1) d^m + 1)^m. Requires 1 <= m <= n.
Integer component_bound(unsigned n, unsigned m, unsigned d);

/// Degree and height of the pseudo-remainder of f by a chain of m elements,
/// under two hypotheses: heights (chain heights <= d, height f <= t) and
/// degrees (chain degrees <= d, deg f <= t). ob_* from the denominator-exponent bound,
/// gm_* from the earlier bounds that ignore the chain structure.
struct GmCell {
    Integer ob;
    Integer gm;
};
struct GmTable {
    GmCell degree_height_column;
    GmCell degree_degree_column;
    GmCell height_height_column;
    GmCell height_degree_column;
};
GmTable gm_comparison(unsigned n, unsigned m, unsigned d, unsigned t);

/// One bound paired with a measured quantity.
struct BoundCheck {
    std::string name;
    BoundValue bound;
    Rational measured;
    bool pass = false;
};
BoundCheck check_bound(std::string name, const BoundValue& bound, const Rational& measured);

}  // namespace tridec

#endif
