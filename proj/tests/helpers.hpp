#ifndef TRIDEC_TESTS_HELPERS_HPP
#define TRIDEC_TESTS_HELPERS_HPP

#include <random>
#include <string>

#include "tridec/polynomial.hpp"
#include "tridec/text.hpp"

namespace testing_util {

using tridec::Polynomial;
using tridec::Rational;
using tridec::Var;

// Parses with the standard order x1..x9 followed by y, z, w.
inline tridec::VariableOrder& default_order() {
    static tridec::VariableOrder order = [] {
        auto o = tridec::VariableOrder::standard(9);
        o.add("y");
        o.add("z");
        o.add("w");
        return o;
    }();
    return order;
}

inline Polynomial P(const std::string& s) { return tridec::parse_polynomial(s, default_order(), true, 1); }

inline std::string S(const Polynomial& p) { return tridec::to_string(p, default_order()); }

// Dense-ish random polynomial in variables [0, nvars) with per-variable degree
// at most deg and integer coefficients in [-cmax, cmax].
inline Polynomial random_poly(std::mt19937& rng, std::size_t nvars, unsigned deg, int cmax, double density = 0.5) {
    std::uniform_int_distribution<int> coef(-cmax, cmax);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    Polynomial out;
    std::vector<std::uint32_t> e(nvars, 0);
    while (true) {
        if (keep(rng) < density) {
            int c = coef(rng);
            if (c != 0) out += Polynomial::monomial(tridec::Monomial(e), Rational(c));
        }
        std::size_t i = 0;
        while (i < nvars && e[i] == deg) e[i++] = 0;
        if (i == nvars) break;
        ++e[i];
    }
    return out;
}

}  // namespace testing_util

#endif
