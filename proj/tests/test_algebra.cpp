#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "tridec/algebra.hpp"
#include "tridec/pseudo.hpp"

using namespace tridec;
using testing_util::P;

namespace {

std::vector<Polynomial> C(std::initializer_list<const char*> polys) {
    std::vector<Polynomial> out;
    for (const char* s : polys) out.push_back(P(s));
    return out;
}

AlgebraElement random_integral(std::mt19937& rng, const QuotientAlgebra& alg, unsigned deg) {
    AlgebraElement e;
    for (std::size_t i = 0; i < alg.dimension(); ++i)
        e.coords.emplace_back(testing_util::random_poly(rng, alg.l, deg, 4, 0.6));
    return e;
}

}  // namespace

TEST_CASE("algebra of x2^2 - x1 over k(x1)") {
    auto alg = build_algebra_checked(C({"x2^2 - x1"}), 1);
    REQUIRE(alg.dimension() == 2);
    CHECK(alg.basis[0] == std::vector<unsigned>{0});
    CHECK(alg.basis[1] == std::vector<unsigned>{1});
    CHECK(alg.table[1][1][0] == Fraction(P("x1")));
    CHECK(alg.table[1][1][1].is_zero());
    CHECK(gamma(alg) == 1);
}

TEST_CASE("zero-dimensional algebras have scalar constants") {
    auto alg = build_algebra_checked(C({"x1^2 - 2"}), 0);
    CHECK(alg.table[1][1][0] == Fraction(P("2")));
    CHECK(gamma(alg) == 0);

    auto alg2 = build_algebra_checked(C({"x1^2 - 2", "x2^2 - x1"}), 0);
    CHECK(alg2.dimension() == 4);
    for (const auto& row : alg2.table)
        for (const auto& entry : row)
            for (const auto& c : entry) CHECK(c.num.is_constant());
    CHECK(gamma(alg2) == 0);
}

TEST_CASE("graded lexicographic basis") {
    auto alg = build_algebra_checked(C({"x1^2 - 2", "x2^3 - x1"}), 0);
    std::vector<std::vector<unsigned>> expected{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {1, 2}};
    CHECK(alg.basis == expected);
}

TEST_CASE("chains outside the normalized shape are rejected") {
    // initials must live in the free variables, which also makes the chain regular
    CHECK_THROWS_AS(build_algebra(C({"x1^2 - x1", "x1*x2 - 1"}), 0), std::invalid_argument);
    CHECK(std::holds_alternative<QuotientAlgebra>(build_algebra(C({"x1*x2 - 1"}), 1)));
    CHECK_THROWS_AS(build_algebra(C({"x2^2 - x1"}), 0), std::invalid_argument);
}

TEST_CASE("table products agree with reduction") {
    std::vector<std::vector<Polynomial>> chains{
        C({"x2^2 - x1"}),
        C({"x1*x2^2 - x2 + 1", "(x1 + 1)*x3^2 - x2*x3 + x1"}),
        C({"x2^3 - x1*x2 + 2", "x3^2 + x2*x3 - x1^2"}),
    };
    std::mt19937 rng(8);
    for (const auto& chain : chains) {
        auto alg = build_algebra_checked(chain, 1);
        int pairs = 0;
        for (int trial = 0; trial < 100; ++trial) {
            AlgebraElement a = random_integral(rng, alg, 1), b = random_integral(rng, alg, 1);
            AlgebraElement prod = algebra_multiply(a, b, alg);
            auto [pa, da] = to_polynomial(a, alg);
            auto [pb, db] = to_polynomial(b, alg);
            AlgebraElement direct = to_element(pa * pb, alg);
            CHECK(da.is_constant());
            CHECK(db.is_constant());
            for (std::size_t k = 0; k < alg.dimension(); ++k)
                CHECK(prod.coords[k] * Fraction(da * db) == direct.coords[k]);
            ++pairs;
        }
        CHECK(pairs >= 100);
    }
}

TEST_CASE("product height stays within the pairwise inequality for integral elements") {
    auto chain = C({"x1*x2^2 - x2 + 1", "(x1 + 1)*x3^2 - x2*x3 + x1"});
    auto alg = build_algebra_checked(chain, 1);
    unsigned g = gamma(alg);
    std::mt19937 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        AlgebraElement a = random_integral(rng, alg, 2), b = random_integral(rng, alg, 2);
        AlgebraElement p = algebra_multiply(a, b, alg);
        CHECK(p.height() <= a.height() + b.height() + 2 * g);
    }
}

TEST_CASE("identity element") {
    auto alg = build_algebra_checked(C({"x2^2 - x1", "x3^2 - x2"}), 1);
    std::mt19937 rng(1);
    AlgebraElement b = random_integral(rng, alg, 2);
    AlgebraElement p = algebra_multiply(alg.one(), b, alg);
    for (std::size_t k = 0; k < alg.dimension(); ++k) CHECK(p.coords[k] == b.coords[k]);
}

TEST_CASE("pinvert") {
    auto alg = build_algebra_checked(C({"x2^2 - x1"}), 1);
    auto inv = pinvert(alg, P("x2"));
    REQUIRE(std::holds_alternative<PseudoInverse>(inv));
    CHECK(std::get<PseudoInverse>(inv).fbar == P("x2"));
    CHECK(std::get<PseudoInverse>(inv).r == P("x1"));

    auto one = pinvert(alg, P("1"));
    REQUIRE(std::holds_alternative<PseudoInverse>(one));
    CHECK(std::get<PseudoInverse>(one).fbar == P("1"));
    CHECK(std::get<PseudoInverse>(one).r == P("1"));

    auto zd = build_algebra_checked(C({"x1^2 - 1"}), 0);
    CHECK(std::holds_alternative<NotInvertible>(pinvert(zd, P("x1 - 1"))));
}

TEST_CASE("pinvert refuses exactly when the iterated resultant vanishes") {
    auto chain = C({"x1^2 - 3*x1 + 2", "x2^2 - x1*x2"});
    auto alg = build_algebra_checked(chain, 0);
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> c(-2, 2);
    int refused = 0, inverted = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial f = Polynomial(c(rng)) + Polynomial(c(rng)) * P("x1") + Polynomial(c(rng)) * P("x2") +
                       Polynomial(c(rng)) * P("x1*x2");
        if (f.is_zero()) continue;
        auto inv = pinvert(alg, f);
        bool regular = is_regular_modulo(f, chain);
        CHECK(std::holds_alternative<PseudoInverse>(inv) == regular);
        if (auto* pi = std::get_if<PseudoInverse>(&inv)) {
            CHECK(prem_chain(f * pi->fbar - pi->r, chain).remainder.is_zero());
            CHECK_FALSE(pi->r.is_zero());
            ++inverted;
        } else {
            ++refused;
        }
    }
    CHECK(refused > 0);
    CHECK(inverted > 0);
}

TEST_CASE("pinvert with non-integral structure constants") {
    auto chain = C({"x1*x2^2 - x2 + 1"});
    auto alg = build_algebra_checked(chain, 1);
    auto inv = pinvert(alg, P("x2 + x1"));
    REQUIRE(std::holds_alternative<PseudoInverse>(inv));
    const auto& pi = std::get<PseudoInverse>(inv);
    CHECK(pi.r.variable_span() <= 1);
    CHECK(prem_chain(P("x2 + x1") * pi.fbar - pi.r, chain).remainder.is_zero());
}
