#include <doctest.h>

#include "helpers.hpp"
#include "tridec/chains.hpp"
#include "tridec/decompose.hpp"
#include "tridec/oracle.hpp"

using namespace tridec;
using testing_util::P;
using testing_util::S;

namespace {

InputSystem sys(std::initializer_list<const char*> polys, std::size_t n) {
    InputSystem s{{}, n};
    for (const char* p : polys) s.polys.push_back(P(p));
    return s;
}

const IndexedChain* find_chain(const CandidateFamily& fam, std::vector<Var> free) {
    for (const auto& c : fam.chains)
        if (c.free == free) return &c;
    return nullptr;
}

Polynomial redundant_example(unsigned D) {
    Polynomial a(1), b(1);
    for (unsigned k = 1; k <= D; ++k) {
        a *= P("x1") - Polynomial(int(k));
        b *= P("x2") - Polynomial(int(k));
    }
    return a * b;
}

}  // namespace

TEST_CASE("combining the input with a new variable") {
    CHECK(S(combine_input(sys({"x1^2-x2"}, 2))) == "-x2 + x1^2");
    CHECK(combine_input(sys({"x1", "x2"}, 2)) == P("x1 + x2*x3"));
    CHECK(combine_input(sys({"x1", "x2", "x1*x2"}, 2)) == P("x1 + x2*x3 + x1*x2*x3^2"));
}

TEST_CASE("generic combinations") {
    auto s = sys({"x1", "x2", "x1*x2-1"}, 2);
    auto id = generic_combination(s, 3, 0);
    CHECK(id.polys == s.polys);
    auto one = generic_combination(sys({"x1", "x2"}, 2), {{Rational(1), Rational(1)}});
    REQUIRE(one.polys.size() == 1);
    CHECK(one.polys[0] == P("x1+x2"));
    auto a = generic_combination(s, 4, 9), b = generic_combination(s, 4, 9);
    CHECK(a.polys == b.polys);
    // every common zero of the inputs is a zero of each combination

    auto split = sys({"(x1-1)*(x2-2)", "(x1-3)*x2"}, 2);
    for (const auto& q : generic_combination(split, 3, 5).polys) {
        CHECK(q.evaluate_all({1, 0}) == 0);
        CHECK(q.evaluate_all({3, 2}) == 0);
    }
}

TEST_CASE("radical part") {
    CHECK(radical_part(P("(x1-1)^2*(x2+1)^3*x1")) == P("(x1-1)*(x2+1)*x1"));
    CHECK(radical_part(P("4*x1^2")) == P("x1"));
    CHECK(radical_part(P("(x1*x2-1)^2*(x1+x2)")) == P("(x1*x2-1)*(x1+x2)").primitive_integer());
}

TEST_CASE("candidate chains") {
    auto one = candidate_chains(sys({"x1"}, 1));
    REQUIRE(one.chains.size() == 1);
    CHECK(one.chains[0].chain == std::vector<Polynomial>{P("x1")});

    auto red = candidate_chains(sys({"(x1-1)*(x2-1)"}, 2));
    const auto* c1 = find_chain(red, {0});
    const auto* c2 = find_chain(red, {1});
    const auto* c0 = find_chain(red, {});
    REQUIRE(c1);
    REQUIRE(c2);
    REQUIRE(c0);
    CHECK(c1->chain == std::vector<Polynomial>{P("(x1-1)*(x2-1)")});
    CHECK(c2->chain == c1->chain);
    REQUIRE(c0->chain.size() == 2);
    CHECK(try_divide(c0->chain[0], P("x1-1")).has_value());
    CHECK(try_divide(c0->chain[1], P("x2-1")).has_value());
    CHECK(c0->chain[0].variable_span() == 1);
    CHECK(!c0->chain[1].involves(0));

    auto three = candidate_chains(sys({"x1*x2", "x1*x3"}, 3));
    const auto* c = find_chain(three, {0});
    REQUIRE(c);
    auto order = order_for(c->free, 3);
    std::vector<Polynomial> local;
    for (const auto& g : c->chain) local.push_back(to_local(g, order));
    CHECK(is_normalized(local, 1));
    CHECK(rep_membership(to_local(P("x1*x2"), order), local));
    CHECK(rep_membership(to_local(P("x1*x3"), order), local));
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(triangular_decompose(sys({"0"}, 2)), std::invalid_argument);
    auto d = triangular_decompose(sys({"x1", "3"}, 2));
    CHECK(d.inconsistent);
    CHECK(d.components.empty());
    CHECK_THROWS_AS(triangular_decompose(sys({"x3"}, 2)), std::invalid_argument);
}

TEST_CASE("univariate decompositions") {
    auto d = triangular_decompose(sys({"x1"}, 1));
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].chain == std::vector<Polynomial>{P("x1")});

    auto d2 = triangular_decompose(sys({"(x1-1)*(x1-2)"}, 1));
    REQUIRE(d2.components.size() == 1);
    CHECK(d2.components[0].chain == std::vector<Polynomial>{P("(x1-1)*(x1-2)")});
    auto pts = chain_points(d2.components[0].chain, d2.components[0].order);
    REQUIRE(pts);
    CHECK(pts->size() == 2);
}

TEST_CASE("redundant coverage of the crossing points") {
    for (unsigned D : {1u, 2u}) {
        InputSystem s{{redundant_example(D)}, 2};
        auto split = factor_split_linear(s);
        REQUIRE(split);
        auto truth = split_linear_solve(*split);
        CHECK(truth.degree() == 2 * D);
        auto d = triangular_decompose(s);
        CHECK(d.failures.empty());
        for (const auto& c : d.components) {
            std::vector<Polynomial> local;
            for (const auto& g : c.chain) local.push_back(to_local(g, c.order));
            CHECK(std::holds_alternative<ChainCertificate>(is_squarefree_chain(local)));
        }
        auto rep = verify_decomposition(d, s, truth);
        CHECK(rep.sound);
        CHECK(rep.complete);
        CHECK(rep.redundant_points >= D * D);
        CHECK(rep.samples_checked >= 10 * truth.components.size());
    }
}

TEST_CASE("decompositions of small split systems are sound and complete") {
    std::vector<InputSystem> systems{
        sys({"(x1-1)*(x2-2)", "(x1-3)*x2"}, 2),
        sys({"x1*x2", "x1*x3"}, 3),
        sys({"(x1-1)*(x2-1)", "(x1-1)*(x2-2)"}, 2),
        sys({"x1*(x2-1)", "x2*(x3+1)", "x3*(x1-2)"}, 3),
    };
    for (const auto& s : systems) {
        auto split = factor_split_linear(s);
        REQUIRE(split);
        auto truth = split_linear_solve(*split);
        auto d = triangular_decompose(s);
        CHECK(d.failures.empty());
        auto rep = verify_decomposition(d, s, truth);
        CHECK(rep.sound);
        CHECK(rep.complete);
        for (const auto& f : rep.failures) MESSAGE(f);
    }
}
