#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "montype/error.hpp"
#include "oracles.hpp"

using namespace montype;
using testing::ideal_of;

TEST_SUITE("ideal") {
  TEST_CASE("minimal generators drop multiples and duplicates") {
    const auto i = ideal_of({{1, 2}, {1, 2, 3}});
    REQUIRE(i.size() == 1);
    CHECK(i[0].to_string() == "x1*x2");
    CHECK(ideal_of({{1, 2}, {2, 3}, {1, 3}}).size() == 3);
    const auto ex = ideal_of({{1, 2, 3}, {2, 4, 5}, {5, 6, 7}, {3, 6, 7}});
    CHECK(ex.size() == 4);
    CHECK(ex[0].to_string() == "x1*x2*x3");
    CHECK(ideal_of({{1, 2}, {3}, {1, 2}}).size() == 2);
  }

  TEST_CASE("minimal generators reject bad input") {
    CHECK_THROWS_AS(minimal_generators(std::vector<Monomial>{}), Error);
    const std::vector<Monomial> square{Monomial(3, {{1, 2}})};
    try {
      minimal_generators(square);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonSquarefreeInput);
    }
    const std::vector<Monomial> mixed{Monomial::from_support(3, std::vector<Var>{1}),
                                      Monomial::from_support(4, std::vector<Var>{2})};
    CHECK_THROWS_AS(minimal_generators(mixed), Error);
  }

  TEST_CASE("gcd and lcm") {
    const auto a = Monomial::from_support(7, std::vector<Var>{5, 6, 7});
    const auto b = Monomial::from_support(7, std::vector<Var>{3, 6, 7});
    const auto [g, l] = gcd_lcm(a, b);
    CHECK(g.to_string() == "x6*x7");
    CHECK(l.to_string() == "x3*x5*x6*x7");
    CHECK(gcd(a, a) == a);
    CHECK(lcm(a, a) == a);
    CHECK(gcd(Monomial::from_support(4, std::vector<Var>{1, 2}), Monomial::from_support(4, std::vector<Var>{3, 4})).is_one());
    CHECK_THROWS_AS(gcd(a, Monomial(3)), Error);
  }

  TEST_CASE("free variables") {
    CHECK(free_variables(ideal_of({{1, 2}, {2, 3}})) == std::vector<Var>{1, 3});
    CHECK(free_variables(ideal_of({{1, 2, 3}, {2, 4, 5}, {5, 6, 7}, {3, 6, 7}})) == std::vector<Var>{1, 4});
    CHECK(free_variables(ideal_of({{1, 2, 3}})) == std::vector<Var>{1, 2, 3});
  }

  TEST_CASE("substitute a unit") {
    const auto tilde = testing::fixture("ex65_tilde.ideal").ideal;
    const auto plain = testing::fixture("ex65_patched.cmplx").ideal;
    const auto unwrapped = substitute_unit(tilde, 13);
    CHECK(unwrapped.ambient() == 13);
    CHECK(unwrapped.generators().size() == plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i) CHECK(unwrapped[i].support() == plain[i].support());

    const auto i = ideal_of({{1, 2}, {2, 3}}, 4);
    CHECK(substitute_unit(i, 4) == i);
    const auto j = substitute_unit(i, 2);
    REQUIRE(j.size() == 2);
    CHECK(j[0].to_string() == "x1");
    CHECK(j[1].to_string() == "x3");
    CHECK_THROWS_AS(substitute_unit(ideal_of({{1}, {2, 3}}), 1), Error);
    CHECK_THROWS_AS(substitute_unit(i, 9), Error);
  }

  TEST_CASE("random properties") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const auto facets = oracle::random_clutter(rng, 6, 8);
      const auto ideal = ideal_of(facets, 8);
      CHECK(free_variables(ideal) == oracle::free_variables(ideal));

      // gcd * lcm = a * b
      for (std::size_t a = 0; a < ideal.size(); ++a) {
        for (std::size_t b = 0; b < ideal.size(); ++b) {
          const auto [g, l] = gcd_lcm(ideal[a], ideal[b]);
          CHECK(g * l == ideal[a] * ideal[b]);
        }
      }

      // idempotent and order-insensitive
      auto gens = ideal.generators();
      CHECK(minimal_generators(gens) == ideal);
      std::shuffle(gens.begin(), gens.end(), rng);
      gens.push_back(gens.front());
      CHECK(minimal_generators(gens).same_generators(ideal));

      // substitution commutes with minimalization (when no unit appears)
      const Var v = std::uniform_int_distribution<Var>(1, 8)(rng);
      try {
        const auto direct = substitute_unit(ideal, v);
        std::vector<Monomial> substituted;
        for (const auto& g : ideal.generators()) substituted.push_back(g.without(v));
        CHECK(minimal_generators(substituted).same_generators(direct));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnitGenerator);
      }
    }
  }
}
