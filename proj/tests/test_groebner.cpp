#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "montype/error.hpp"
#include "montype/groebner.hpp"
#include "montype/linear_type.hpp"
#include "oracles.hpp"

using namespace montype;
using testing::ideal_of;

namespace {

std::vector<ReesElement> linear_part(const SquarefreeIdeal& ideal) {
  std::vector<ReesElement> out;
  for (const auto& r : linear_relations(ideal)) out.push_back(r.element);
  return out;
}

ReesElement s_polynomial(const ReesElement& f, const ReesElement& g) {
  const auto l = lcm(f.lead().mono, g.lead().mono);
  return f.times(Rational(1), l.quotient(f.lead().mono)) - g.times(Rational(1), l.quotient(g.lead().mono));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Overflow;
}

// Every structural promise of a returned basis.
void check_basis(const GroebnerBasis& gb, const std::vector<ReesElement>& gens) {
  for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
  for (std::size_t a = 0; a < gb.elements.size(); ++a) {
    const auto& e = gb.elements[a];
    CHECK(e.lead().coeff == Rational(1));
    CHECK(e.size() <= 2);
    CHECK(e.unit_coefficients());
    CHECK(e.t_degree() >= 1);
    if (gb.degree_cap) CHECK(e.t_degree() <= *gb.degree_cap);
    if (a > 0) {
      const auto& p = gb.elements[a - 1];
      CHECK((p.t_degree() < e.t_degree() || (p.t_degree() == e.t_degree() && p.lead().mono < e.lead().mono)));
    }
    for (std::size_t b = 0; b < gb.elements.size(); ++b) {
      if (a == b) continue;
      for (const auto& t : gb.elements[b].terms()) CHECK_FALSE(e.lead().mono.divides(t.mono));
    }
    for (std::size_t b = a + 1; b < gb.elements.size(); ++b) {
      const auto l = lcm(e.lead().mono, gb.elements[b].lead().mono);
      if (!gb.degree_cap || l.t_degree() <= *gb.degree_cap) {
        CHECK(normal_form(s_polynomial(e, gb.elements[b]), gb).is_zero());
      }
    }
  }
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("a single generator is its own basis") {
    const auto g = parse_rees_element("+x1*T2 -x3*T1", 3, 2);
    const auto gb = buchberger({g}, TermOrder{3, 2});
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == g);
    const auto scaled = buchberger({g.times(Rational(-3), ReesMonomial(3, 2))}, TermOrder{3, 2});
    CHECK(scaled.elements[0] == g);
  }

  TEST_CASE("the square example's Taylor relation survives") {
    const auto square = testing::fixture("ex42.ideal").ideal;
    const auto gb = buchberger(linear_part(square), term_order_for(square), 4);
    check_basis(gb, linear_part(square));
    const auto w = parse_rees_element("+x4*T1*T3 -x1*T2*T4", 7, 4);
    CHECK_FALSE(normal_form(w, gb).is_zero());
    CHECK_FALSE(oracle::in_linear_part(w, square));
  }

  TEST_CASE("graph cycles in degree two") {
    const auto c4 = testing::cycle_ideal(4);
    const auto gb4 = linear_part_basis(c4, 3);
    CHECK_FALSE(normal_form(parse_rees_element("+T1*T3 -T2*T4", 4, 4), gb4).is_zero());
    const auto c3 = testing::cycle_ideal(3);
    const auto gb3 = linear_part_basis(c3, 3);
    for (const auto& t : taylor_relations(c3, 2)) CHECK(normal_form(t.element, gb3).is_zero());
  }

  TEST_CASE("explicit combinations reduce to zero") {
    const auto ideal = testing::fixture("ex63.cmplx").ideal;
    const auto gens = linear_part(ideal);
    const auto gb = buchberger(gens, term_order_for(ideal), 3);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> which(0, gens.size() - 1), slot(0, ideal.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3), e(0, 1);
    for (int k = 0; k < 50; ++k) {
      ReesElement sum;
      for (int t = 0; t < 3; ++t) {
        ReesMonomial m(ideal.ambient(), ideal.size());
        for (Var v = 1; v <= ideal.ambient(); ++v) m.set_x(v, e(rng));
        m.set_t(slot(rng), 1);
        sum = sum + gens[which(rng)].times(Rational(coeff(rng)), m);
      }
      CHECK(normal_form(sum, gb).is_zero());
    }
  }

  TEST_CASE("errors and limits") {
    const TermOrder order{3, 2};
    CHECK(code_of([&] { buchberger({parse_rees_element("+x1*T2 -x3*T1*T2", 3, 2)}, order); }) ==
          ErrorCode::NotHomogeneous);
    CHECK(code_of([&] { buchberger({parse_rees_element("+T1*T2 -x1*T2^2", 3, 2)}, order, 1); }) ==
          ErrorCode::CapTooSmall);
    const auto c7 = testing::cycle_ideal(7);
    Budget tiny;
    tiny.max_terms = 3;
    CHECK(code_of([&] { buchberger(linear_part(c7), term_order_for(c7), 6, tiny); }) == ErrorCode::ResourceLimit);
  }

  TEST_CASE("random ideals: basis self-checks and membership oracle") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
      const auto fs = trial % 2 ? oracle::random_clutter(rng, 5, 7) : oracle::random_cyclic(rng, 5, 7);
      if (fs.size() < 2) continue;
      const auto ideal = ideal_of(fs, 7);
      const auto gens = linear_part(ideal);
      const auto gb = buchberger(gens, term_order_for(ideal), 3);
      check_basis(gb, gens);
      CHECK(gb.stats.pairs_considered >= gb.stats.pairs_reduced);

      for (const auto& t : taylor_relations(ideal, 2)) {
        const auto nf = normal_form(t.element, gb);
        CHECK(normal_form(nf, gb) == nf);
        CHECK(nf.is_zero() == oracle::in_linear_part(t.element, ideal));
      }
      // a random polynomial: idempotence and linearity
      ReesElement a = taylor_relations(ideal, 2).front().element;
      ReesElement b = taylor_relations(ideal, 2).back().element;
      const auto na = normal_form(a, gb), nb = normal_form(b, gb);
      CHECK(normal_form(na, gb) == na);
      CHECK(normal_form(a + b, gb) == na + nb);
      CHECK(normal_form(a.times(Rational(5), ReesMonomial(7, ideal.size())), gb) ==
            na.times(Rational(5), ReesMonomial(7, ideal.size())));

      // uncapped on tiny ideals agrees with the capped basis in low degree
      if (ideal.size() <= 3) {
        const auto full = buchberger(gens, term_order_for(ideal));
        check_basis(full, gens);
        for (const auto& e : gb.elements) CHECK(normal_form(e, full).is_zero());
      }
    }
  }
}
