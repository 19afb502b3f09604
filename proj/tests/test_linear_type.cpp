#include <doctest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "montype/classify.hpp"
#include "montype/error.hpp"
#include "montype/linear_type.hpp"
#include "oracles.hpp"

using namespace montype;
using testing::ideal_of;

namespace {

bool linear(const Certificate& c) { return c.verdict == Verdict::LinearTypeUpTo; }

Certificate verify(const std::string& name, int k) {
  return verify_linear_type(testing::fixture(name).ideal, k);
}

void check_witness(const Certificate& c, const SquarefreeIdeal& ideal) {
  REQUIRE(c.witness);
  const auto& w = *c.witness;
  CHECK(vanishes_under_substitution(w.element, ideal));
  CHECK_FALSE(w.normal_form.is_zero());
  CHECK(w.element == taylor_relation(ideal, w.alpha, w.beta));
  CHECK_FALSE(oracle::in_linear_part(w.element, ideal));
  CHECK(static_cast<int>(w.degree()) <= c.max_degree);
}

}  // namespace

TEST_SUITE("linear_type") {
  TEST_CASE("default degree bound") {
    CHECK(default_max_degree(1) == 3);
    CHECK(default_max_degree(4) == 3);
    CHECK(default_max_degree(5) == 4);
    CHECK(default_max_degree(8) == 5);
  }

  TEST_CASE("worked examples") {
    const auto square = verify("ex42.ideal", 3);
    CHECK_FALSE(linear(square));
    check_witness(square, testing::fixture("ex42.ideal").ideal);
    CHECK(square.witness->element.monic().to_string() == "+x1*T2*T4 -x4*T1*T3");
    CHECK(square.witness->degree() == 2);

    CHECK(linear(verify("ex63.cmplx", 3)));
    CHECK(linear(verify("ex63_cycle.cmplx", 3)));
    CHECK_FALSE(linear(verify("ex64.cmplx", 3)));
    CHECK_FALSE(linear(verify("ex64_leaf.cmplx", 3)));
    const auto patched = verify("ex65.cmplx", 3);
    CHECK(linear(patched));
    CHECK(patched.max_degree == 3);
    const auto tilde = verify("ex65_tilde.ideal", 3);
    CHECK_FALSE(linear(tilde));
    check_witness(tilde, testing::fixture("ex65_tilde.ideal").ideal);
    const auto gamma = verify("gamma.ideal", 3);
    CHECK_FALSE(linear(gamma));
    check_witness(gamma, testing::fixture("gamma.ideal").ideal);
  }

  TEST_CASE("presentations with extra generators") {
    const auto c4 = testing::cycle_ideal(4);
    const auto r4 = verify_presentation(c4, {parse_rees_element("+T1*T3 -T2*T4", 4, 4)}, 4);
    CHECK(r4.all_reduce);
    CHECK(r4.checked > 0);
    const auto square = testing::fixture("ex42.ideal").ideal;
    const auto rs = verify_presentation(square, {parse_rees_element("+x4*T1*T3 -x1*T2*T4", 7, 4)}, 3);
    CHECK(rs.all_reduce);
    CHECK_FALSE(verify_presentation(square, {}, 3).all_reduce);
    try {
      verify_presentation(square, {parse_rees_element("+T1 -T2", 7, 4)}, 3);
      FAIL("expected NotInJ");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotInJ);
    }
  }

  TEST_CASE("components combine") {
    const auto two = verify_linear_type(ideal_of({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}), 3);
    CHECK(linear(two));
    CHECK(two.components == 2);
    const auto mixed = verify_linear_type(ideal_of({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}}), 3);
    CHECK_FALSE(linear(mixed));
    REQUIRE(mixed.witness);
    CHECK(mixed.witness->degree() == 2);
    const auto c3 = verify_linear_type(testing::cycle_ideal(3), 3);
    const std::vector<Certificate> one{c3};
    CHECK(combine_components(one) == c3);

    Certificate low = c3;
    low.max_degree = 2;
    const std::vector<Certificate> pair{c3, low};
    CHECK(combine_components(pair).max_degree == 2);
  }

  TEST_CASE("thread count and shared pairs do not change the verdict") {
    for (const char* name : {"ex42.ideal", "ex65.cmplx", "cycle5.ideal", "gamma.ideal"}) {
      const auto ideal = testing::fixture(name).ideal;
      VerifyOptions serial, parallel, shared;
      parallel.threads = 4;
      shared.reduce_shared_pairs = true;
      const auto a = verify_linear_type(ideal, 3, serial);
      CHECK(verify_linear_type(ideal, 3, parallel) == a);
      const auto b = verify_linear_type(ideal, 3, shared);
      CHECK(b.verdict == a.verdict);
      CHECK(b.stats.relations >= a.stats.relations);
    }
  }

  TEST_CASE("reduce_all keeps input order") {
    const auto ideal = testing::fixture("ex65.cmplx").ideal;
    const auto gb = linear_part_basis(ideal, 3);
    std::vector<ReesElement> elements;
    for (const auto& t : taylor_relations(ideal, 2)) elements.push_back(t.element);
    const auto one = reduce_all(elements, gb, 1);
    CHECK(reduce_all(elements, gb, 3) == one);
    for (std::size_t i = 0; i < elements.size(); i += 7) CHECK(one[i] == normal_form(elements[i], gb));
  }

  TEST_CASE("random witnesses are genuine") {
    std::mt19937_64 rng(31337);
    int not_linear = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const auto fs = oracle::random_cyclic(rng, 5, 8);
      const auto ideal = ideal_of(fs, 8);
      const auto c = verify_linear_type(ideal, 3);
      if (!linear(c)) {
        ++not_linear;
        check_witness(c, ideal);
      } else {
        // nothing in degree 2 escapes the linear part
        for (const auto& t : taylor_relations(ideal, 2)) CHECK(oracle::in_linear_part(t.element, ideal));
      }
    }
    CHECK(not_linear > 0);
  }

  TEST_CASE("adding an M-element keeps linear type") {
    std::mt19937_64 rng(1234);
    int exercised = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto fs = oracle::random_cyclic(rng, 6, 9);
      if (fs.size() < 3) continue;
      const auto ideal = ideal_of(fs, 9);
      for (std::size_t g = 0; g < ideal.size(); ++g) {
        if (!is_M_element(ideal, g)) continue;
        std::vector<std::size_t> order{g};
        for (std::size_t i = 0; i < ideal.size(); ++i) {
          if (i != g) order.push_back(i);
        }
        const auto moved = ideal.restrict_to(order);
        const std::vector<std::size_t> rest_pos(order.begin() + 1, order.end());
        const auto rest = ideal.restrict_to(rest_pos);
        if (!linear(verify_linear_type(rest, 3))) break;
        ++exercised;
        CHECK(linear(verify_linear_type(moved, 3)));

        // {l_1j} together with the basis for the rest is already a basis
        const auto gb_full = linear_part_basis(moved, 3);
        std::vector<std::size_t> tail(ideal.size() - 1);
        std::iota(tail.begin(), tail.end(), 1);
        const auto gb_tail = linear_part_basis(moved, 3, tail);
        std::vector<ReesElement> combined = gb_tail.elements;
        for (const auto& r : linear_relations(moved)) {
          if (r.i == 0) combined.push_back(r.element.monic());
        }
        for (const auto& e : gb_full.elements) CHECK(normal_form(e, combined).is_zero());
        for (const auto& e : combined) CHECK(normal_form(e, gb_full).is_zero());
        break;
      }
    }
    CHECK(exercised > 10);
  }

  TEST_CASE("unwrapping a variable keeps linear type") {
    std::mt19937_64 rng(777);
    int exercised = 0;
    for (int trial = 0; trial < 80; ++trial) {
      const auto fs = oracle::random_cyclic(rng, 5, 9);
      const auto ideal = ideal_of(fs, 9);
      if (!linear(verify_linear_type(ideal, 3))) continue;
      for (int v : ideal[0].support()) {
        try {
          const auto unwrapped = substitute_unit(ideal, v);
          ++exercised;
          CHECK(linear(verify_linear_type(unwrapped, 3)));
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::UnitGenerator);
        }
      }
    }
    CHECK(exercised > 10);
  }
}
