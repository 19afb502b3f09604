#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "montype/classify.hpp"
#include "montype/conjecture.hpp"
#include "montype/cycles.hpp"
#include "montype/error.hpp"

using namespace montype;

namespace {

ScanReport scan(std::size_t length, std::size_t patches, std::size_t trials, std::uint64_t seed, unsigned threads = 1) {
  ScanConfig c;
  c.length = length;
  c.patches = patches;
  c.trials = trials;
  c.seed = seed;
  c.threads = threads;
  return conjecture_scan(c);
}

}  // namespace

TEST_SUITE("conjecture") {
  TEST_CASE("random instances are patched linear cycles") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t length = 4 + static_cast<std::size_t>(trial % 4);
      const std::size_t q = static_cast<std::size_t>(trial % 3);
      const auto inst = random_patched_cycle(length, q, rng);
      CHECK(inst.base.size() == length);
      CHECK(line_graph(inst.base).is_cycle_graph());
      CHECK(is_simplicial_cycle(inst.base).has_value());
      CHECK(inst.patches.size() == q);
      CHECK_FALSE(validate_patches(inst.base, inst.patches));
      for (const auto& f : inst.base.facets()) {
        std::size_t own = 0;
        for (int v : f) {
          std::size_t count = 0;
          for (const auto& g : inst.base.facets()) count += sets::contains(g, v);
          own += count == 1;
        }
        CHECK(own <= 2);
      }
    }
  }

  TEST_CASE("more patches than edges are rejected") {
    std::mt19937_64 rng(1);
    try {
      random_patched_cycle(4, 5, rng);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PreconditionViolated);
    }
  }

  TEST_CASE("even cycle with one patch") {
    const auto r = scan(4, 1, 6, 2024);
    CHECK(r.odd_parity);
    CHECK(r.linear_type == 6);
    CHECK(r.counterexample_candidates.empty());
  }

  TEST_CASE("bare even and odd cycles") {
    const auto even = scan(4, 0, 6, 7);
    CHECK_FALSE(even.odd_parity);
    CHECK(even.not_linear_type == 6);
    for (const auto& t : even.trials) {
      REQUIRE(t.certificate.witness);
      CHECK(t.certificate.witness->degree() == 2);
    }
    const auto odd = scan(5, 0, 6, 7);
    CHECK(odd.odd_parity);
    CHECK(odd.linear_type == 6);
    CHECK(odd.counterexample_candidates.empty());
  }

  TEST_CASE("scans are reproducible") {
    const auto a = scan(5, 1, 4, 99);
    CHECK(scan(5, 1, 4, 99, 3) == a);
    CHECK(scan(5, 1, 4, 99) == a);
    CHECK_FALSE(scan(5, 1, 4, 100) == a);
    // trial t does not depend on how many trials run
    const auto longer = scan(5, 1, 6, 99);
    for (std::size_t t = 0; t < a.trials.size(); ++t) CHECK(longer.trials[t] == a.trials[t]);
  }
}
