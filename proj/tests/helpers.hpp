#pragma once

#include <string>
#include <vector>

#include "montype/complex.hpp"
#include "montype/ideal.hpp"
#include "montype/text_io.hpp"

namespace testing {

inline montype::SquarefreeIdeal ideal_of(const std::vector<std::vector<int>>& supports, int n = 0) {
  for (const auto& s : supports) {
    for (int v : s) n = std::max(n, v);
  }
  std::vector<montype::Monomial> gens;
  for (const auto& s : supports) gens.push_back(montype::Monomial::from_support(n, s));
  return montype::minimal_generators(gens);
}

inline montype::SimplicialComplex complex_of(const std::vector<std::vector<int>>& facets, int n = 0) {
  return montype::build_complex(facets, n);
}

inline montype::ParsedInput fixture(const std::string& name) {
  return montype::read_input(std::string(FIXTURE_DIR) + "/" + name);
}

/// Edge ideal of the cycle graph C_n, edges {i, i+1} and {1, n}.
inline montype::SquarefreeIdeal cycle_ideal(int n) {
  std::vector<std::vector<int>> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
  return ideal_of(edges);
}

}  // namespace testing
