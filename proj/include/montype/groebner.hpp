#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "montype/rees.hpp"

namespace montype {

/// Limits on a computation; exceeding either throws ResourceLimit.
struct Budget {
  std::size_t max_terms = 200000;  // largest polynomial / basis size tolerated
  double max_seconds = 600.0;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t pairs_pruned = 0;    // dropped by the Buchberger / Gebauer-Möller criteria
  std::size_t pairs_deferred = 0;  // beyond the degree cap
  std::size_t reductions_to_zero = 0;

  friend bool operator==(const GroebnerStats&, const GroebnerStats&) = default;
};

struct GroebnerBasis {
  TermOrder order;
  std::vector<ReesElement> elements;  // monic, inter-reduced, by ascending (T-degree, leading term)
  std::optional<int> degree_cap;
  GroebnerStats stats;
};

/// Buchberger's algorithm with the Gebauer-Möller pair criteria and the
/// normal selection strategy (smallest lcm by T-degree, then τ). With a cap,
/// S-pairs whose lcm has T-degree above it are never reduced, so the result
/// is a Gröbner basis for the part of the ideal of T-degree <= cap.
/// Inputs must be T-homogeneous (NotHomogeneous) and of T-degree <= cap
/// (CapTooSmall).
GroebnerBasis buchberger(const std::vector<ReesElement>& gens, const TermOrder& order,
                         std::optional<int> degree_cap = std::nullopt, const Budget& budget = {});

/// Fully reduced remainder of e modulo the basis.
ReesElement normal_form(const ReesElement& e, const GroebnerBasis& basis);
ReesElement normal_form(const ReesElement& e, const std::vector<ReesElement>& basis);

}  // namespace montype
