#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "montype/complex.hpp"

namespace montype {

/// Alternating sequence v0, F0, v1, F1, ..., v(s-1), F(s-1), v0 where facet
/// Fi contains vi and v(i+1). Facets are positions in the complex.
struct HyperCycle {
  std::vector<std::size_t> facets;
  std::vector<int> vertices;

  std::size_t length() const noexcept { return facets.size(); }

  friend auto operator<=>(const HyperCycle&, const HyperCycle&) = default;
};

enum class CycleMode { Berge, Special };

/// Least rotation/reflection, ordered by facet sequence then vertices.
HyperCycle canonical_cycle(const HyperCycle& cycle);

bool is_berge_cycle(const SimplicialComplex& complex, const HyperCycle& cycle);
/// Berge cycle in which no facet of the cycle holds more than two of the
/// connecting vertices.
bool is_special_cycle(const SimplicialComplex& complex, const HyperCycle& cycle);

/// All cycles of the given kind with 2 <= length <= max_length, one
/// canonical representative each, sorted by (length, canonical form).
std::vector<HyperCycle> enumerate_cycles(const SimplicialComplex& complex, CycleMode mode,
                                         std::size_t max_length);

/// "7,{2,3,7},3,{3,4,8},4,{4,5,6,7},7"
std::string format_cycle(const SimplicialComplex& complex, const HyperCycle& cycle);
/// ["v7","F2","v3","F3","v4","F4","v7"], facets 1-based.
std::vector<std::string> cycle_tokens(const HyperCycle& cycle);
HyperCycle parse_cycle_tokens(const std::vector<std::string>& tokens);

/// Cyclic strong-neighbor order F1 ~ ... ~ Fs ~ F1 (s >= 3) whose
/// non-adjacent facets meet exactly in the common intersection, if the
/// complex is a simplicial cycle. Throws SizeLimit above 12 facets.
std::optional<std::vector<std::size_t>> is_simplicial_cycle(const SimplicialComplex& complex);

/// Checks the structural condition on a proposed cyclic order.
bool is_strong_neighbor_cycle(const SimplicialComplex& complex,
                              const std::vector<std::size_t>& order);

/// Push-down data for a linear cycle: the deleted variables D, the kept
/// ones, and for every deleted non-free variable the kept variable it
/// shadows. One variable per adjacent pair is kept (the largest index).
struct DeletionMap {
  std::vector<Var> deleted;
  std::vector<Var> kept;
  std::map<Var, Var> shadow_of;

  Monomial apply(const Monomial& m) const;
  SquarefreeIdeal apply(const SquarefreeIdeal& ideal) const;

  friend bool operator==(const DeletionMap&, const DeletionMap&) = default;
};

DeletionMap deletion_map(const SimplicialComplex& complex);

/// The four characterizations of a cycle for connected, non-cone complexes
/// with at least four facets.
struct EquivalenceReport {
  std::size_t facets = 0;
  bool simplicial_cycle = false;
  bool linear_cycle = false;
  bool special_cycle_condition = false;
  bool berge_cycle_condition = false;

  bool agree() const noexcept {
    return simplicial_cycle == linear_cycle && linear_cycle == special_cycle_condition &&
           special_cycle_condition == berge_cycle_condition;
  }
};

EquivalenceReport equivalence_report(const SimplicialComplex& complex);

enum class CycleKind { SimplicialCycle, LinearCycle, None };

struct CycleReport {
  CycleKind kind = CycleKind::None;
  std::optional<std::size_t> length;
  std::optional<std::vector<std::size_t>> strong_neighbor_sequence;
  CycleMode mode = CycleMode::Special;
  std::size_t max_length = 0;
  std::vector<HyperCycle> cycles;
  /// Shortest cycles of length >= 3; length-2 cycles are listed but do not
  /// count here.
  std::optional<std::size_t> berge_min_length;
  std::optional<std::size_t> special_min_length;

  friend bool operator==(const CycleReport&, const CycleReport&) = default;
};

CycleReport cycle_report(const SimplicialComplex& complex, CycleMode mode,
                         std::size_t max_length);

}  // namespace montype
