#pragma once

#include <span>
#include <string>
#include <vector>

#include "montype/monomial.hpp"

namespace montype {

/// A squarefree monomial ideal given by its minimal generating set G(I).
///
/// Generators keep the order in which they were first supplied; that order
/// fixes the numbering T1..Ts used by every Rees-algebra computation, so a
/// user's file numbering is what appears in reports. canonical() gives the
/// order-independent form (lexicographic on exponent vectors) for
/// comparisons.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;

  int ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  const Monomial& operator[](std::size_t i) const { return generators_.at(i); }

  SquarefreeIdeal canonical() const;
  /// Same generating set, ignoring order.
  bool same_generators(const SquarefreeIdeal& other) const;
  /// Sub-ideal on the given generator positions, keeping their order.
  SquarefreeIdeal restrict_to(std::span<const std::size_t> positions) const;

  /// One generator per line, in the ideal text format.
  std::string to_string() const;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

  friend SquarefreeIdeal minimal_generators(std::span<const Monomial> monomials);

 private:
  SquarefreeIdeal(int ambient, std::vector<Monomial> gens)
      : ambient_(ambient), generators_(std::move(gens)) {}

  int ambient_ = 0;
  std::vector<Monomial> generators_;
};

/// Drops duplicates and every monomial divisible by another one. Throws
/// EmptyInput, NonSquarefreeInput or AmbientMismatch.
SquarefreeIdeal minimal_generators(std::span<const Monomial> monomials);

/// Variables dividing exactly one generator, ascending.
std::vector<Var> free_variables(const SquarefreeIdeal& ideal);

/// Sets x_v = 1 and re-minimalizes. The ambient count is unchanged, so x_v
/// simply stops occurring. Throws UnitGenerator if a generator becomes 1.
SquarefreeIdeal substitute_unit(const SquarefreeIdeal& ideal, Var v);

}  // namespace montype
