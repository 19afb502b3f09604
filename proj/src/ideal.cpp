#include "montype/ideal.hpp"

#include <algorithm>
#include <map>

#include "montype/error.hpp"

namespace montype {

SquarefreeIdeal minimal_generators(std::span<const Monomial> monomials) {
  if (monomials.empty()) throw Error(ErrorCode::EmptyInput, "no generators");
  const int ambient = monomials.front().ambient();
  for (const auto& m : monomials) {
    if (m.ambient() != ambient) {
      throw Error(ErrorCode::AmbientMismatch, "generators over different rings");
    }
    if (!m.is_squarefree()) {
      throw Error(ErrorCode::NonSquarefreeInput, m.to_string());
    }
  }

  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const Monomial& m = monomials[i];
    bool redundant = false;
    for (std::size_t j = 0; j < monomials.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& other = monomials[j];
      if (other == m) {
        redundant = j < i;  // keep the first occurrence only
      } else {
        redundant = other.divides(m);
      }
    }
    if (!redundant) kept.push_back(m);
  }
  return SquarefreeIdeal(ambient, std::move(kept));
}

SquarefreeIdeal SquarefreeIdeal::canonical() const {
  SquarefreeIdeal c = *this;
  std::sort(c.generators_.begin(), c.generators_.end(), lex_greater);
  return c;
}

bool SquarefreeIdeal::same_generators(const SquarefreeIdeal& other) const {
  return canonical() == other.canonical();
}

SquarefreeIdeal SquarefreeIdeal::restrict_to(
    std::span<const std::size_t> positions) const {
  std::vector<Monomial> gens;
  gens.reserve(positions.size());
  for (std::size_t p : positions) gens.push_back(generators_.at(p));
  return SquarefreeIdeal(ambient_, std::move(gens));
}

std::string SquarefreeIdeal::to_string() const {
  std::string s;
  for (const auto& g : generators_) {
    s += g.to_string();
    s += '\n';
  }
  return s;
}

std::vector<Var> free_variables(const SquarefreeIdeal& ideal) {
  std::map<Var, int> count;
  for (const auto& g : ideal.generators()) {
    for (const auto& [v, e] : g.entries()) ++count[v];
  }
  std::vector<Var> out;
  for (const auto& [v, c] : count) {
    if (c == 1) out.push_back(v);
  }
  return out;
}

SquarefreeIdeal substitute_unit(const SquarefreeIdeal& ideal, Var v) {
  if (v < 1 || v > ideal.ambient()) {
    throw Error(ErrorCode::IndexOutOfRange, "x" + std::to_string(v));
  }
  std::vector<Monomial> substituted;
  substituted.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    Monomial m = g.without(v);
    if (m.is_one()) {
      throw Error(ErrorCode::UnitGenerator,
                  g.to_string() + " becomes 1 under x" + std::to_string(v) + " -> 1");
    }
    substituted.push_back(std::move(m));
  }
  return minimal_generators(substituted);
}

}  // namespace montype
