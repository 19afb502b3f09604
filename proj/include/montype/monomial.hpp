#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace montype {

/// Variable index, 1-based (x1 ... xn).
using Var = int;

/// A monomial x^a over a fixed ambient ring K[x1..xn], stored sparsely as
/// sorted (variable, exponent) pairs. Zero exponents are never stored.
class Monomial {
 public:
  using Entry = std::pair<Var, int>;

  Monomial() = default;
  explicit Monomial(int ambient) : ambient_(ambient) {}
  Monomial(int ambient, std::vector<Entry> entries);

  static Monomial from_support(int ambient, std::span<const Var> vars);

  int ambient() const noexcept { return ambient_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  int exponent(Var v) const noexcept;
  int degree() const noexcept;
  bool is_one() const noexcept { return entries_.empty(); }
  bool is_squarefree() const noexcept;
  std::vector<Var> support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / divisor; throws unless divisor divides this.
  Monomial quotient(const Monomial& divisor) const;
  /// Substitutes x_v -> 1.
  Monomial without(Var v) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  int ambient_ = 0;
  std::vector<Entry> entries_;
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
std::pair<Monomial, Monomial> gcd_lcm(const Monomial& a, const Monomial& b);

/// Lexicographic comparison of dense exponent vectors (e1, e2, ..., en).
/// Returns true when a's vector is lexicographically larger, so x1 sorts
/// before x2 and x1*x2 before x1.
bool lex_greater(const Monomial& a, const Monomial& b);

}  // namespace montype
