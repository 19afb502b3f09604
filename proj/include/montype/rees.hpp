#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "montype/ideal.hpp"
#include "montype/rational.hpp"

namespace montype {

/// A monomial x^a T^b of S[T1..Ts], S = K[x1..xn].
///
/// Exponents are kept in one dense array laid out as (Ts, ..., T1, xn, ...,
/// x1), so plain lexicographic comparison of that array is the block order
/// τ: T-parts first with Ts > ... > T1, then x-parts with xn > ... > x1.
class ReesMonomial {
 public:
  ReesMonomial() = default;
  ReesMonomial(int n, std::size_t s) : s_(static_cast<std::uint16_t>(s)), e_(n + s, 0) {}
  /// x-part from `x`, T-exponents b[0] for T1, b[1] for T2, ...
  static ReesMonomial make(const Monomial& x, const std::vector<int>& t, std::size_t s);

  int ambient() const noexcept { return static_cast<int>(e_.size()) - s_; }
  std::size_t generators() const noexcept { return s_; }

  int x(Var v) const { return e_[s_ + (e_.size() - s_) - v]; }
  int t(std::size_t i) const { return e_[s_ - 1 - i]; }  // exponent of T_{i+1}
  void set_x(Var v, int e);
  void set_t(std::size_t i, int e);

  int t_degree() const noexcept;
  int x_degree() const noexcept;
  bool is_one() const noexcept;
  Monomial x_part() const;
  std::vector<int> t_part() const;

  bool divides(const ReesMonomial& other) const noexcept;
  bool coprime(const ReesMonomial& other) const noexcept;
  ReesMonomial operator*(const ReesMonomial& other) const;
  ReesMonomial quotient(const ReesMonomial& divisor) const;
  friend ReesMonomial lcm(const ReesMonomial& a, const ReesMonomial& b);

  /// "x1*x2*T1*T3", exponents as ^k, "1" for the unit.
  std::string to_string() const;

  /// τ; only meaningful between monomials of the same ring.
  friend std::strong_ordering operator<=>(const ReesMonomial& a, const ReesMonomial& b) {
    return a.e_ <=> b.e_;
  }
  friend bool operator==(const ReesMonomial&, const ReesMonomial&) = default;

 private:
  std::uint16_t s_ = 0;
  std::vector<std::uint16_t> e_;
};

/// The term order τ for a ring with n x-variables and s T-variables.
struct TermOrder {
  int n = 0;
  std::size_t s = 0;

  /// Throws AmbientMismatch when a term is from another ring.
  std::strong_ordering compare(const ReesMonomial& a, const ReesMonomial& b) const;
  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

struct ReesTerm {
  Rational coeff;
  ReesMonomial mono;
  friend bool operator==(const ReesTerm&, const ReesTerm&) = default;
};

/// Polynomial in S[T]: nonzero terms, distinct monomials, τ-descending.
class ReesElement {
 public:
  ReesElement() = default;
  /// Sorts, merges equal monomials and drops zeros.
  explicit ReesElement(std::vector<ReesTerm> terms);
  static ReesElement binomial(const ReesMonomial& a, const ReesMonomial& b);  // a - b

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<ReesTerm>& terms() const noexcept { return terms_; }
  const ReesTerm& lead() const { return terms_.front(); }

  /// Common T-degree of all terms, or -1 when the element is not
  /// T-homogeneous (0 for the zero element).
  int t_degree() const noexcept;
  int x_degree() const noexcept;  // sum over terms of the x-degree
  /// True when every coefficient is +1 or -1.
  bool unit_coefficients() const noexcept;

  ReesElement monic() const;
  ReesElement operator-() const;
  friend ReesElement operator+(const ReesElement& a, const ReesElement& b);
  friend ReesElement operator-(const ReesElement& a, const ReesElement& b);
  /// this - c * m * other, the reduction step.
  ReesElement minus_multiple(const Rational& c, const ReesMonomial& m, const ReesElement& other) const;
  ReesElement times(const Rational& c, const ReesMonomial& m) const;

  /// "+x6*x7*T1 -x1*x2*T4"; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const ReesElement&, const ReesElement&) = default;

 private:
  std::vector<ReesTerm> terms_;
};

/// Parses the to_string form back into the ring with n x-variables and s
/// T-variables. Throws ParseError.
ReesElement parse_rees_element(std::string_view text, int n, std::size_t s);

TermOrder term_order_for(const SquarefreeIdeal& ideal);

/// T_i -> f_i t; true when the element maps to zero in S[t].
bool vanishes_under_substitution(const ReesElement& e, const SquarefreeIdeal& ideal);

/// l_ij = m_ij T_j - m_ji T_i, m_ij = f_i / gcd(f_i, f_j).
struct LinearRelation {
  std::size_t i = 0;
  std::size_t j = 0;
  ReesElement element;
};

/// All l_ij for i < j restricted to `members` (every generator when empty).
/// Checks in_τ(l_ij) = m_ij T_j for each one.
std::vector<LinearRelation> linear_relations(const SquarefreeIdeal& ideal,
                                             const std::vector<std::size_t>& members = {});

/// Multi-index of size k as a non-decreasing list of generator positions.
using MultiIndex = std::vector<std::size_t>;

/// All multisets of size k from `members`, lexicographically.
std::vector<MultiIndex> multi_indices(const std::vector<std::size_t>& members, std::size_t k);

struct TaylorRelation {
  MultiIndex alpha;
  MultiIndex beta;
  ReesElement element;
  /// f_alpha == f_beta, so the relation is the pure binomial T_alpha - T_beta.
  bool coincidence = false;
};

/// T_{α,β} = (f_β/g) T_α - (f_α/g) T_β with g = gcd(f_α, f_β).
ReesElement taylor_relation(const SquarefreeIdeal& ideal, const MultiIndex& alpha,
                            const MultiIndex& beta);

/// Every T_{α,β} over unordered pairs α != β of size-k multisets from
/// `members` (all generators when empty), α before β in enumeration order.
/// With disjoint_only, pairs sharing an index are left out: such a relation
/// is T_i times a relation of lower degree.
std::vector<TaylorRelation> taylor_relations(const SquarefreeIdeal& ideal, std::size_t k,
                                             const std::vector<std::size_t>& members = {},
                                             bool disjoint_only = false);

}  // namespace montype
