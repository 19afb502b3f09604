#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "montype/groebner.hpp"
#include "montype/rees.hpp"

namespace montype {

enum class Verdict { NotLinearType, LinearTypeUpTo };

struct ReductionStats {
  std::size_t relations = 0;             // Taylor relations reduced
  std::size_t shared_index_skipped = 0;  // pairs sharing an index, implied by lower degree
  std::size_t coincidences = 0;          // f_alpha == f_beta
  std::size_t nonzero = 0;               // relations with a nonzero normal form
  std::size_t substitution_checks = 0;
  GroebnerStats groebner;

  friend bool operator==(const ReductionStats&, const ReductionStats&) = default;
};

struct Witness {
  ReesElement element;
  MultiIndex alpha;
  MultiIndex beta;
  ReesElement normal_form;

  std::size_t degree() const noexcept { return alpha.size(); }
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Certificate {
  Verdict verdict = Verdict::LinearTypeUpTo;
  int max_degree = 0;
  std::optional<Witness> witness;
  std::size_t groebner_basis_size = 0;
  std::size_t components = 1;
  ReductionStats stats;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct VerifyOptions {
  Budget budget;
  unsigned threads = 1;
  /// Also reduce T_{α,β} whose multi-indices share an index.
  bool reduce_shared_pairs = false;
};

/// max(3, ceil(s/2) + 1)
int default_max_degree(std::size_t generators);

/// Gröbner basis of the ideal generated by the linear relations of the
/// given generators (all when empty), truncated at T-degree cap.
GroebnerBasis linear_part_basis(const SquarefreeIdeal& ideal, int cap,
                                const std::vector<std::size_t>& members = {},
                                const Budget& budget = {});

/// Bounded test of J = <J_1> on one set of generators: reduce every T_{α,β}
/// with 2 <= |α| <= K modulo GB(J_1) truncated at K + 1. The witness is the
/// relation of lowest degree, then lowest total x-degree, then first in
/// enumeration order, with nonzero normal form.
Certificate verify_component(const SquarefreeIdeal& ideal, const std::vector<std::size_t>& members,
                             int max_degree, const VerifyOptions& options = {});

/// Splits the generators by line-graph component, verifies each one and
/// combines the results.
Certificate verify_linear_type(const SquarefreeIdeal& ideal, int max_degree,
                               const VerifyOptions& options = {});

/// NotLinearType if any component is (first such component's witness);
/// otherwise LinearTypeUpTo of the smallest bound.
Certificate combine_components(std::span<const Certificate> certificates);

struct PresentationReport {
  bool all_reduce = true;
  int max_degree = 0;
  std::size_t checked = 0;
  std::size_t groebner_basis_size = 0;
  std::optional<Witness> first_failure;
};

/// Checks that J_1 together with `extra` generates every T_{α,β} up to
/// degree K. Throws NotInJ if an extra generator is not in J.
PresentationReport verify_presentation(const SquarefreeIdeal& ideal,
                                       const std::vector<ReesElement>& extra, int max_degree,
                                       const VerifyOptions& options = {});

/// Normal forms of many elements against a frozen basis, spread over
/// `threads` workers; output order matches input order.
std::vector<ReesElement> reduce_all(const std::vector<ReesElement>& elements,
                                    const GroebnerBasis& basis, unsigned threads);

}  // namespace montype
