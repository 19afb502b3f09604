#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "montype/complex.hpp"
#include "montype/ideal.hpp"

namespace montype {

/// Variable order x_1 < ... < x_r on f_g such that x_k | f_j (j != g)
/// forces x_k...x_r | f_j, or nullopt when f_g is not an M-element.
std::optional<std::vector<Var>> is_M_element(const SquarefreeIdeal& ideal, std::size_t g);

/// Same question in the sub-ideal generated by `members` (which contains g).
std::optional<std::vector<Var>> is_M_element_within(const SquarefreeIdeal& ideal, std::size_t g,
                                                    std::span<const std::size_t> members);

/// Generator order f_1..f_s with f_i an M-element of (f_i..f_s). Peels the
/// lowest-index M-element of what is left.
std::optional<std::vector<std::size_t>> find_M_sequence(const SquarefreeIdeal& ideal);

enum class ResidualKind { Simplex, OddSimplicialCycle };

struct ResidualComponent {
  ResidualKind kind = ResidualKind::Simplex;
  std::vector<std::size_t> facets;  // positions in the input complex
  /// Cyclic strong-neighbor order for a cycle, the lone facet otherwise.
  std::vector<std::size_t> order;

  std::size_t length() const noexcept { return facets.size(); }
  friend bool operator==(const ResidualComponent&, const ResidualComponent&) = default;
};

struct VillarrealCertificate {
  std::vector<std::size_t> peel_order;  // facets removed as good leaves, in removal order
  std::vector<ResidualComponent> residual_components;

  friend bool operator==(const VillarrealCertificate&, const VillarrealCertificate&) = default;
};

/// Peels good leaves (lowest index first) while two or more facets remain,
/// then requires every component of the rest to be a single facet or a
/// simplicial cycle of odd length.
std::optional<VillarrealCertificate> villarreal_type(const SimplicialComplex& complex);

/// Re-attaches the peeled facets in reverse order and checks that each one
/// is a good leaf when it arrives, and that the residual really is a
/// disjoint union of simplexes and odd simplicial cycles.
bool certificate_replays(const SimplicialComplex& complex, const VillarrealCertificate& cert);

/// Extra facet G covering the adjacent facets `first` and `second`
/// (0-based positions in the base complex).
struct PatchSpec {
  VertexSet patch;
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const PatchSpec&, const PatchSpec&) = default;
};

enum class PatchProblem {
  BadCoverIndex,
  NotAdjacent,
  OutsideCover,
  Comparable,
  RepeatedCover,
  Overlapping,
};

struct PatchViolation {
  std::size_t patch = 0;  // index into the patch list
  PatchProblem problem = PatchProblem::BadCoverIndex;
  std::string detail;
};

std::string_view to_string(PatchProblem problem);

/// First violated condition, or nullopt for a compatible patch system.
std::optional<PatchViolation> validate_patches(const SimplicialComplex& base,
                                               std::span<const PatchSpec> patches);

/// Base facets followed by the patches.
SimplicialComplex attach_patches(const SimplicialComplex& base, std::span<const PatchSpec> patches);

}  // namespace montype
