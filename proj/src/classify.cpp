#include "montype/classify.hpp"

#include <algorithm>
#include <numeric>

#include "montype/cycles.hpp"
#include "montype/error.hpp"

namespace montype {

namespace {

std::vector<std::size_t> all_positions(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace

std::optional<std::vector<Var>> is_M_element_within(const SquarefreeIdeal& ideal, std::size_t g,
                                                    std::span<const std::size_t> members) {
  if (g >= ideal.size()) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g + 1));

  struct Occurrence {
    Var var;
    std::vector<std::size_t> in;  // other generators divisible by var
  };
  std::vector<Occurrence> occ;
  for (Var v : ideal[g].support()) {
    Occurrence o{v, {}};
    for (std::size_t j : members) {
      if (j != g && ideal[j].exponent(v) > 0) o.in.push_back(j);
    }
    occ.push_back(std::move(o));
  }
  std::stable_sort(occ.begin(), occ.end(),
                   [](const Occurrence& a, const Occurrence& b) { return a.in.size() < b.in.size(); });
  for (std::size_t k = 1; k < occ.size(); ++k) {
    if (!std::includes(occ[k].in.begin(), occ[k].in.end(), occ[k - 1].in.begin(),
                       occ[k - 1].in.end())) {
      return std::nullopt;
    }
  }
  if (!occ.front().in.empty()) {
    throw Error(ErrorCode::MinimalityViolated,
                ideal[g].to_string() + " divides generator " + std::to_string(occ.front().in[0] + 1));
  }
  std::vector<Var> order;
  for (const auto& o : occ) order.push_back(o.var);
  return order;
}

std::optional<std::vector<Var>> is_M_element(const SquarefreeIdeal& ideal, std::size_t g) {
  const auto all = all_positions(ideal.size());
  return is_M_element_within(ideal, g, all);
}

std::optional<std::vector<std::size_t>> find_M_sequence(const SquarefreeIdeal& ideal) {
  auto members = all_positions(ideal.size());
  std::vector<std::size_t> sequence;
  while (!members.empty()) {
    auto it = std::find_if(members.begin(), members.end(), [&](std::size_t g) {
      return is_M_element_within(ideal, g, members).has_value();
    });
    if (it == members.end()) return std::nullopt;
    sequence.push_back(*it);
    members.erase(it);
  }
  return sequence;
}

namespace {

// Classifies one residual component; nullopt if it is neither a simplex
// nor an odd simplicial cycle.
std::optional<ResidualComponent> classify_residual(const Component& part) {
  ResidualComponent r;
  r.facets = part.facet_indices;
  if (part.complex.size() == 1) {
    r.kind = ResidualKind::Simplex;
    r.order = r.facets;
    return r;
  }
  if (part.complex.size() % 2 == 0) return std::nullopt;
  const auto order = is_simplicial_cycle(part.complex);
  if (!order) return std::nullopt;
  r.kind = ResidualKind::OddSimplicialCycle;
  for (std::size_t p : *order) r.order.push_back(part.facet_indices[p]);
  return r;
}

}  // namespace

std::optional<VillarrealCertificate> villarreal_type(const SimplicialComplex& complex) {
  auto members = all_positions(complex.size());
  VillarrealCertificate cert;
  while (members.size() >= 2) {
    auto it = std::find_if(members.begin(), members.end(), [&](std::size_t f) {
      return leaf_status_within(complex, f, members).kind == LeafKind::GoodLeaf;
    });
    if (it == members.end()) break;
    cert.peel_order.push_back(*it);
    members.erase(it);
  }

  for (const auto& part : connected_components(complex.subcomplex(members))) {
    Component global = part;
    for (auto& p : global.facet_indices) p = members[p];
    auto r = classify_residual(global);
    if (!r) return std::nullopt;
    cert.residual_components.push_back(std::move(*r));
  }
  return cert;
}

bool certificate_replays(const SimplicialComplex& complex, const VillarrealCertificate& cert) {
  std::vector<std::size_t> members;
  for (const auto& r : cert.residual_components) {
    members.insert(members.end(), r.facets.begin(), r.facets.end());
  }
  std::sort(members.begin(), members.end());
  if (members.size() + cert.peel_order.size() != complex.size()) return false;

  const auto parts = connected_components(complex.subcomplex(members));
  if (parts.size() != cert.residual_components.size()) return false;
  for (const auto& part : parts) {
    Component global = part;
    for (auto& p : global.facet_indices) p = members[p];
    auto r = classify_residual(global);
    if (!r) return false;
    const bool listed = std::any_of(
        cert.residual_components.begin(), cert.residual_components.end(),
        [&](const ResidualComponent& c) { return c.facets == r->facets && c.kind == r->kind; });
    if (!listed) return false;
  }

  for (auto it = cert.peel_order.rbegin(); it != cert.peel_order.rend(); ++it) {
    if (std::find(members.begin(), members.end(), *it) != members.end()) return false;
    members.push_back(*it);
    if (leaf_status_within(complex, *it, members).kind != LeafKind::GoodLeaf) return false;
  }
  return true;
}

std::string_view to_string(PatchProblem problem) {
  switch (problem) {
    case PatchProblem::BadCoverIndex: return "bad cover index";
    case PatchProblem::NotAdjacent: return "covered facets are not adjacent";
    case PatchProblem::OutsideCover: return "patch leaves the covered facets";
    case PatchProblem::Comparable: return "patch is comparable with a facet";
    case PatchProblem::RepeatedCover: return "cover pair used twice";
    case PatchProblem::Overlapping: return "patches overlap";
  }
  return "?";
}

std::optional<PatchViolation> validate_patches(const SimplicialComplex& base,
                                               std::span<const PatchSpec> patches) {
  for (std::size_t p = 0; p < patches.size(); ++p) {
    const PatchSpec& spec = patches[p];
    auto violation = [&](PatchProblem problem, std::string detail) {
      return PatchViolation{p, problem, std::move(detail)};
    };
    const std::size_t i = spec.first;
    const std::size_t j = spec.second;
    if (i >= base.size() || j >= base.size() || i == j) {
      return violation(PatchProblem::BadCoverIndex,
                       "covers " + std::to_string(i + 1) + " " + std::to_string(j + 1));
    }
    if (spec.patch.empty()) return violation(PatchProblem::OutsideCover, "empty patch");
    if (sets::disjoint(base[i], base[j])) {
      return violation(PatchProblem::NotAdjacent,
                       sets::to_string(base[i]) + " and " + sets::to_string(base[j]));
    }
    VertexSet allowed = sets::unite(base[i], base[j]);
    for (std::size_t h = 0; h < base.size(); ++h) {
      if (h != i && h != j) allowed = sets::minus(allowed, base[h]);
    }
    const VertexSet outside = sets::minus(spec.patch, allowed);
    if (!outside.empty()) {
      return violation(PatchProblem::OutsideCover, "vertices " + sets::to_string(outside));
    }
    for (const auto& f : base.facets()) {
      if (sets::is_subset(spec.patch, f) || sets::is_subset(f, spec.patch)) {
        return violation(PatchProblem::Comparable, sets::to_string(spec.patch) + " vs " +
                                                       sets::to_string(f));
      }
    }
    for (std::size_t q = 0; q < p; ++q) {
      const PatchSpec& other = patches[q];
      if (std::minmax(i, j) == std::minmax(other.first, other.second)) {
        return violation(PatchProblem::RepeatedCover, "same pair as patch " + std::to_string(q + 1));
      }
      if (!sets::disjoint(spec.patch, other.patch)) {
        return violation(PatchProblem::Overlapping, "meets patch " + std::to_string(q + 1));
      }
    }
  }
  return std::nullopt;
}

SimplicialComplex attach_patches(const SimplicialComplex& base, std::span<const PatchSpec> patches) {
  std::vector<VertexSet> facets = base.facets();
  int n = base.vertex_count();
  for (const auto& p : patches) {
    facets.push_back(p.patch);
    if (!p.patch.empty()) n = std::max(n, p.patch.back());
  }
  return build_complex(std::move(facets), n);
}

}  // namespace montype
