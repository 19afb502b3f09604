#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "montype/classify.hpp"
#include "montype/conjecture.hpp"
#include "montype/cycles.hpp"
#include "montype/linear_type.hpp"
#include "montype/text_io.hpp"

namespace montype {

using json = nlohmann::ordered_json;

struct LeafEntry {
  std::size_t facet = 0;
  LeafKind kind = LeafKind::NotLeaf;
  std::optional<std::size_t> witness;
  std::optional<std::vector<Var>> m_order;  // variable order when an M-element

  friend bool operator==(const LeafEntry&, const LeafEntry&) = default;
};

struct PatchCheck {
  std::vector<PatchSpec> patches;
  bool valid = true;
  std::optional<std::size_t> failing_patch;
  std::string problem;

  friend bool operator==(const PatchCheck&, const PatchCheck&) = default;
};

/// Everything `classify` reports about one complex.
struct ClassifyReport {
  std::vector<VertexSet> facets;
  int vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> line_graph;
  std::size_t components = 0;
  VertexSet apex;
  std::vector<Var> free_variables;
  std::vector<LeafEntry> leaves;
  std::optional<std::vector<std::size_t>> good_leaf_order;
  std::optional<std::vector<std::size_t>> leaf_order;
  std::optional<std::vector<std::size_t>> m_sequence;
  CycleKind cycle_kind = CycleKind::None;
  std::optional<std::vector<std::size_t>> strong_neighbor_sequence;
  std::optional<std::size_t> special_min_length;
  std::optional<std::size_t> berge_min_length;
  std::optional<DeletionMap> deletion_map;
  std::optional<VillarrealCertificate> villarreal;
  std::optional<PatchCheck> patch_check;

  friend bool operator==(const ClassifyReport&, const ClassifyReport&) = default;
};

ClassifyReport classify_report(const ParsedInput& input);

/// Linear relations and, optionally, the truncated basis of J_1.
struct ReesReport {
  int n = 0;
  std::size_t s = 0;
  int degree_cap = 0;
  std::vector<ReesElement> linear_relations;
  std::optional<std::vector<ReesElement>> groebner_basis;
  GroebnerStats stats;

  friend bool operator==(const ReesReport&, const ReesReport&) = default;
};

ReesReport rees_report(const SquarefreeIdeal& ideal, int max_degree, bool with_basis, const Budget& budget);

json to_json(const ClassifyReport& r);
json to_json(const CycleReport& r, const SimplicialComplex& complex);
json to_json(const Certificate& c);
json to_json(const ReesReport& r);
json to_json(const ScanReport& r);

ClassifyReport classify_report_from_json(const json& j);
CycleReport cycle_report_from_json(const json& j);
Certificate certificate_from_json(const json& j);
ReesReport rees_report_from_json(const json& j);
ScanReport scan_report_from_json(const json& j);

std::string to_text(const ClassifyReport& r);
std::string to_text(const CycleReport& r, const SimplicialComplex& complex);
std::string to_text(const Certificate& c);
std::string to_text(const ReesReport& r);
std::string to_text(const ScanReport& r);

}  // namespace montype
