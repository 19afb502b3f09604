#include "montype/report.hpp"

#include <sstream>

#include "montype/error.hpp"

namespace montype {

namespace {

// Facet positions are 1-based in every external form.
json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

std::vector<std::size_t> zero_based(const json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(x.get<std::size_t>() - 1);
  return out;
}

template <typename T, typename F>
json optional_json(const std::optional<T>& v, F f) {
  return v ? f(*v) : json(nullptr);
}

template <typename T, typename F>
std::optional<T> optional_from(const json& j, F f) {
  if (j.is_null()) return std::nullopt;
  return f(j);
}

std::string_view leaf_name(LeafKind k) {
  switch (k) {
    case LeafKind::NotLeaf: return "NotLeaf";
    case LeafKind::Leaf: return "Leaf";
    case LeafKind::GoodLeaf: return "GoodLeaf";
  }
  return "?";
}

LeafKind leaf_from(const std::string& s) {
  if (s == "Leaf") return LeafKind::Leaf;
  if (s == "GoodLeaf") return LeafKind::GoodLeaf;
  return LeafKind::NotLeaf;
}

std::string_view cycle_kind_name(CycleKind k) {
  switch (k) {
    case CycleKind::SimplicialCycle: return "SimplicialCycle";
    case CycleKind::LinearCycle: return "LinearCycle";
    case CycleKind::None: return "None";
  }
  return "?";
}

CycleKind cycle_kind_from(const std::string& s) {
  if (s == "SimplicialCycle") return CycleKind::SimplicialCycle;
  if (s == "LinearCycle") return CycleKind::LinearCycle;
  return CycleKind::None;
}

std::string_view verdict_name(Verdict v) {
  return v == Verdict::NotLinearType ? "NotLinearType" : "LinearTypeUpTo";
}

json facets_json(const std::vector<VertexSet>& facets) {
  json out = json::array();
  for (const auto& f : facets) out.push_back(f);
  return out;
}

std::string order_text(const std::vector<std::size_t>& order) {
  std::string s;
  for (std::size_t i : order) s += (s.empty() ? "F" : " F") + std::to_string(i + 1);
  return s;
}

json villarreal_json(const VillarrealCertificate& c) {
  json residual = json::array();
  for (const auto& r : c.residual_components) {
    residual.push_back({{"kind", r.kind == ResidualKind::Simplex ? "Simplex" : "OddSimplicialCycle"},
                        {"length", r.length()},
                        {"facets", one_based(r.facets)},
                        {"order", one_based(r.order)}});
  }
  return {{"peel_order", one_based(c.peel_order)}, {"residual_components", residual}};
}

VillarrealCertificate villarreal_from(const json& j) {
  VillarrealCertificate c;
  c.peel_order = zero_based(j.at("peel_order"));
  for (const auto& r : j.at("residual_components")) {
    ResidualComponent rc;
    rc.kind = r.at("kind") == "Simplex" ? ResidualKind::Simplex : ResidualKind::OddSimplicialCycle;
    rc.facets = zero_based(r.at("facets"));
    rc.order = zero_based(r.at("order"));
    c.residual_components.push_back(std::move(rc));
  }
  return c;
}

json deletion_json(const DeletionMap& d) {
  json shadows = json::array();
  for (const auto& [v, k] : d.shadow_of) shadows.push_back({v, k});
  return {{"deleted", d.deleted}, {"kept", d.kept}, {"shadow_of", shadows}};
}

DeletionMap deletion_from(const json& j) {
  DeletionMap d;
  d.deleted = j.at("deleted").get<std::vector<Var>>();
  d.kept = j.at("kept").get<std::vector<Var>>();
  for (const auto& p : j.at("shadow_of")) d.shadow_of[p.at(0).get<Var>()] = p.at(1).get<Var>();
  return d;
}

std::string vars_text(const std::vector<Var>& vars) {
  std::string s = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? ",x" : "x") + std::to_string(vars[i]);
  return s + "}";
}

json element_json(const ReesElement& e) { return e.to_string(); }

json witness_json(const Witness& w) {
  const auto& m = w.element.lead().mono;
  return {{"ring", {m.ambient(), m.generators()}},
          {"element", w.element.to_string()},
          {"degree", w.degree()},
          {"alpha", one_based(w.alpha)},
          {"beta", one_based(w.beta)},
          {"normal_form", w.normal_form.to_string()}};
}

Witness witness_from(const json& j) {
  const int n = j.at("ring").at(0).get<int>();
  const auto s = j.at("ring").at(1).get<std::size_t>();
  return Witness{parse_rees_element(j.at("element").get<std::string>(), n, s), zero_based(j.at("alpha")),
                 zero_based(j.at("beta")), parse_rees_element(j.at("normal_form").get<std::string>(), n, s)};
}

json groebner_stats_json(const GroebnerStats& g) {
  return {{"pairs_considered", g.pairs_considered},
          {"pairs_reduced", g.pairs_reduced},
          {"pairs_pruned", g.pairs_pruned},
          {"pairs_deferred", g.pairs_deferred},
          {"reductions_to_zero", g.reductions_to_zero}};
}

GroebnerStats groebner_stats_from(const json& j) {
  GroebnerStats g;
  g.pairs_considered = j.at("pairs_considered");
  g.pairs_reduced = j.at("pairs_reduced");
  g.pairs_pruned = j.at("pairs_pruned");
  g.pairs_deferred = j.at("pairs_deferred");
  g.reductions_to_zero = j.at("reductions_to_zero");
  return g;
}

}  // namespace

ClassifyReport classify_report(const ParsedInput& input) {
  const SimplicialComplex& complex = input.complex;
  const SquarefreeIdeal& ideal = input.ideal;
  ClassifyReport r;
  r.facets = complex.facets();
  r.vertex_count = complex.vertex_count();
  const LineGraph graph = line_graph(complex);
  r.line_graph = graph.edges;
  r.components = connected_components(complex).size();
  r.apex = complex[0];
  for (const auto& f : complex.facets()) r.apex = sets::intersect(r.apex, f);
  r.free_variables = free_variables(ideal);
  for (std::size_t f = 0; f < complex.size(); ++f) {
    const LeafStatus status = leaf_status(complex, f);
    r.leaves.push_back({f, status.kind, status.witness, is_M_element(ideal, f)});
  }
  r.good_leaf_order = good_leaf_order(complex);
  if (complex.size() <= 62) r.leaf_order = leaf_order(complex);
  r.m_sequence = find_M_sequence(ideal);

  if (complex.size() <= 12) {
    const CycleReport cycles = cycle_report(complex, CycleMode::Special, complex.size());
    r.cycle_kind = cycles.kind;
    r.strong_neighbor_sequence = cycles.strong_neighbor_sequence;
    r.special_min_length = cycles.special_min_length;
    r.berge_min_length = cycles.berge_min_length;
  } else if (graph.is_cycle_graph()) {
    r.cycle_kind = CycleKind::LinearCycle;
  }
  if (graph.is_cycle_graph()) {
    try {
      r.deletion_map = deletion_map(complex);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConeNotStripped) throw;
    }
  }
  r.villarreal = villarreal_type(complex);
  if (!input.patches.empty()) {
    PatchCheck check;
    check.patches = input.patches;
    if (auto v = validate_patches(input.base, input.patches)) {
      check.valid = false;
      check.failing_patch = v->patch;
      check.problem = std::string(to_string(v->problem)) + ": " + v->detail;
    }
    r.patch_check = std::move(check);
  }
  return r;
}

ReesReport rees_report(const SquarefreeIdeal& ideal, int max_degree, bool with_basis, const Budget& budget) {
  ReesReport r;
  r.n = ideal.ambient();
  r.s = ideal.size();
  r.degree_cap = max_degree + 1;
  if (ideal.size() >= 2) {
    for (auto& l : linear_relations(ideal)) r.linear_relations.push_back(std::move(l.element));
  }
  if (with_basis) {
    GroebnerBasis gb = linear_part_basis(ideal, r.degree_cap, {}, budget);
    r.stats = gb.stats;
    r.groebner_basis = std::move(gb.elements);
  }
  return r;
}

json to_json(const ClassifyReport& r) {
  json leaves = json::array();
  for (const auto& l : r.leaves) {
    leaves.push_back({{"facet", l.facet + 1},
                      {"kind", leaf_name(l.kind)},
                      {"witness", optional_json(l.witness, [](std::size_t w) { return json(w + 1); })},
                      {"m_order", optional_json(l.m_order, [](const std::vector<Var>& v) { return json(v); })}});
  }
  json edges = json::array();
  for (const auto& [i, j] : r.line_graph) edges.push_back({i + 1, j + 1});
  return {
      {"report", "classify"},
      {"facets", facets_json(r.facets)},
      {"vertex_count", r.vertex_count},
      {"line_graph", edges},
      {"components", r.components},
      {"apex", r.apex},
      {"free_variables", r.free_variables},
      {"leaves", leaves},
      {"good_leaf_order", optional_json(r.good_leaf_order, one_based)},
      {"forest", r.good_leaf_order.has_value()},
      {"leaf_order", optional_json(r.leaf_order, one_based)},
      {"m_sequence", optional_json(r.m_sequence, one_based)},
      {"cycle_kind", cycle_kind_name(r.cycle_kind)},
      {"strong_neighbor_sequence", optional_json(r.strong_neighbor_sequence, one_based)},
      {"special_min_length", optional_json(r.special_min_length, [](std::size_t v) { return json(v); })},
      {"berge_min_length", optional_json(r.berge_min_length, [](std::size_t v) { return json(v); })},
      {"deletion_map", optional_json(r.deletion_map, deletion_json)},
      {"villarreal", optional_json(r.villarreal, villarreal_json)},
      {"patch_check", optional_json(r.patch_check, [](const PatchCheck& p) {
         json list = json::array();
         for (const auto& spec : p.patches) {
           list.push_back({{"patch", spec.patch}, {"covers", {spec.first + 1, spec.second + 1}}});
         }
         return json{{"patches", list},
                     {"valid", p.valid},
                     {"failing_patch", optional_json(p.failing_patch, [](std::size_t i) { return json(i + 1); })},
                     {"problem", p.problem}};
       })},
  };
}

ClassifyReport classify_report_from_json(const json& j) {
  ClassifyReport r;
  r.facets = j.at("facets").get<std::vector<VertexSet>>();
  r.vertex_count = j.at("vertex_count");
  for (const auto& e : j.at("line_graph")) {
    r.line_graph.emplace_back(e.at(0).get<std::size_t>() - 1, e.at(1).get<std::size_t>() - 1);
  }
  r.components = j.at("components");
  r.apex = j.at("apex").get<VertexSet>();
  r.free_variables = j.at("free_variables").get<std::vector<Var>>();
  for (const auto& l : j.at("leaves")) {
    r.leaves.push_back({l.at("facet").get<std::size_t>() - 1, leaf_from(l.at("kind")),
                        optional_from<std::size_t>(l.at("witness"), [](const json& w) { return w.get<std::size_t>() - 1; }),
                        optional_from<std::vector<Var>>(l.at("m_order"), [](const json& v) { return v.get<std::vector<Var>>(); })});
  }
  r.good_leaf_order = optional_from<std::vector<std::size_t>>(j.at("good_leaf_order"), zero_based);
  r.leaf_order = optional_from<std::vector<std::size_t>>(j.at("leaf_order"), zero_based);
  r.m_sequence = optional_from<std::vector<std::size_t>>(j.at("m_sequence"), zero_based);
  r.cycle_kind = cycle_kind_from(j.at("cycle_kind"));
  r.strong_neighbor_sequence = optional_from<std::vector<std::size_t>>(j.at("strong_neighbor_sequence"), zero_based);
  auto size = [](const json& v) { return v.get<std::size_t>(); };
  r.special_min_length = optional_from<std::size_t>(j.at("special_min_length"), size);
  r.berge_min_length = optional_from<std::size_t>(j.at("berge_min_length"), size);
  r.deletion_map = optional_from<DeletionMap>(j.at("deletion_map"), deletion_from);
  r.villarreal = optional_from<VillarrealCertificate>(j.at("villarreal"), villarreal_from);
  r.patch_check = optional_from<PatchCheck>(j.at("patch_check"), [](const json& p) {
    PatchCheck c;
    for (const auto& spec : p.at("patches")) {
      c.patches.push_back({spec.at("patch").get<VertexSet>(), spec.at("covers").at(0).get<std::size_t>() - 1,
                           spec.at("covers").at(1).get<std::size_t>() - 1});
    }
    c.valid = p.at("valid");
    c.failing_patch = optional_from<std::size_t>(p.at("failing_patch"), [](const json& i) { return i.get<std::size_t>() - 1; });
    c.problem = p.at("problem");
    return c;
  });
  return r;
}

json to_json(const CycleReport& r, const SimplicialComplex& complex) {
  json cycles = json::array();
  for (const auto& c : r.cycles) {
    cycles.push_back({{"length", c.length()}, {"sequence", cycle_tokens(c)}, {"text", format_cycle(complex, c)}});
  }
  auto size = [](std::size_t v) { return json(v); };
  return {{"report", "cycles"},
          {"kind", cycle_kind_name(r.kind)},
          {"length", optional_json(r.length, size)},
          {"strong_neighbor_sequence", optional_json(r.strong_neighbor_sequence, one_based)},
          {"mode", r.mode == CycleMode::Special ? "special" : "berge"},
          {"max_length", r.max_length},
          {"cycles", cycles},
          {"berge_min_length", optional_json(r.berge_min_length, size)},
          {"special_min_length", optional_json(r.special_min_length, size)}};
}

CycleReport cycle_report_from_json(const json& j) {
  CycleReport r;
  auto size = [](const json& v) { return v.get<std::size_t>(); };
  r.kind = cycle_kind_from(j.at("kind"));
  r.length = optional_from<std::size_t>(j.at("length"), size);
  r.strong_neighbor_sequence = optional_from<std::vector<std::size_t>>(j.at("strong_neighbor_sequence"), zero_based);
  r.mode = j.at("mode") == "special" ? CycleMode::Special : CycleMode::Berge;
  r.max_length = j.at("max_length");
  for (const auto& c : j.at("cycles")) {
    r.cycles.push_back(parse_cycle_tokens(c.at("sequence").get<std::vector<std::string>>()));
  }
  r.berge_min_length = optional_from<std::size_t>(j.at("berge_min_length"), size);
  r.special_min_length = optional_from<std::size_t>(j.at("special_min_length"), size);
  return r;
}

json to_json(const Certificate& c) {
  const auto& s = c.stats;
  return {{"report", "linear-type"},
          {"verdict", verdict_name(c.verdict)},
          {"max_degree", c.max_degree},
          {"witness", optional_json(c.witness, witness_json)},
          {"groebner_basis_size", c.groebner_basis_size},
          {"components", c.components},
          {"stats",
           {{"relations", s.relations},
            {"shared_index_skipped", s.shared_index_skipped},
            {"coincidences", s.coincidences},
            {"nonzero", s.nonzero},
            {"substitution_checks", s.substitution_checks},
            {"groebner", groebner_stats_json(s.groebner)}}}};
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.verdict = j.at("verdict") == "NotLinearType" ? Verdict::NotLinearType : Verdict::LinearTypeUpTo;
  c.max_degree = j.at("max_degree");
  c.witness = optional_from<Witness>(j.at("witness"), witness_from);
  c.groebner_basis_size = j.at("groebner_basis_size");
  c.components = j.at("components");
  const json& s = j.at("stats");
  c.stats.relations = s.at("relations");
  c.stats.shared_index_skipped = s.at("shared_index_skipped");
  c.stats.coincidences = s.at("coincidences");
  c.stats.nonzero = s.at("nonzero");
  c.stats.substitution_checks = s.at("substitution_checks");
  c.stats.groebner = groebner_stats_from(s.at("groebner"));
  return c;
}

json to_json(const ReesReport& r) {
  json linear = json::array();
  for (const auto& l : r.linear_relations) linear.push_back(element_json(l));
  json out = {{"report", "rees"}, {"ring", {r.n, r.s}}, {"degree_cap", r.degree_cap}, {"linear_relations", linear}};
  if (r.groebner_basis) {
    json gb = json::array();
    for (const auto& g : *r.groebner_basis) gb.push_back(element_json(g));
    out["groebner_basis"] = gb;
    out["groebner_stats"] = groebner_stats_json(r.stats);
  } else {
    out["groebner_basis"] = nullptr;
  }
  return out;
}

ReesReport rees_report_from_json(const json& j) {
  ReesReport r;
  r.n = j.at("ring").at(0);
  r.s = j.at("ring").at(1);
  r.degree_cap = j.at("degree_cap");
  for (const auto& l : j.at("linear_relations")) r.linear_relations.push_back(parse_rees_element(l.get<std::string>(), r.n, r.s));
  if (!j.at("groebner_basis").is_null()) {
    std::vector<ReesElement> gb;
    for (const auto& g : j.at("groebner_basis")) gb.push_back(parse_rees_element(g.get<std::string>(), r.n, r.s));
    r.groebner_basis = std::move(gb);
    r.stats = groebner_stats_from(j.at("groebner_stats"));
  }
  return r;
}

json to_json(const ScanReport& r) {
  json trials = json::array();
  for (const auto& t : r.trials) {
    json patches = json::array();
    for (const auto& p : t.instance.patches) {
      patches.push_back({{"patch", p.patch}, {"covers", {p.first + 1, p.second + 1}}});
    }
    trials.push_back({{"trial", t.trial},
                      {"vertex_count", t.instance.base.vertex_count()},
                      {"facets", facets_json(t.instance.base.facets())},
                      {"patches", patches},
                      {"certificate", to_json(t.certificate)}});
  }
  return {{"report", "conjecture"},
          {"length", r.config.length},
          {"patches", r.config.patches},
          {"trials_requested", r.config.trials},
          {"seed", r.config.seed},
          {"requested_max_degree", r.config.max_degree},
          {"max_degree", r.max_degree},
          {"parity", r.odd_parity ? "odd" : "even"},
          {"linear_type", r.linear_type},
          {"not_linear_type", r.not_linear_type},
          {"counterexample_candidates", r.counterexample_candidates},
          {"trials", trials}};
}

ScanReport scan_report_from_json(const json& j) {
  ScanReport r;
  r.config.length = j.at("length");
  r.config.patches = j.at("patches");
  r.config.trials = j.at("trials_requested");
  r.config.seed = j.at("seed");
  r.config.max_degree = j.at("requested_max_degree");
  r.max_degree = j.at("max_degree");
  r.odd_parity = j.at("parity") == "odd";
  r.linear_type = j.at("linear_type");
  r.not_linear_type = j.at("not_linear_type");
  r.counterexample_candidates = j.at("counterexample_candidates").get<std::vector<std::size_t>>();
  for (const auto& t : j.at("trials")) {
    ScanTrial row;
    row.trial = t.at("trial");
    row.instance.base = build_complex(t.at("facets").get<std::vector<VertexSet>>(), t.at("vertex_count").get<int>());
    for (const auto& p : t.at("patches")) {
      row.instance.patches.push_back({p.at("patch").get<VertexSet>(), p.at("covers").at(0).get<std::size_t>() - 1,
                                      p.at("covers").at(1).get<std::size_t>() - 1});
    }
    row.certificate = certificate_from_json(t.at("certificate"));
    r.trials.push_back(std::move(row));
  }
  return r;
}

std::string to_text(const ClassifyReport& r) {
  std::ostringstream out;
  out << "facets: " << r.facets.size() << " on " << r.vertex_count << " vertices\n";
  for (std::size_t i = 0; i < r.facets.size(); ++i) out << "  F" << i + 1 << " = " << sets::to_string(r.facets[i]) << "\n";
  out << "line graph: " << r.line_graph.size() << " edges, " << r.components << " component(s)\n";
  if (!r.apex.empty()) out << "cone apex: " << sets::to_string(r.apex) << "\n";
  out << "free variables: " << vars_text(r.free_variables) << "\n";
  out << "leaves:";
  bool any = false;
  for (const auto& l : r.leaves) {
    if (l.kind == LeafKind::NotLeaf) continue;
    out << " F" << l.facet + 1 << (l.kind == LeafKind::GoodLeaf ? " (good)" : "");
    any = true;
  }
  out << (any ? "\n" : " none\n");
  out << "forest: " << (r.good_leaf_order ? "yes, good leaf order " + order_text(*r.good_leaf_order) : "no") << "\n";
  out << "leaf order: " << (r.leaf_order ? order_text(*r.leaf_order) : "none") << "\n";
  out << "M-sequence: " << (r.m_sequence ? order_text(*r.m_sequence) : "none") << "\n";
  out << "cycle: ";
  switch (r.cycle_kind) {
    case CycleKind::SimplicialCycle:
      out << "simplicial cycle of length " << r.facets.size() << " (" << order_text(*r.strong_neighbor_sequence) << ")\n";
      break;
    case CycleKind::LinearCycle: out << "linear cycle of length " << r.facets.size() << "\n"; break;
    case CycleKind::None: out << "none\n"; break;
  }
  auto min_text = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << "shortest special cycle (length >= 3): " << min_text(r.special_min_length)
      << ", shortest Berge cycle: " << min_text(r.berge_min_length) << "\n";
  if (r.deletion_map) {
    out << "deletion set D: " << vars_text(r.deletion_map->deleted) << ", kept: " << vars_text(r.deletion_map->kept)
        << "\n";
  }
  out << "Villarreal: ";
  if (r.villarreal) {
    out << "yes";
    if (!r.villarreal->peel_order.empty()) out << "; peeled good leaves " << order_text(r.villarreal->peel_order);
    for (const auto& c : r.villarreal->residual_components) {
      out << "; " << (c.kind == ResidualKind::Simplex ? "simplex " : "odd simplicial cycle ")
          << order_text(c.order);
      if (c.kind == ResidualKind::OddSimplicialCycle) out << " (length " << c.length() << ")";
    }
    out << "\n";
  } else {
    out << "no\n";
  }
  if (r.patch_check) {
    out << "patches: " << (r.patch_check->valid ? "compatible" : "invalid");
    if (!r.patch_check->valid) out << " (patch " << *r.patch_check->failing_patch + 1 << ", " << r.patch_check->problem << ")";
    out << "\n";
  }
  return out.str();
}

std::string to_text(const CycleReport& r, const SimplicialComplex& complex) {
  std::ostringstream out;
  out << "kind: " << cycle_kind_name(r.kind);
  if (r.length) out << " (length " << *r.length << ")";
  out << "\n";
  out << (r.mode == CycleMode::Special ? "special" : "Berge") << " cycles up to length " << r.max_length << ": "
      << r.cycles.size() << "\n";
  for (const auto& c : r.cycles) out << "  [" << c.length() << "] " << format_cycle(complex, c) << "\n";
  auto min_text = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << "shortest special cycle (length >= 3): " << min_text(r.special_min_length)
      << ", shortest Berge cycle: " << min_text(r.berge_min_length) << "\n";
  return out.str();
}

std::string to_text(const Certificate& c) {
  std::ostringstream out;
  if (c.verdict == Verdict::NotLinearType) {
    out << "verdict: NotLinearType\n";
    out << "witness (T-degree " << c.witness->degree() << "): " << c.witness->element.to_string() << "\n";
    out << "normal form: " << c.witness->normal_form.to_string() << "\n";
  } else {
    out << "verdict: LinearTypeUpTo(" << c.max_degree << ")\n";
  }
  out << "components: " << c.components << ", Gröbner basis size: " << c.groebner_basis_size
      << ", relations reduced: " << c.stats.relations << "\n";
  return out.str();
}

std::string to_text(const ReesReport& r) {
  std::ostringstream out;
  out << "# linear relations (" << r.linear_relations.size() << ")\n";
  for (const auto& l : r.linear_relations) out << l.to_string() << "\n";
  if (r.groebner_basis) {
    out << "# groebner basis, T-degree <= " << r.degree_cap << " (" << r.groebner_basis->size() << ")\n";
    for (const auto& g : *r.groebner_basis) out << g.to_string() << "\n";
  }
  return out.str();
}

std::string to_text(const ScanReport& r) {
  std::ostringstream out;
  out << "length " << r.config.length << ", patches " << r.config.patches << ", parity "
      << (r.odd_parity ? "odd" : "even") << ", K = " << r.max_degree << ", trials " << r.trials.size() << "\n";
  out << "LinearTypeUpTo: " << r.linear_type << "\nNotLinearType: " << r.not_linear_type << "\n";
  out << "counterexample candidates: " << r.counterexample_candidates.size() << "\n";
  for (std::size_t t : r.counterexample_candidates) {
    const auto& row = r.trials[t];
    out << "trial " << t << ":\n" << row.instance.base.to_string();
    for (const auto& p : row.instance.patches) out << format_patch(p) << "\n";
    out << "witness: " << row.certificate.witness->element.to_string() << "\n";
  }
  return out.str();
}

}  // namespace montype
