#include "montype/cycles.hpp"

#include <algorithm>
#include <set>

#include "montype/error.hpp"

namespace montype {

HyperCycle canonical_cycle(const HyperCycle& cycle) {
  const std::size_t s = cycle.length();
  HyperCycle best = cycle;
  HyperCycle candidate;
  candidate.facets.resize(s);
  candidate.vertices.resize(s);
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t i = 0; i < s; ++i) {
      candidate.facets[i] = cycle.facets[(i + r) % s];
      candidate.vertices[i] = cycle.vertices[(i + r) % s];
    }
    if (candidate < best) best = candidate;
    // Reversed traversal: v0, F(s-1), v(s-1), ..., F0, v0, then rotated.
    for (std::size_t i = 0; i < s; ++i) {
      candidate.facets[i] = cycle.facets[(2 * s - 1 - i + r) % s];
      candidate.vertices[i] = cycle.vertices[(2 * s - i + r) % s];
    }
    if (candidate < best) best = candidate;
  }
  return best;
}

namespace {

std::size_t connecting_in(const VertexSet& facet, const std::vector<int>& vertices) {
  return static_cast<std::size_t>(std::count_if(
      vertices.begin(), vertices.end(), [&](int v) { return sets::contains(facet, v); }));
}

bool overfull(const SimplicialComplex& complex, const std::vector<std::size_t>& facets,
              const std::vector<int>& vertices) {
  return std::any_of(facets.begin(), facets.end(), [&](std::size_t f) {
    return connecting_in(complex[f], vertices) > 2;
  });
}

}  // namespace

bool is_berge_cycle(const SimplicialComplex& complex, const HyperCycle& cycle) {
  const std::size_t s = cycle.length();
  if (s < 2 || cycle.vertices.size() != s) return false;
  std::set<std::size_t> fs(cycle.facets.begin(), cycle.facets.end());
  std::set<int> vs(cycle.vertices.begin(), cycle.vertices.end());
  if (fs.size() != s || vs.size() != s) return false;
  for (std::size_t i = 0; i < s; ++i) {
    if (cycle.facets[i] >= complex.size()) return false;
    const VertexSet& f = complex[cycle.facets[i]];
    if (!sets::contains(f, cycle.vertices[i]) || !sets::contains(f, cycle.vertices[(i + 1) % s])) {
      return false;
    }
  }
  return true;
}

bool is_special_cycle(const SimplicialComplex& complex, const HyperCycle& cycle) {
  return is_berge_cycle(complex, cycle) && !overfull(complex, cycle.facets, cycle.vertices);
}

std::vector<HyperCycle> enumerate_cycles(const SimplicialComplex& complex, CycleMode mode,
                                         std::size_t max_length) {
  if (max_length < 2) {
    throw Error(ErrorCode::PreconditionViolated, "max_length must be at least 2");
  }
  const bool special = mode == CycleMode::Special;
  std::set<HyperCycle> found;
  std::vector<std::size_t> facets;
  std::vector<int> vertices;
  std::vector<bool> facet_used(complex.size(), false);

  // facets = F0..F(k-1), vertices = v0..v(k-1); the last facet was entered
  // through v(k-1) and still needs an exit vertex.
  auto extend = [&](auto&& self, std::size_t start) -> void {
    const std::size_t k = facets.size();
    const VertexSet& last = complex[facets.back()];
    if (k >= 2 && sets::contains(last, vertices.front()) && vertices.back() != vertices.front()) {
      HyperCycle c{facets, vertices};
      if (!special || !overfull(complex, facets, vertices)) found.insert(canonical_cycle(c));
    }
    if (k == max_length) return;
    for (int w : last) {
      if (std::find(vertices.begin(), vertices.end(), w) != vertices.end()) continue;
      vertices.push_back(w);
      if (!special || !overfull(complex, facets, vertices)) {
        for (std::size_t g = start + 1; g < complex.size(); ++g) {
          if (facet_used[g] || !sets::contains(complex[g], w)) continue;
          facets.push_back(g);
          facet_used[g] = true;
          if (!special || !overfull(complex, facets, vertices)) self(self, start);
          facet_used[g] = false;
          facets.pop_back();
        }
      }
      vertices.pop_back();
    }
  };

  for (std::size_t start = 0; start < complex.size(); ++start) {
    facet_used[start] = true;
    facets.assign(1, start);
    for (int v0 : complex[start]) {
      vertices.assign(1, v0);
      extend(extend, start);
    }
    facet_used[start] = false;
  }

  std::vector<HyperCycle> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const HyperCycle& a, const HyperCycle& b) {
    return a.length() < b.length();
  });
  return out;
}

std::string format_cycle(const SimplicialComplex& complex, const HyperCycle& cycle) {
  std::string s;
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    s += std::to_string(cycle.vertices[i]) + ',' + sets::to_string(complex[cycle.facets[i]]) + ',';
  }
  if (!cycle.vertices.empty()) s += std::to_string(cycle.vertices.front());
  return s;
}

std::vector<std::string> cycle_tokens(const HyperCycle& cycle) {
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    tokens.push_back("v" + std::to_string(cycle.vertices[i]));
    tokens.push_back("F" + std::to_string(cycle.facets[i] + 1));
  }
  if (!cycle.vertices.empty()) tokens.push_back("v" + std::to_string(cycle.vertices.front()));
  return tokens;
}

HyperCycle parse_cycle_tokens(const std::vector<std::string>& tokens) {
  HyperCycle c;
  if (tokens.size() < 3 || tokens.size() % 2 == 0 || tokens.front() != tokens.back()) {
    throw Error(ErrorCode::ParseError, "cycle token sequence must be closed and alternating");
  }
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    const char want = i % 2 == 0 ? 'v' : 'F';
    if (t.size() < 2 || t[0] != want) {
      throw Error(ErrorCode::ParseError, "unexpected cycle token '" + t + "'");
    }
    const int value = std::stoi(t.substr(1));
    if (want == 'v') {
      c.vertices.push_back(value);
    } else {
      if (value < 1) throw Error(ErrorCode::ParseError, "facet tokens are 1-based");
      c.facets.push_back(static_cast<std::size_t>(value - 1));
    }
  }
  return c;
}

bool is_strong_neighbor_cycle(const SimplicialComplex& complex,
                              const std::vector<std::size_t>& order) {
  const std::size_t s = order.size();
  if (s < 3 || s != complex.size()) return false;
  VertexSet common = complex[0];
  for (const auto& f : complex.facets()) common = sets::intersect(common, f);
  for (std::size_t i = 0; i < s; ++i) {
    if (!strong_neighbors(complex, order[i], order[(i + 1) % s])) return false;
    for (std::size_t j = i + 2; j < s; ++j) {
      if (i == 0 && j == s - 1) continue;
      if (sets::intersect(complex[order[i]], complex[order[j]]) != common) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> is_simplicial_cycle(const SimplicialComplex& complex) {
  const std::size_t s = complex.size();
  if (s < 3) return std::nullopt;
  if (s > 12) throw Error(ErrorCode::SizeLimit, "simplicial-cycle search is limited to 12 facets");

  VertexSet common = complex[0];
  for (const auto& f : complex.facets()) common = sets::intersect(common, f);
  std::vector<std::vector<bool>> neighbor(s, std::vector<bool>(s, false));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      neighbor[i][j] = neighbor[j][i] = strong_neighbors(complex, i, j);
    }
  }

  std::vector<std::size_t> order{0};
  std::vector<bool> used(s, false);
  used[0] = true;
  auto search = [&](auto&& self) -> bool {
    const std::size_t k = order.size();
    if (k == s) return neighbor[order.back()][order.front()];
    for (std::size_t next = 1; next < s; ++next) {
      if (used[next] || !neighbor[order.back()][next]) continue;
      // Every earlier facet except the predecessor (and the first one when
      // `next` closes the cycle) must meet `next` only in the common part.
      bool ok = true;
      for (std::size_t j = 0; j + 1 < k && ok; ++j) {
        if (j == 0 && k == s - 1) continue;
        ok = sets::intersect(complex[order[j]], complex[next]) == common;
      }
      if (!ok) continue;
      used[next] = true;
      order.push_back(next);
      if (self(self)) return true;
      order.pop_back();
      used[next] = false;
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  return order;
}

Monomial DeletionMap::apply(const Monomial& m) const {
  Monomial out = m;
  for (Var v : deleted) out = out.without(v);
  return out;
}

SquarefreeIdeal DeletionMap::apply(const SquarefreeIdeal& ideal) const {
  SquarefreeIdeal out = ideal;
  for (Var v : deleted) out = substitute_unit(out, v);
  return out;
}

DeletionMap deletion_map(const SimplicialComplex& complex) {
  const LineGraph graph = line_graph(complex);
  if (!graph.is_cycle_graph()) {
    throw Error(ErrorCode::NotLinearCycle, "the line graph is not a cycle");
  }
  if (complex.size() == 3) {
    VertexSet common = sets::intersect(sets::intersect(complex[0], complex[1]), complex[2]);
    if (!common.empty()) {
      throw Error(ErrorCode::ConeNotStripped,
                  "length-3 cycle is a cone over " + sets::to_string(common));
    }
  }

  std::map<int, int> occurrences;
  for (const auto& f : complex.facets()) {
    for (int v : f) ++occurrences[v];
  }
  DeletionMap map;
  std::set<Var> deleted;
  for (const auto& [v, count] : occurrences) {
    if (count == 1) deleted.insert(v);
    if (count > 2) {
      throw Error(ErrorCode::NotLinearCycle, "x" + std::to_string(v) + " lies in three facets");
    }
  }
  std::set<Var> kept;
  for (const auto& [i, j] : graph.edges) {
    const VertexSet common = sets::intersect(complex[i], complex[j]);
    const Var keep = common.back();
    kept.insert(keep);
    for (Var v : common) {
      if (v == keep) continue;
      deleted.insert(v);
      map.shadow_of[v] = keep;
    }
  }
  map.deleted.assign(deleted.begin(), deleted.end());
  map.kept.assign(kept.begin(), kept.end());
  return map;
}

EquivalenceReport equivalence_report(const SimplicialComplex& complex) {
  const std::size_t s = complex.size();
  if (s < 4) throw Error(ErrorCode::PreconditionViolated, "needs at least four facets");
  const LineGraph graph = line_graph(complex);
  if (!graph.is_connected()) throw Error(ErrorCode::PreconditionViolated, "complex is disconnected");
  if (!peel_cone(complex).apex.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "complex is a cone");
  }

  auto exactly_full_length = [&](CycleMode mode) {
    bool full = false;
    for (const auto& c : enumerate_cycles(complex, mode, s)) {
      if (c.length() >= 3 && c.length() < s) return false;
      if (c.length() == s) full = true;
    }
    return full;
  };

  EquivalenceReport r;
  r.facets = s;
  r.simplicial_cycle = is_simplicial_cycle(complex).has_value();
  r.linear_cycle = graph.is_cycle_graph();
  r.special_cycle_condition = exactly_full_length(CycleMode::Special);
  r.berge_cycle_condition = exactly_full_length(CycleMode::Berge);
  return r;
}

CycleReport cycle_report(const SimplicialComplex& complex, CycleMode mode,
                         std::size_t max_length) {
  CycleReport r;
  r.mode = mode;
  r.max_length = max_length;
  if (complex.size() <= 12) r.strong_neighbor_sequence = is_simplicial_cycle(complex);
  if (r.strong_neighbor_sequence) {
    r.kind = CycleKind::SimplicialCycle;
    r.length = complex.size();
  } else if (line_graph(complex).is_cycle_graph()) {
    r.kind = CycleKind::LinearCycle;
    r.length = complex.size();
  }

  auto shortest = [](const std::vector<HyperCycle>& cycles) -> std::optional<std::size_t> {
    for (const auto& c : cycles) {
      if (c.length() >= 3) return c.length();
    }
    return std::nullopt;
  };
  const auto berge = enumerate_cycles(complex, CycleMode::Berge, max_length);
  const auto special = enumerate_cycles(complex, CycleMode::Special, max_length);
  r.berge_min_length = shortest(berge);
  r.special_min_length = shortest(special);
  r.cycles = mode == CycleMode::Berge ? berge : special;
  return r;
}

}  // namespace montype
