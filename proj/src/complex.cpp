#include "montype/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "montype/error.hpp"

namespace montype {

namespace sets {

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

bool contains(const VertexSet& a, int v) {
  return std::binary_search(a.begin(), a.end(), v);
}

std::string to_string(const VertexSet& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s + "}";
}

}  // namespace sets

SimplicialComplex build_complex(std::vector<VertexSet> facets, int n) {
  if (facets.empty()) throw Error(ErrorCode::EmptyInput, "no facets");
  int max_vertex = 0;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) throw Error(ErrorCode::EmptyInput, "empty facet");
    if (f.front() < 1) {
      throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(f.front()));
    }
    max_vertex = std::max(max_vertex, f.back());
  }
  if (n == 0) n = max_vertex;
  if (max_vertex > n) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(max_vertex) +
                                                " exceeds n = " + std::to_string(n));
  }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && sets::is_subset(facets[i], facets[j])) {
        throw Error(ErrorCode::NotAClutter, sets::to_string(facets[i]) + " is contained in " +
                                                sets::to_string(facets[j]));
      }
    }
  }
  return SimplicialComplex(std::move(facets), n);
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet all;
  for (const auto& f : facets_) all = sets::unite(all, f);
  return all;
}

SimplicialComplex SimplicialComplex::subcomplex(std::span<const std::size_t> positions) const {
  std::vector<VertexSet> fs;
  fs.reserve(positions.size());
  for (std::size_t p : positions) fs.push_back(facets_.at(p));
  return SimplicialComplex(std::move(fs), n_);
}

std::string SimplicialComplex::to_string() const {
  std::string s;
  for (const auto& f : facets_) {
    s += sets::to_string(f);
    s += '\n';
  }
  return s;
}

SimplicialComplex from_ideal(const SquarefreeIdeal& ideal) {
  std::vector<VertexSet> facets;
  facets.reserve(ideal.size());
  for (const auto& g : ideal.generators()) facets.push_back(g.support());
  return build_complex(std::move(facets), ideal.ambient());
}

SquarefreeIdeal facet_ideal(const SimplicialComplex& complex) {
  std::vector<Monomial> gens;
  gens.reserve(complex.size());
  for (const auto& f : complex.facets()) {
    gens.push_back(Monomial::from_support(complex.vertex_count(), f));
  }
  return minimal_generators(gens);
}

bool LineGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto& a = adjacency.at(i);
  return std::find(a.begin(), a.end(), j) != a.end();
}

bool LineGraph::is_connected() const {
  if (vertex_count == 0) return true;
  std::vector<bool> seen(vertex_count, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count;
}

bool LineGraph::is_cycle_graph() const {
  if (vertex_count < 3) return false;
  for (const auto& a : adjacency) {
    if (a.size() != 2) return false;
  }
  return is_connected();
}

namespace {

template <typename Meets>
LineGraph make_graph(std::size_t count, Meets meets) {
  LineGraph g;
  g.vertex_count = count;
  g.adjacency.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (meets(i, j)) {
        g.edges.emplace_back(i, j);
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  return g;
}

}  // namespace

LineGraph line_graph(const SimplicialComplex& complex) {
  return make_graph(complex.size(), [&](std::size_t i, std::size_t j) {
    return !sets::disjoint(complex[i], complex[j]);
  });
}

LineGraph line_graph(const SquarefreeIdeal& ideal) {
  return make_graph(ideal.size(), [&](std::size_t i, std::size_t j) {
    return !gcd(ideal[i], ideal[j]).is_one();
  });
}

std::vector<Component> connected_components(const SimplicialComplex& complex) {
  const LineGraph g = line_graph(complex);
  std::vector<int> label(complex.size(), -1);
  std::vector<Component> out;
  for (std::size_t start = 0; start < complex.size(); ++start) {
    if (label[start] >= 0) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{start};
    label[start] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t w : g.adjacency[v]) {
        if (label[w] < 0) {
          label[w] = label[start];
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back({complex.subcomplex(members), members});
  }
  return out;
}

LeafStatus leaf_status_within(const SimplicialComplex& complex, std::size_t facet,
                              std::span<const std::size_t> members) {
  if (facet >= complex.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "facet " + std::to_string(facet + 1));
  }
  const VertexSet& f = complex[facet];
  std::vector<std::pair<std::size_t, VertexSet>> meets;
  for (std::size_t h : members) {
    if (h != facet) meets.emplace_back(h, sets::intersect(complex[h], f));
  }
  if (meets.empty()) return {LeafKind::GoodLeaf, std::nullopt};

  LeafStatus status;
  for (const auto& [g, g_meet] : meets) {
    const bool dominates = std::all_of(meets.begin(), meets.end(), [&](const auto& hm) {
      return sets::is_subset(hm.second, g_meet);
    });
    if (dominates) {
      status.kind = LeafKind::Leaf;
      status.witness = g;
      break;
    }
  }
  if (status.kind == LeafKind::NotLeaf) return status;

  // Good leaf iff the intersections form a chain under inclusion.
  std::vector<const VertexSet*> chain;
  for (const auto& hm : meets) chain.push_back(&hm.second);
  std::sort(chain.begin(), chain.end(),
            [](const VertexSet* a, const VertexSet* b) { return a->size() < b->size(); });
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (!sets::is_subset(*chain[k - 1], *chain[k])) return status;
  }
  status.kind = LeafKind::GoodLeaf;
  return status;
}

LeafStatus leaf_status(const SimplicialComplex& complex, std::size_t facet) {
  std::vector<std::size_t> all(complex.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return leaf_status_within(complex, facet, all);
}

std::optional<std::vector<std::size_t>> good_leaf_order(const SimplicialComplex& complex) {
  std::vector<std::size_t> members(complex.size());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
  std::vector<std::size_t> removed;
  while (!members.empty()) {
    auto it = std::find_if(members.begin(), members.end(), [&](std::size_t f) {
      return leaf_status_within(complex, f, members).kind == LeafKind::GoodLeaf;
    });
    if (it == members.end()) return std::nullopt;
    removed.push_back(*it);
    members.erase(it);
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

std::optional<std::vector<std::size_t>> leaf_order(const SimplicialComplex& complex) {
  const std::size_t s = complex.size();
  if (s > 62) throw Error(ErrorCode::SizeLimit, "leaf_order supports at most 62 facets");
  std::unordered_set<std::uint64_t> dead;
  std::vector<std::size_t> removed;

  auto members_of = [s](std::uint64_t mask) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask >> i & 1U) m.push_back(i);
    }
    return m;
  };

  auto search = [&](auto&& self, std::uint64_t mask) -> bool {
    if (std::popcount(mask) <= 1) {
      if (mask) removed.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
      return true;
    }
    if (dead.contains(mask)) return false;
    const auto members = members_of(mask);
    for (std::size_t f : members) {
      if (leaf_status_within(complex, f, members).kind == LeafKind::NotLeaf) continue;
      removed.push_back(f);
      if (self(self, mask & ~(std::uint64_t{1} << f))) return true;
      removed.pop_back();
    }
    dead.insert(mask);
    return false;
  };

  const std::uint64_t full = s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
  if (!search(search, full)) return std::nullopt;
  std::reverse(removed.begin(), removed.end());
  return removed;
}

bool strong_neighbors(const SimplicialComplex& complex, std::size_t i, std::size_t j) {
  if (i >= complex.size() || j >= complex.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "facet index");
  }
  if (i == j) throw Error(ErrorCode::PreconditionViolated, "a facet is not its own neighbor");
  const VertexSet meet = sets::intersect(complex[i], complex[j]);
  for (std::size_t h = 0; h < complex.size(); ++h) {
    if (h != i && h != j && sets::is_subset(meet, complex[h])) return false;
  }
  return true;
}

ConePeel peel_cone(const SimplicialComplex& complex) {
  VertexSet apex = complex[0];
  for (const auto& f : complex.facets()) apex = sets::intersect(apex, f);
  if (apex.empty()) return {apex, complex};
  std::vector<VertexSet> core;
  for (const auto& f : complex.facets()) {
    VertexSet rest = sets::minus(f, apex);
    if (rest.empty()) {
      throw Error(ErrorCode::DegenerateCore, "facet " + sets::to_string(f) + " is the apex");
    }
    core.push_back(std::move(rest));
  }
  return {apex, build_complex(std::move(core), complex.vertex_count())};
}

}  // namespace montype
