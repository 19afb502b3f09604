#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "montype/ideal.hpp"

namespace montype {

/// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<int>;

namespace sets {
VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet unite(const VertexSet& a, const VertexSet& b);
VertexSet minus(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& a, int v);
std::string to_string(const VertexSet& a);  // "{1,2,3}"
}  // namespace sets

/// A simplicial complex given by its facets, i.e. a clutter on vertices
/// 1..n. Facet order is significant: facet i corresponds to generator i of
/// the facet ideal.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  std::size_t size() const noexcept { return facets_.size(); }
  int vertex_count() const noexcept { return n_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  const VertexSet& operator[](std::size_t i) const { return facets_.at(i); }

  /// Union of all facets.
  VertexSet vertices() const;
  /// Facets at the given positions, in that order.
  SimplicialComplex subcomplex(std::span<const std::size_t> positions) const;

  std::string to_string() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
  friend SimplicialComplex build_complex(std::vector<VertexSet> facets, int n);

 private:
  SimplicialComplex(std::vector<VertexSet> facets, int n)
      : facets_(std::move(facets)), n_(n) {}

  std::vector<VertexSet> facets_;
  int n_ = 0;
};

/// Validates and builds a complex. Facets are sorted internally; n = 0
/// means "largest vertex used". Throws EmptyInput or NotAClutter.
SimplicialComplex build_complex(std::vector<VertexSet> facets, int n = 0);
SimplicialComplex from_ideal(const SquarefreeIdeal& ideal);
SquarefreeIdeal facet_ideal(const SimplicialComplex& complex);

/// Generator graph: vertex i is facet/generator i, edge iff they meet.
struct LineGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  std::vector<std::vector<std::size_t>> adjacency;

  bool adjacent(std::size_t i, std::size_t j) const;
  std::size_t degree(std::size_t i) const { return adjacency.at(i).size(); }
  bool is_connected() const;
  /// Connected, at least 3 vertices, every vertex of degree 2.
  bool is_cycle_graph() const;

  friend bool operator==(const LineGraph& a, const LineGraph& b) {
    return a.vertex_count == b.vertex_count && a.edges == b.edges;
  }
};

LineGraph line_graph(const SimplicialComplex& complex);
/// Same graph computed through monomial gcds.
LineGraph line_graph(const SquarefreeIdeal& ideal);

struct Component {
  SimplicialComplex complex;
  std::vector<std::size_t> facet_indices;  // positions in the parent
};

/// Components of the line graph, ordered by smallest facet index.
std::vector<Component> connected_components(const SimplicialComplex& complex);

enum class LeafKind { NotLeaf, Leaf, GoodLeaf };

struct LeafStatus {
  LeafKind kind = LeafKind::NotLeaf;
  /// Smallest-index facet G with H∩F ⊆ G∩F for every H ≠ F; empty for a
  /// lone facet or when F is not a leaf.
  std::optional<std::size_t> witness;
};

LeafStatus leaf_status(const SimplicialComplex& complex, std::size_t facet);

/// Same question inside the subcomplex spanned by `members` (which must
/// contain `facet`). Used by the peeling algorithms.
LeafStatus leaf_status_within(const SimplicialComplex& complex, std::size_t facet,
                              std::span<const std::size_t> members);

/// An order F1..Fs with Fi a good leaf of <F1..Fi>, or nullopt if the
/// complex is not a simplicial forest. Greedy peeling, lowest index first.
std::optional<std::vector<std::size_t>> good_leaf_order(const SimplicialComplex& complex);

/// An order with Fi a (not necessarily good) leaf of <F1..Fi>; exhaustive
/// search with memoization on remaining-facet sets. At most 62 facets.
std::optional<std::vector<std::size_t>> leaf_order(const SimplicialComplex& complex);

bool strong_neighbors(const SimplicialComplex& complex, std::size_t i, std::size_t j);

struct ConePeel {
  VertexSet apex;
  SimplicialComplex core;
};

/// Splits off the common intersection of all facets. Throws DegenerateCore
/// when a facet equals the apex.
ConePeel peel_cone(const SimplicialComplex& complex);

}  // namespace montype
