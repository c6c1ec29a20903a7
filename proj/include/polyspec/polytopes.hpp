#pragma once

// Graphs of the 600-cell, its rectification, the dart polytope, and the
// dodecahedron family, plus the checks relating them to Cayley graphs.

#include "polyspec/groups.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polyspec {

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v) with
/// u < v in ascending order; edge i of the graph is edges()[i].
class Graph {
 public:
  Graph() = default;
  /// Throws PreconditionError on self-loops, duplicate edges or bad endpoints.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(int u, int v) const;
  /// Index into edges() of {u, v}; throws PreconditionError if absent.
  int edge_index(int u, int v) const;
  /// Common degree, or nullopt when the graph is not regular.
  std::optional<int> regular_degree() const;
  bool connected() const;
  /// Length of a shortest cycle; 0 for a forest.
  int girth() const;

  /// Offset of v's first dart; darts of v are numbered in neighbor order.
  int dart_offset(int v) const { return offsets_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> offsets_{0};
  std::vector<int> adjacency_;
};

/// Ordered adjacent pair (source, target): the point of edge {source, target}
/// near source.
struct Dart {
  int source;
  int target;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// All 2|E| darts, ordered by (source, target).
std::vector<Dart> darts(const Graph& g);
/// Position of (s, t) in darts(g); throws PreconditionError if not an edge.
int dart_index(const Graph& g, int source, int target);

enum class RectifyMode {
  /// Edges at a common vertex are adjacent only when they span a triangle.
  triangle_restricted,
  /// Any two edges at a common vertex are adjacent (medial graph).
  all_at_vertex,
};

/// 600-cell on the Q120 indices: x ~ y iff x . y = tau/2 exactly.
Graph cell600(const LabeledGroup<QuaternionQ5>& q120);

/// Vertex i of the result is edge i of g.
Graph rectified(const Graph& g, RectifyMode mode);

/// Vertex i of the result is darts(g)[i]. Special edges join (v,w) to (w,v);
/// other edges join (v,w) to (v,u), u != w, where u ~ w in triangle mode.
Graph dart_graph(const Graph& g, RectifyMode mode);

/// True when darts i and j of g are reverses of each other.
bool is_special_pair(const Graph& g, int dart_i, int dart_j);

/// The dart graph with each special pair collapsed to its underlying edge.
/// Isomorphic (identically, with edge indices) to rectified(g, mode).
Graph special_quotient(const Graph& g, const Graph& dart_graph);

struct CayleyStructure {
  FiniteGroup group;
  std::vector<int> connection_set;
  Graph graph;
};

/// Edges {g, gh}, h in H. Throws PreconditionError unless H = H^-1 and id not in H.
CayleyStructure cayley_graph(const FiniteGroup& g, std::span<const int> connection_set);

/// The b-triangles {g, gb, gb^2} of the A5 Cayley graph on {b, b^-1, ab}
/// contracted to vertices; edges come from the ab-edges.
struct CosetContraction {
  Graph graph;
  std::vector<int> vertex_of;           // group element -> coset vertex
  std::vector<std::vector<int>> cosets;  // vertex -> sorted coset g<b>
};

CosetContraction dodecahedron_from_a5(const Alternating5& a5);

/// The connection set {g0, .., g4, gs} of the dart polytope as elements of
/// (Q120 x Q24)/(-1,-1).
struct DartGenerators {
  std::array<int, 5> nonspecial;
  int special;
  std::vector<int> all() const {
    return {nonspecial[0], nonspecial[1], nonspecial[2], nonspecial[3], nonspecial[4], special};
  }
};

/// Throws ConstructionError if any listed quaternion is not in its factor.
DartGenerators g1440_generators(const IcosianPairGroup& g1440, const LabeledGroup<QuaternionQ5>& q120);

/// The six quaternion pairs defining the generators, in order g0..g4, gs.
std::vector<std::pair<QuaternionQ5, QuaternionQ5>> g1440_generator_quaternions();

/// (tau + i - taubar j)/2, the far end of the base dart from 1.
QuaternionQ5 base_dart_target();

struct IsomorphismCheck {
  bool ok = false;
  std::vector<int> map;  // group element -> vertex of the dart graph
  std::optional<std::pair<int, int>> bad_edge;
  std::string failure;
};

/// g -> act(g, base) must be a bijection and carry Cayley edges onto edges of
/// `target` (with equal edge counts).
IsomorphismCheck cayley_dart_isomorphism(const CayleyStructure& cs, const Graph& target, int base,
                                         const std::function<int(int, int)>& act);

struct ActionReport {
  bool transitive = false;
  bool free = false;
  bool simply_transitive = false;
  int orbit_size = 0;
  std::vector<int> stabilizer;  // of point 0, as a subset of `elements`
};

/// `elements` (indices of some group containing the identity) acting on
/// points 0..point_count-1 through action(g, p).
ActionReport simply_transitive_check(std::span<const int> elements, int point_count,
                                     const std::function<int(int, int)>& action);

/// Exact nearest-neighbour graph of a point set in R^4 (squared distances in Q(sqrt 5)).
Graph nearest_neighbor_graph(std::span<const QuaternionQ5> points);

/// Edge midpoints (x + y)/2 of the 600-cell, in edge order.
std::vector<QuaternionQ5> edge_midpoints(const Graph& cell, const LabeledGroup<QuaternionQ5>& q120);

Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
/// C5 x K2.
Graph pentagonal_prism();
/// Backtracking isomorphism test, meant for graphs of a dozen vertices.
bool isomorphic(const Graph& a, const Graph& b);

/// True when perm is a bijection mapping edges onto edges.
bool is_automorphism(const Graph& g, std::span<const int> perm);

}  // namespace polyspec
