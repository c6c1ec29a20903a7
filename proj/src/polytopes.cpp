#include "polyspec/polytopes.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace polyspec {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 0) throw PreconditionError("Graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw PreconditionError("Graph: edge endpoint out of range");
    }
    if (u == v) throw PreconditionError("Graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw PreconditionError("Graph: duplicate edge");
  }
  edges_ = std::move(edges);
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  offsets_.assign(1, 0);
  adjacency_.clear();
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    adjacency_.insert(adjacency_.end(), a.begin(), a.end());
    offsets_.push_back(static_cast<int>(adjacency_.size()));
  }
}

bool Graph::adjacent(int u, int v) const {
  auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v));
  if (it == edges_.end() || *it != std::pair(u, v)) throw PreconditionError("edge_index: not an edge");
  return static_cast<int>(it - edges_.begin());
}

std::optional<int> Graph::regular_degree() const {
  if (vertex_count() == 0) return std::nullopt;
  const int d = degree(0);
  for (int v = 1; v < vertex_count(); ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

bool Graph::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertex_count();
}

int Graph::girth() const {
  int best = std::numeric_limits<int>::max();
  const int n = vertex_count();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

std::vector<Dart> darts(const Graph& g) {
  std::vector<Dart> out;
  out.reserve(2 * static_cast<std::size_t>(g.edge_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w : g.neighbors(v)) out.push_back({v, w});
  }
  return out;
}

int dart_index(const Graph& g, int source, int target) {
  if (source < 0 || source >= g.vertex_count()) throw PreconditionError("dart_index: bad source");
  auto n = g.neighbors(source);
  auto it = std::lower_bound(n.begin(), n.end(), target);
  if (it == n.end() || *it != target) throw PreconditionError("dart_index: not an edge");
  return g.dart_offset(source) + static_cast<int>(it - n.begin());
}

Graph cell600(const LabeledGroup<QuaternionQ5>& q120) {
  const QRoot5 half_tau = QRoot5(Rational(1, 2)) * tau();
  std::vector<std::pair<int, int>> edges;
  const int n = q120.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (qdot(q120.keys[x], q120.keys[y]) == half_tau) edges.emplace_back(x, y);
    }
  }
  Graph g(n, std::move(edges));
  if (g.regular_degree() != 12) throw ConstructionError("cell600: graph is not 12-regular");
  return g;
}

Graph rectified(const Graph& g, RectifyMode mode) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < g.vertex_count(); ++a) {
    auto nb = g.neighbors(a);
    for (std::size_t s = 0; s < nb.size(); ++s) {
      for (std::size_t t = s + 1; t < nb.size(); ++t) {
        if (mode == RectifyMode::triangle_restricted && !g.adjacent(nb[s], nb[t])) continue;
        edges.emplace_back(g.edge_index(a, nb[s]), g.edge_index(a, nb[t]));
      }
    }
  }
  return Graph(g.edge_count(), std::move(edges));
}

Graph dart_graph(const Graph& g, RectifyMode mode) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t s = 0; s < nb.size(); ++s) {
      const int d = g.dart_offset(v) + static_cast<int>(s);
      if (v < nb[s]) edges.emplace_back(d, dart_index(g, nb[s], v));
      for (std::size_t t = s + 1; t < nb.size(); ++t) {
        if (mode == RectifyMode::triangle_restricted && !g.adjacent(nb[s], nb[t])) continue;
        edges.emplace_back(d, g.dart_offset(v) + static_cast<int>(t));
      }
    }
  }
  return Graph(2 * g.edge_count(), std::move(edges));
}

bool is_special_pair(const Graph& g, int dart_i, int dart_j) {
  const auto all = darts(g);
  return all[dart_i].source == all[dart_j].target && all[dart_i].target == all[dart_j].source;
}

Graph special_quotient(const Graph& g, const Graph& dg) {
  const auto all = darts(g);
  if (static_cast<int>(all.size()) != dg.vertex_count()) throw PreconditionError("special_quotient: size mismatch");
  std::vector<int> edge_of(all.size());
  for (std::size_t d = 0; d < all.size(); ++d) edge_of[d] = g.edge_index(all[d].source, all[d].target);
  std::set<std::pair<int, int>> edges;
  for (auto [a, b] : dg.edges()) {
    int ea = edge_of[a], eb = edge_of[b];
    if (ea == eb) continue;
    edges.emplace(std::min(ea, eb), std::max(ea, eb));
  }
  return Graph(g.edge_count(), {edges.begin(), edges.end()});
}

CayleyStructure cayley_graph(const FiniteGroup& g, std::span<const int> connection_set) {
  std::set<int> h(connection_set.begin(), connection_set.end());
  if (h.size() != connection_set.size()) throw PreconditionError("cayley_graph: repeated connection element");
  if (h.count(g.identity())) throw PreconditionError("cayley_graph: identity in connection set");
  for (int x : h) {
    if (!h.count(g.inv(x))) throw PreconditionError("cayley_graph: connection set not closed under inverse");
  }
  std::set<std::pair<int, int>> edges;
  for (int x = 0; x < g.order(); ++x) {
    for (int s : connection_set) {
      const int y = g.mul(x, s);
      edges.emplace(std::min(x, y), std::max(x, y));
    }
  }
  return {g, {connection_set.begin(), connection_set.end()}, Graph(g.order(), {edges.begin(), edges.end()})};
}

CosetContraction dodecahedron_from_a5(const Alternating5& a5) {
  const FiniteGroup& g = a5.group.group;
  const int ab = g.mul(a5.a, a5.b);
  CosetContraction out;
  out.vertex_of.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (out.vertex_of[x] >= 0) continue;
    std::vector<int> coset{x, g.mul(x, a5.b), g.mul(g.mul(x, a5.b), a5.b)};
    std::sort(coset.begin(), coset.end());
    for (int y : coset) out.vertex_of[y] = static_cast<int>(out.cosets.size());
    out.cosets.push_back(std::move(coset));
  }
  std::set<std::pair<int, int>> edges;
  std::size_t ab_edges = 0;
  for (int x = 0; x < g.order(); ++x) {
    const int y = g.mul(x, ab);
    if (x > y) continue;
    ++ab_edges;
    const int u = out.vertex_of[x], v = out.vertex_of[y];
    if (u == v) throw ConstructionError("dodecahedron_from_a5: contraction produced a loop");
    edges.emplace(std::min(u, v), std::max(u, v));
  }
  if (edges.size() != ab_edges) throw ConstructionError("dodecahedron_from_a5: contraction produced a multi-edge");
  out.graph = Graph(static_cast<int>(out.cosets.size()), {edges.begin(), edges.end()});
  return out;
}

std::vector<std::pair<QuaternionQ5, QuaternionQ5>> g1440_generator_quaternions() {
  const QRoot5 half(Rational(1, 2));
  auto h = [&](int w, int x, int y, int z) { return half * QuaternionQ5{w, x, y, z}; };
  const auto i = QuaternionQ5::i();
  const QuaternionQ5 s_left = half * QuaternionQ5{0, -taubar(), -1, tau()};
  return {{i, i},
          {h(1, 1, 1, 1), h(1, 1, 1, 1)},
          {h(1, 1, 1, -1), h(1, 1, 1, -1)},
          {h(1, -1, -1, 1), h(1, -1, -1, 1)},
          {h(1, -1, -1, -1), h(1, -1, -1, -1)},
          {s_left, QuaternionQ5::k()}};
}

QuaternionQ5 base_dart_target() { return QRoot5(Rational(1, 2)) * QuaternionQ5{tau(), 1, -taubar(), 0}; }

DartGenerators g1440_generators(const IcosianPairGroup& g1440, const LabeledGroup<QuaternionQ5>& q120) {
  const auto pairs = g1440_generator_quaternions();
  std::vector<int> found;
  for (const auto& [l, r] : pairs) {
    const auto li = q120.find(l);
    const auto ri = q120.find(r);
    if (!li || !ri) throw ConstructionError("g1440_generators: component is not an icosian");
    const auto g = g1440.find(*li, *ri);
    if (!g) throw ConstructionError("g1440_generators: right component not in Q24");
    found.push_back(*g);
  }
  return {{found[0], found[1], found[2], found[3], found[4]}, found[5]};
}

IsomorphismCheck cayley_dart_isomorphism(const CayleyStructure& cs, const Graph& target, int base,
                                         const std::function<int(int, int)>& act) {
  IsomorphismCheck out;
  const int n = cs.group.order();
  if (target.vertex_count() != n) {
    out.failure = "vertex counts differ";
    return out;
  }
  out.map.resize(n);
  std::vector<char> hit(n, 0);
  for (int g = 0; g < n; ++g) {
    const int image = act(g, base);
    if (image < 0 || image >= n || hit[image]) {
      out.failure = "orbit map is not a bijection";
      return out;
    }
    hit[image] = 1;
    out.map[g] = image;
  }
  if (out.map[cs.group.identity()] != base) {
    out.failure = "identity does not map to the base point";
    return out;
  }
  for (auto [u, v] : cs.graph.edges()) {
    if (!target.adjacent(out.map[u], out.map[v])) {
      out.bad_edge = std::pair(u, v);
      out.failure = "edge not preserved";
      return out;
    }
  }
  if (cs.graph.edge_count() != target.edge_count()) {
    out.failure = "edge counts differ";
    return out;
  }
  out.ok = true;
  return out;
}

ActionReport simply_transitive_check(std::span<const int> elements, int point_count,
                                     const std::function<int(int, int)>& action) {
  ActionReport out;
  std::vector<char> seen(point_count, 0);
  for (int g : elements) {
    const int p = action(g, 0);
    if (!seen[p]) {
      seen[p] = 1;
      ++out.orbit_size;
    }
    if (p == 0) out.stabilizer.push_back(g);
  }
  out.transitive = out.orbit_size == point_count;
  // Free: every point has exactly one element of `elements` fixing it.
  std::vector<int> fixers(point_count, 0);
  for (int g : elements) {
    for (int p = 0; p < point_count; ++p) fixers[p] += action(g, p) == p;
  }
  out.free = std::all_of(fixers.begin(), fixers.end(), [](int c) { return c == 1; });
  out.simply_transitive = out.transitive && out.free && static_cast<int>(elements.size()) == point_count;
  return out;
}

Graph nearest_neighbor_graph(std::span<const QuaternionQ5> points) {
  const int n = static_cast<int>(points.size());
  std::vector<QRoot5> dist(static_cast<std::size_t>(n) * n);
  std::optional<QRoot5> best;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const QuaternionQ5 d = points[a] - points[b];
      QRoot5 s = qnorm(d);
      if (s.is_zero()) throw PreconditionError("nearest_neighbor_graph: repeated point");
      if (!best || s < *best) best = s;
      dist[static_cast<std::size_t>(a) * n + b] = std::move(s);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (dist[static_cast<std::size_t>(a) * n + b] == *best) edges.emplace_back(a, b);
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<QuaternionQ5> edge_midpoints(const Graph& cell, const LabeledGroup<QuaternionQ5>& q120) {
  std::vector<QuaternionQ5> out;
  const QRoot5 half(Rational(1, 2));
  for (auto [u, v] : cell.edges()) out.push_back(half * (q120.keys[u] + q120.keys[v]));
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g.adjacent(vertices[a], vertices[b])) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph pentagonal_prism() {
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < 5; ++t) {
    edges.emplace_back(t, (t + 1) % 5);
    edges.emplace_back(5 + t, 5 + (t + 1) % 5);
    edges.emplace_back(t, 5 + t);
  }
  return Graph(10, std::move(edges));
}

namespace {

bool extend(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<char>& used, int v) {
  const int n = a.vertex_count();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], w);
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (extend(a, b, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.vertex_count(), -1);
  std::vector<char> used(a.vertex_count(), 0);
  return extend(a, b, map, used, 0);
}

bool is_automorphism(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) return false;
  std::vector<char> hit(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.vertex_count() || hit[p]) return false;
    hit[p] = 1;
  }
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(perm[u], perm[v])) return false;
  }
  return true;
}

}  // namespace polyspec
