#include "polyspec/obstruction.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace polyspec {

SmallCaseReport no_cayley_small() {
  const Alternating5 a5 = alternating5();
  const FiniteGroup g = direct_product(a5.group.group, cyclic_group(2)).tabulated();
  const ProductIndex idx{2};
  SmallCaseReport out;
  out.group_order = g.order();

  const auto s30 = subgroups_of_order(g, 30, 2);
  out.order30_subgroups = static_cast<int>(s30.subgroups.size());
  out.tuples_processed = s30.tuples_processed;

  const auto s60 = subgroups_of_order(g, 60, 2);
  out.order60_subgroups = static_cast<int>(s60.subgroups.size());
  std::vector<int> a5_copy;
  for (int x = 0; x < a5.group.order(); ++x) a5_copy.push_back(idx(x, 0));
  std::sort(a5_copy.begin(), a5_copy.end());
  out.a5_among_order60 = std::find(s60.subgroups.begin(), s60.subgroups.end(), a5_copy) != s60.subgroups.end();

  out.whole_group_two_generated = !subgroups_of_order(g, g.order(), 2).subgroups.empty();
  out.no_cayley = s30.subgroups.empty();
  return out;
}

SylowReport sylow5_structure(const LabeledGroup<QuaternionQ5>& q120) {
  const FiniteGroup& q = q120.group;
  SylowReport out;
  for (int x = 0; x < q.order() && out.q < 0; ++x) {
    if (q.element_order(x) == 5) out.q = x;
  }
  if (out.q < 0) throw ConstructionError("sylow5_structure: no element of order 5");

  const FiniteGroup p = direct_product(q, q);
  const ProductIndex idx{q.order()};
  const int one = q.identity();
  out.five_part = 1;
  for (int n = p.order(); n % 5 == 0; n /= 5) out.five_part *= 5;

  const std::vector<int> gens{idx(out.q, one), idx(one, out.q)};
  const auto h = subgroup_closure(p, gens);
  out.subgroup_order = static_cast<int>(h.size());
  out.exponent = 1;
  out.abelian = true;
  for (int x : h) {
    out.exponent = std::lcm(out.exponent, p.element_order(x));
    for (int y : h) out.abelian = out.abelian && p.mul(x, y) == p.mul(y, x);
  }
  out.is_sylow = out.subgroup_order == out.five_part;

  std::set<std::vector<int>> conjugates;
  for (int c = 0; c < p.order(); ++c) {
    std::vector<int> image;
    image.reserve(h.size());
    for (int x : h) image.push_back(p.mul(p.mul(p.inv(c), x), c));
    std::sort(image.begin(), image.end());
    conjugates.insert(std::move(image));
  }
  out.conjugate_count = static_cast<int>(conjugates.size());
  out.conjugates_product_form = true;
  for (const auto& s : conjugates) {
    std::set<int> left, right;
    for (int x : s) {
      auto [l, r] = idx.split(x);
      left.insert(l);
      right.insert(r);
    }
    out.conjugates_product_form = out.conjugates_product_form && left.size() == 5 && right.size() == 5 && s.size() == 25;
  }
  out.diagonal_fixes_one = q.mul(q.mul(out.q, one), q.inv(out.q)) == one;
  return out;
}

std::vector<int> g7200_generators(const IcosianPairGroup& g7200, const LabeledGroup<QuaternionQ5>& q120) {
  const int one = q120.group.identity();
  std::vector<int> out;
  for (const auto& key : icosian_generators()) {
    const int x = q120.at(key);
    out.push_back(*g7200.find(x, one));
    out.push_back(*g7200.find(one, x));
  }
  return out;
}

namespace {

struct ElementFixedSet {
  int fixed_vertices = 0;
  int setwise = 0;
  int pointwise = 0;
  std::vector<int> first_profile;
  bool sizes_ok = true;
  bool two_fixed_neighbors = true;
  bool incident_fixed_edge = true;

  auto counts() const { return std::tuple(fixed_vertices, setwise, pointwise, first_profile); }
};

ElementFixedSet analyze(const std::vector<int>& perm, const Graph& cell, int order) {
  ElementFixedSet out;
  for (auto [u, v] : cell.edges()) {
    const int a = perm[u], b = perm[v];
    if (a == u && b == v) ++out.pointwise;
    if ((a == u && b == v) || (a == v && b == u)) ++out.setwise;
  }
  for (int v = 0; v < cell.vertex_count(); ++v) {
    if (perm[v] != v) continue;
    ++out.fixed_vertices;
    std::vector<int> sizes;
    std::set<int> seen;
    int fixed_nb = 0;
    for (int w : cell.neighbors(v)) {
      if (seen.count(w)) continue;
      int size = 0;
      for (int y = w; !seen.count(y); y = perm[y]) {
        seen.insert(y);
        ++size;
      }
      sizes.push_back(size);
      fixed_nb += size == 1;
      out.sizes_ok = out.sizes_ok && order % size == 0 && (size == 1 || size == 5);
    }
    std::sort(sizes.begin(), sizes.end());
    if (out.first_profile.empty()) out.first_profile = sizes;
    if (std::accumulate(sizes.begin(), sizes.end(), 0) != cell.degree(v)) out.sizes_ok = false;
    out.two_fixed_neighbors = out.two_fixed_neighbors && fixed_nb >= 2;
    // A fixed neighbour w of a fixed v gives the fixed edge vw.
    bool edge = false;
    for (int w : cell.neighbors(v)) edge = edge || perm[w] == w;
    out.incident_fixed_edge = out.incident_fixed_edge && edge;
  }
  return out;
}

}  // namespace

Order5Report order5_fixed_edge_report(const LabeledGroup<QuaternionQ5>& q120, const IcosianPairGroup& g7200,
                                      const Graph& cell) {
  const FiniteGroup& g = g7200.group();
  const auto gens = g7200_generators(g7200, q120);
  const auto cd = conjugacy_classes(g, gens);
  Order5Report out;
  out.orbit_sizes_in_1_or_5 = true;
  out.at_least_two_fixed_neighbors = true;
  out.fixed_edge_exists = true;
  out.setwise_equals_pointwise = true;
  out.fixed_iff_diagonal = true;

  auto permutation = [&](int x) {
    std::vector<int> perm(cell.vertex_count());
    for (int v = 0; v < cell.vertex_count(); ++v) perm[v] = g7200.act(x, v);
    return perm;
  };

  for (int c = 0; c < cd.count(); ++c) {
    if (cd.rep_order[c] != 5) continue;
    FixedSetReport rep;
    rep.class_index = c;
    rep.representative = cd.representative[c];
    auto [l, r] = g7200.components(rep.representative);
    rep.left_order = g7200.q120.element_order(l);
    rep.right_order = g7200.q120.element_order(r);
    rep.order = 5;
    rep.class_size = cd.size(c);
    const auto first = analyze(permutation(rep.representative), cell, 5);
    rep.fixed_vertices = first.fixed_vertices;
    rep.fixed_edges_setwise = first.setwise;
    rep.fixed_edges_pointwise = first.pointwise;
    rep.orbit_profile = first.first_profile;
    rep.uniform_over_class = true;
    rep.local_claims_hold = true;
    for (int x : cd.classes[c]) {
      auto [xl, xr] = g7200.components(x);
      rep.contains_diagonal = rep.contains_diagonal || xl == xr;
      const auto e = analyze(permutation(x), cell, 5);
      ++out.elements_checked;
      rep.uniform_over_class = rep.uniform_over_class && e.fixed_vertices == first.fixed_vertices &&
                               e.setwise == first.setwise && e.pointwise == first.pointwise;
      if (e.fixed_vertices > 0) {
        rep.local_claims_hold = rep.local_claims_hold && e.sizes_ok && e.two_fixed_neighbors && e.incident_fixed_edge;
        out.orbit_sizes_in_1_or_5 = out.orbit_sizes_in_1_or_5 && e.sizes_ok;
        out.at_least_two_fixed_neighbors = out.at_least_two_fixed_neighbors && e.two_fixed_neighbors;
        out.fixed_edge_exists = out.fixed_edge_exists && e.incident_fixed_edge && e.setwise > 0;
      }
      out.setwise_equals_pointwise = out.setwise_equals_pointwise && e.setwise == e.pointwise;
    }
    out.fixed_iff_diagonal = out.fixed_iff_diagonal && (rep.fixed_vertices > 0) == rep.contains_diagonal;
    out.classes.push_back(std::move(rep));
  }
  return out;
}

PermutationGroupReport permutation_group_orders(const LabeledGroup<QuaternionQ5>& q120, const IcosianPairGroup& g7200,
                                                const Graph& cell) {
  using Perm = std::vector<std::uint8_t>;
  const FiniteGroup& q = q120.group;
  const int n = q.order();
  if (n > 256) throw PreconditionError("permutation_group_orders: too many points");
  auto to_perm = [](const std::vector<int>& p) { return Perm(p.begin(), p.end()); };
  auto compose = [n](const Perm& a, const Perm& b) {
    Perm out(n);
    for (int x = 0; x < n; ++x) out[x] = b[a[x]];
    return out;
  };

  std::vector<Perm> gens;
  for (const auto& key : icosian_generators()) {
    const int x = q120.at(key);
    gens.push_back(to_perm(isometry_permutation(q, x, q.identity())));
    gens.push_back(to_perm(isometry_permutation(q, q.identity(), x)));
  }
  PermutationGroupReport out;
  out.preserves_cell = true;
  auto preserves = [&](const Perm& p) { return is_automorphism(cell, std::vector<int>(p.begin(), p.end())); };
  for (const auto& p : gens) out.preserves_cell = out.preserves_cell && preserves(p);
  const auto rotations = enumerate_closure<Perm>(gens, compose, 100000);
  out.rotation_order = static_cast<int>(rotations.size());

  gens.push_back(to_perm(reflection_permutation(q)));
  out.preserves_cell = out.preserves_cell && preserves(gens.back());
  out.full_order = static_cast<int>(enumerate_closure<Perm>(gens, compose, 100000).size());

  std::set<Perm> images;
  for (int x = 0; x < g7200.order(); ++x) {
    Perm p(n);
    for (int v = 0; v < n; ++v) p[v] = static_cast<std::uint8_t>(g7200.act(x, v));
    images.insert(std::move(p));
  }
  out.faithful = static_cast<int>(images.size()) == g7200.order() &&
                 std::equal(images.begin(), images.end(), rotations.begin(), rotations.end());
  return out;
}

}  // namespace polyspec
