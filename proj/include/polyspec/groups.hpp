#pragma once

// Explicit finite groups on element indices 0..n-1.
//
// A FiniteGroup only knows how to multiply and invert indices. Labels (the
// quaternion or permutation an index stands for) live next to it in a
// LabeledGroup. Products and central quotients are composed lazily so that
// Q120 x Q120 never needs a 14400^2 table.

#include "polyspec/errors.hpp"
#include "polyspec/exactnum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polyspec {

namespace detail {
struct GroupImpl;
}

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Row-major Cayley table, table[a * n + b] = a * b. Validates closure,
  /// identity and inverses (associativity is checked separately, it is O(n^3)).
  static FiniteGroup from_table(int order, std::vector<int> table);

  int order() const;
  int identity() const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int power(int g, long long k) const;
  int element_order(int g) const;
  /// lcm of all element orders.
  int exponent() const;
  bool has_table() const;
  /// Same group backed by a dense table; cheap repeated multiplication.
  FiniteGroup tabulated() const;

  /// Exhaustive for order <= exhaustive_limit, otherwise checks `samples`
  /// deterministic pseudo-random triples.
  bool check_associativity(int exhaustive_limit = 200, int samples = 20000) const;
  /// mul(id, g) = g and mul(g, inv g) = id for every g.
  bool check_identity_and_inverses() const;

 private:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::GroupImpl> impl_;

  friend FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
  friend struct CentralQuotient central_quotient(const FiniteGroup& g, int z);
};

FiniteGroup cyclic_group(int n);

/// Index of (i, j) in direct_product(G, H) is i * |H| + j.
struct ProductIndex {
  int right_order;
  int operator()(int i, int j) const { return i * right_order + j; }
  std::pair<int, int> split(int idx) const { return {idx / right_order, idx % right_order}; }
};

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// G / {1, z} for a central involution z. Quotient element q stands for the
/// pair {representative[q], z * representative[q]}; the representative is the
/// smaller parent index.
struct CentralQuotient {
  FiniteGroup group;
  std::vector<int> representative;  // quotient index -> parent index
  std::vector<int> project;         // parent index -> quotient index
};

/// Throws PreconditionError unless z is central with z^2 = id, z != id.
CentralQuotient central_quotient(const FiniteGroup& g, int z);

/// A group together with the concrete objects its indices stand for.
/// Keys are sorted ascending, so index order is key order.
template <class Key>
struct LabeledGroup {
  FiniteGroup group;
  std::vector<Key> keys;
  std::map<Key, int> index_of;

  std::optional<int> find(const Key& k) const {
    auto it = index_of.find(k);
    if (it == index_of.end()) return std::nullopt;
    return it->second;
  }
  int at(const Key& k) const {
    auto it = index_of.find(k);
    if (it == index_of.end()) throw PreconditionError("element not in group");
    return it->second;
  }
  int order() const { return group.order(); }
};

/// Multiplicative closure of `gens` under `mul` (breadth-first). Stops with
/// ConstructionError once more than `limit` elements have been found.
template <class Key, class Mul>
std::vector<Key> enumerate_closure(std::span<const Key> gens, Mul mul, std::size_t limit) {
  std::map<Key, bool> seen;
  std::deque<Key> queue;
  for (const auto& g : gens) {
    if (seen.emplace(g, true).second) queue.push_back(g);
  }
  while (!queue.empty()) {
    Key x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Key y = mul(x, g);
      if (seen.emplace(y, true).second) {
        if (seen.size() > limit) throw ConstructionError("closure exceeded its size limit");
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Key> out;
  out.reserve(seen.size());
  for (auto& [k, unused] : seen) out.push_back(k);
  return out;
}

/// Builds the labeled group on a finite set of keys closed under `mul`.
template <class Key, class Mul>
LabeledGroup<Key> labeled_group(std::vector<Key> keys, Mul mul) {
  std::sort(keys.begin(), keys.end());
  LabeledGroup<Key> out;
  const int n = static_cast<int>(keys.size());
  for (int i = 0; i < n; ++i) out.index_of.emplace(keys[i], i);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto it = out.index_of.find(mul(keys[a], keys[b]));
      if (it == out.index_of.end()) throw ConstructionError("key set not closed under multiplication");
      table[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  }
  out.group = FiniteGroup::from_table(n, std::move(table));
  out.keys = std::move(keys);
  return out;
}

// ---------------------------------------------------------------------------
// Quaternion groups and the icosian isometry action.

/// (1+i+j+k)/2 and (tau + i - taubar j)/2.
std::array<QuaternionQ5, 2> icosian_generators();

/// Q120: closure of icosian_generators(); 120 unit icosians.
LabeledGroup<QuaternionQ5> binary_icosahedral();
/// Q24: {+-1, +-i, +-j, +-k, (+-1+-i+-j+-k)/2}.
LabeledGroup<QuaternionQ5> binary_tetrahedral();

/// x -> l x r^-1. Orientation preserving; (q, q) fixes 1.
QuaternionQ5 isometry_action(const QuaternionQ5& l, const QuaternionQ5& r, const QuaternionQ5& x);
/// x -> conj(x), a reflection preserving the icosians.
QuaternionQ5 reflection(const QuaternionQ5& x);

/// Permutation of Q120 indices induced by x -> l x r^-1 (l, r are Q120 indices).
std::vector<int> isometry_permutation(const FiniteGroup& q120, int l, int r);
/// Permutation of Q120 indices induced by conjugation x -> x^-1 = conj(x).
std::vector<int> reflection_permutation(const FiniteGroup& q120);

/// (Q120 x K) / (-1,-1) for a subgroup K of Q120 containing -1. Elements act
/// on the icosians by x -> l x r^-1 and are addressed by Q120 index pairs.
struct IcosianPairGroup {
  CentralQuotient quotient;
  FiniteGroup q120;
  std::vector<int> right_in_q120;  // K index -> Q120 index
  std::vector<int> q120_in_right;  // Q120 index -> K index or -1

  const FiniteGroup& group() const { return quotient.group; }
  int order() const { return quotient.group.order(); }
  /// Q120 indices (l, r) of the canonical representative.
  std::pair<int, int> components(int g) const;
  /// Element containing (l, r), or nullopt when r is not in K.
  std::optional<int> find(int l, int r) const;
  /// Image of vertex x (a Q120 index) under g.
  int act(int g, int x) const;
};

IcosianPairGroup icosian_pair_group(const LabeledGroup<QuaternionQ5>& q120,
                                    const LabeledGroup<QuaternionQ5>& right_factor);

// ---------------------------------------------------------------------------
// A5 on {0..4} (printed 1..5). Product convention (xy)(i) = x(y(i)).

using Perm5 = std::array<std::uint8_t, 5>;

Perm5 compose(const Perm5& x, const Perm5& y);
/// Builds a permutation from 1-based cycles, e.g. {{1,2,3,4,5}}.
Perm5 perm5_from_cycles(const std::vector<std::vector<int>>& cycles);

struct Alternating5 {
  LabeledGroup<Perm5> group;
  int a;  // (12345)
  int b;  // (253)
};

Alternating5 alternating5();

// ---------------------------------------------------------------------------
// Conjugacy classes and class multiplication coefficients.

struct ConjugacyData {
  /// classes[0] is {identity}; the rest ordered by (element order, size, rep).
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<int> representative;  // smallest index in the class
  std::vector<int> rep_order;
  std::vector<int> inverse_class;
  /// a(i,j,k) = #{(x,y) in C_i x C_j : xy = z_k} for the representative z_k.
  std::vector<int> cmc;

  int count() const { return static_cast<int>(classes.size()); }
  int size(int i) const { return static_cast<int>(classes[i].size()); }
  int coefficient(int i, int j, int k) const {
    const auto r = static_cast<std::size_t>(count());
    return cmc[(i * r + j) * r + k];
  }
};

/// Conjugation orbits. With `generators` non-empty, orbits are closed under
/// conjugation by those elements only (they must generate G); otherwise by all
/// of G. Class multiplication coefficients are computed by exact counting.
ConjugacyData conjugacy_classes(const FiniteGroup& g, std::span<const int> generators = {});

// ---------------------------------------------------------------------------
// Character tables (Burnside-Dixon).

struct CharacterTable {
  int group_order = 0;
  std::vector<int> class_sizes;
  std::vector<int> class_rep_orders;
  std::vector<int> degrees;
  /// values(chi, class).
  Eigen::MatrixXcd values;
  /// conjugate_row[chi] is the row of the complex-conjugate character.
  std::vector<int> conjugate_row;
  /// The prime used for the modular eigenspace splitting.
  long long prime = 0;

  int rows() const { return static_cast<int>(degrees.size()); }
  /// max |(1/|G|) sum_g chi(g) conj(psi(g)) - delta|.
  double row_orthogonality_residual() const;
  /// max |sum_chi chi(g_i) conj(chi(g_j)) - delta_ij |G|/|C_i||.
  double column_orthogonality_residual() const;
  double max_imaginary_part() const;
};

/// Dixon's method: common eigenvectors of the class matrices over F_p,
/// p = 1 mod exp(G), p > 2 sqrt|G|, lifted to complex values by counting
/// root-of-unity multiplicities. Rows sorted by degree, trivial first.
CharacterTable character_table(const FiniteGroup& g, const ConjugacyData& cd);

// ---------------------------------------------------------------------------
// Subgroups.

/// Sorted element set of <gens>.
std::vector<int> subgroup_closure(const FiniteGroup& g, std::span<const int> gens);

struct SubgroupSearch {
  /// Distinct subgroups of the requested order, as sorted element sets.
  std::vector<std::vector<int>> subgroups;
  /// Ordered generator tuples visited (pruned tuples included).
  long long tuples_processed = 0;
};

/// Every subgroup of order n generated by at most max_gens elements.
/// Sweeps all ordered tuples; a prefix whose closure order does not divide n
/// cannot lie in a subgroup of order n and is pruned (Lagrange).
/// Every group of order 30 is metacyclic, hence 2-generated, so max_gens = 2
/// makes the order-30 search complete.
SubgroupSearch subgroups_of_order(const FiniteGroup& g, int n, int max_gens);

}  // namespace polyspec
