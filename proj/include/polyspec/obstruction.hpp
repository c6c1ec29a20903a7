#pragma once

// Evidence that the rectified 600-cell carries no Cayley structure: the small
// analogue by exhaustive subgroup search, and the checkable ingredients of the
// 5-Sylow argument for the large case.

#include "polyspec/groups.hpp"
#include "polyspec/polytopes.hpp"

#include <vector>

namespace polyspec {

struct SmallCaseReport {
  int group_order = 0;  // |A5 x Z2|
  int order30_subgroups = 0;
  long long tuples_processed = 0;
  int order60_subgroups = 0;
  bool a5_among_order60 = false;
  /// Whether A5 x Z2 is itself generated by two elements.
  bool whole_group_two_generated = false;
  bool no_cayley = false;
};

/// Exhaustive 2-generator sweep of A5 x Z2 for subgroups of order 30.
SmallCaseReport no_cayley_small();

struct SylowReport {
  int q = -1;  // Q120 index of the chosen order-5 element
  int five_part = 0;  // of |Q120 x Q120|
  int subgroup_order = 0;
  int exponent = 0;
  bool abelian = false;
  bool is_sylow = false;
  /// Distinct conjugates of <q> x <q> in Q120 x Q120.
  int conjugate_count = 0;
  /// Every conjugate is A x B with |A| = |B| = 5.
  bool conjugates_product_form = false;
  /// (q, q) fixes the vertex 1 under x -> l x r^-1.
  bool diagonal_fixes_one = false;
};

SylowReport sylow5_structure(const LabeledGroup<QuaternionQ5>& q120);

struct FixedSetReport {
  int class_index = 0;  // in the conjugacy data of G7200
  int representative = 0;
  int left_order = 0;  // orders of the Q120 components of the representative
  int right_order = 0;
  int order = 0;
  int class_size = 0;
  /// Some element of the class has equal components (l, l).
  bool contains_diagonal = false;
  int fixed_vertices = 0;
  int fixed_edges_setwise = 0;
  int fixed_edges_pointwise = 0;
  /// Sorted neighbour-orbit sizes at the first fixed vertex (empty if none).
  std::vector<int> orbit_profile;
  /// Every element of the class has the same fixed counts and every fixed
  /// vertex of every element has orbit sizes in {1,5}, at least two fixed
  /// neighbours and at least one fixed incident edge.
  bool uniform_over_class = false;
  bool local_claims_hold = false;
};

struct Order5Report {
  std::vector<FixedSetReport> classes;
  int elements_checked = 0;
  /// Over every order-5 element with a fixed vertex.
  bool orbit_sizes_in_1_or_5 = false;
  bool at_least_two_fixed_neighbors = false;
  bool fixed_edge_exists = false;
  bool setwise_equals_pointwise = false;
  /// Classes fixing a vertex are exactly the classes meeting the diagonal.
  bool fixed_iff_diagonal = false;
};

/// Every order-5 element of G7200 = (Q120 x Q120)/(-1,-1) acting on the 600-cell.
Order5Report order5_fixed_edge_report(const LabeledGroup<QuaternionQ5>& q120, const IcosianPairGroup& g7200,
                                      const Graph& cell);

struct PermutationGroupReport {
  int rotation_order = 0;    // closure of the (l, r) generator images
  int full_order = 0;        // with the reflection added
  bool faithful = false;     // G7200 -> Sym(120) is injective with the same image
  bool preserves_cell = false;
};

PermutationGroupReport permutation_group_orders(const LabeledGroup<QuaternionQ5>& q120, const IcosianPairGroup& g7200,
                                                const Graph& cell);

/// Generators of G7200: (s,1), (t,1), (1,s), (1,t) for Q120 = <s, t>.
std::vector<int> g7200_generators(const IcosianPairGroup& g7200, const LabeledGroup<QuaternionQ5>& q120);

}  // namespace polyspec
