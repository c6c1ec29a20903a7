#pragma once

// The two dart/Cayley instances: A5 over the dodecahedron, and the icosian
// group G1440 over the 600-cell. Each bundles the base graph, its
// rectification, its dart graph, the Cayley graph on the connection set, and
// the verified bijection from group elements to darts.

#include "polyspec/groups.hpp"
#include "polyspec/polytopes.hpp"

#include <functional>
#include <vector>

namespace polyspec {

struct DartCayleyInstance {
  FiniteGroup group;  // tabulated
  std::vector<int> nonspecial;
  int special = -1;
  RectifyMode mode = RectifyMode::all_at_vertex;
  Graph base;
  Graph edge_graph;  // rectified(base, mode)
  Graph dart_graph;  // dart_graph(base, mode)
  CayleyStructure cayley;
  int base_dart = -1;
  /// Group element acting on a dart index of `base`.
  std::function<int(int, int)> act;
  /// map[g] is the dart that g sends base_dart to; ok iff it is a Cayley isomorphism.
  IsomorphismCheck iso;

  std::vector<int> connection_set() const {
    std::vector<int> h = nonspecial;
    h.push_back(special);
    return h;
  }
};

struct A5Fixture {
  Alternating5 a5;
  CosetContraction dodecahedron;
  DartCayleyInstance instance;
};

/// H = {b, b^-1, ab}; special generator ab; action by left multiplication on cosets.
A5Fixture a5_fixture();

struct IcosianFixture {
  LabeledGroup<QuaternionQ5> q120;
  LabeledGroup<QuaternionQ5> q24;
  IcosianPairGroup g1440;
  DartGenerators generators;
  DartCayleyInstance instance;
};

/// H = {g0..g4, gs}; (l, r) acts on both endpoints of a dart by x -> l x r^-1.
IcosianFixture icosian_fixture();

}  // namespace polyspec
