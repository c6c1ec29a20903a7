#include "polyspec/fixtures.hpp"

#include <memory>

namespace polyspec {

namespace {

void finish(DartCayleyInstance& inst) {
  inst.edge_graph = rectified(inst.base, inst.mode);
  inst.dart_graph = dart_graph(inst.base, inst.mode);
  const auto h = inst.connection_set();
  inst.cayley = cayley_graph(inst.group, h);
  inst.iso = cayley_dart_isomorphism(inst.cayley, inst.dart_graph, inst.base_dart, inst.act);
}

}  // namespace

A5Fixture a5_fixture() {
  A5Fixture out;
  out.a5 = alternating5();
  out.dodecahedron = dodecahedron_from_a5(out.a5);
  auto& inst = out.instance;
  const FiniteGroup& g = out.a5.group.group;
  const int b = out.a5.b;
  const int ab = g.mul(out.a5.a, b);
  inst.group = g;
  inst.nonspecial = {b, g.inv(b)};
  inst.special = ab;
  inst.mode = RectifyMode::all_at_vertex;
  inst.base = out.dodecahedron.graph;

  const auto vertex_of = out.dodecahedron.vertex_of;
  const auto cosets = out.dodecahedron.cosets;
  const Graph base = inst.base;
  const auto all = std::make_shared<std::vector<Dart>>(darts(base));
  inst.act = [g, vertex_of, cosets, base, all](int x, int dart) {
    const Dart d = (*all)[dart];
    const int s = vertex_of[g.mul(x, cosets[d.source].front())];
    const int t = vertex_of[g.mul(x, cosets[d.target].front())];
    return dart_index(base, s, t);
  };
  inst.base_dart = dart_index(base, vertex_of[g.identity()], vertex_of[ab]);
  finish(inst);
  return out;
}

IcosianFixture icosian_fixture() {
  IcosianFixture out;
  out.q120 = binary_icosahedral();
  out.q24 = binary_tetrahedral();
  out.g1440 = icosian_pair_group(out.q120, out.q24);
  out.generators = g1440_generators(out.g1440, out.q120);
  auto& inst = out.instance;
  inst.group = out.g1440.group().tabulated();
  inst.nonspecial.assign(out.generators.nonspecial.begin(), out.generators.nonspecial.end());
  inst.special = out.generators.special;
  inst.mode = RectifyMode::triangle_restricted;
  inst.base = cell600(out.q120);

  const Graph base = inst.base;
  const auto all = std::make_shared<std::vector<Dart>>(darts(base));
  const IcosianPairGroup pairs = out.g1440;
  inst.act = [pairs, base, all](int x, int dart) {
    const Dart d = (*all)[dart];
    return dart_index(base, pairs.act(x, d.source), pairs.act(x, d.target));
  };
  inst.base_dart = dart_index(base, out.q120.at(QuaternionQ5::one()), out.q120.at(base_dart_target()));
  finish(inst);
  return out;
}

}  // namespace polyspec
