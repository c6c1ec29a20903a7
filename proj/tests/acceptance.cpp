// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include "polyspec/fixtures.hpp"
#include "polyspec/obstruction.hpp"
#include "polyspec/spectra.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

using namespace polyspec;

namespace {

constexpr double kSpectrumTol = 1e-8;
constexpr double kOrthogonalityTol = 1e-9;
constexpr double kTraceRelTol = 1e-6;
constexpr double kImagTol = 1e-8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

template <class F>
auto timed(double& secs, F&& f) {
  const auto t = Clock::now();
  auto result = f();
  secs = seconds_since(t);
  return result;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

const IcosianFixture& icosian() {
  static const auto f = icosian_fixture();
  return f;
}

const A5Fixture& a5() {
  static const auto f = a5_fixture();
  return f;
}

struct TraceCheck {
  bool ok;
  std::string text;
};

TraceCheck trace_check(const std::string& name, const SpectrumMultiset& s, const Graph& g) {
  const double expected = 2.0 * g.edge_count();
  const double t1 = s.trace(), t2 = s.trace_of_squares();
  const bool ok = std::abs(t1) <= kTraceRelTol * expected && std::abs(t2 - expected) <= kTraceRelTol * expected;
  std::ostringstream o;
  o << name << ": sum=" << t1 << " sum_sq=" << t2 << "/" << expected << "; ";
  return {ok, o.str()};
}

// Spectra shared between criteria 5-7 and 9.
struct SharedSpectra {
  std::optional<SpectrumMultiset> x3535, p720;
  std::vector<TraceCheck> traces;
  bool line_graph_oracle = false;
  bool c5 = false, c6 = false;
} shared;

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto& q120 = icosian().q120;
  double t = 0;
  const Graph cell = timed(t, [&] { return cell600(q120); });
  o.require(t < 1.0, "cell600 time");
  o.require(cell.vertex_count() == 120 && cell.edge_count() == 720 && cell.regular_degree() == 12, "cell600 counts");
  o.detail << "cell600 120/720/12 in " << t << "s; ";

  const Graph p720 = timed(t, [&] { return rectified(cell, RectifyMode::triangle_restricted); });
  o.require(t < 1.0, "P720 time");
  o.require(p720.vertex_count() == 720 && p720.regular_degree() == 10, "P720 counts");
  o.detail << "P720 720/10 in " << t << "s; ";

  const Graph p1440 = timed(t, [&] { return dart_graph(cell, RectifyMode::triangle_restricted); });
  o.require(t < 1.0, "P1440 time");
  o.require(p1440.vertex_count() == 1440 && p1440.regular_degree() == 6, "P1440 counts");
  o.detail << "P1440 1440/6 in " << t << "s; ";

  const auto& a = a5();
  const auto h = a.instance.connection_set();
  const auto cay = timed(t, [&] { return cayley_graph(a.a5.group.group, h); });
  o.require(t < 1.0, "<3,10,10> time");
  o.require(cay.graph.vertex_count() == 60 && cay.graph.regular_degree() == 3, "<3,10,10> counts");
  o.detail << "<3,10,10> 60/3 in " << t << "s; ";

  const auto dodec = timed(t, [&] { return dodecahedron_from_a5(a.a5); });
  o.require(t < 1.0, "dodecahedron time");
  o.require(dodec.graph.vertex_count() == 20 && dodec.graph.regular_degree() == 3 && dodec.graph.girth() == 5,
            "dodecahedron counts");
  o.detail << "dodecahedron 20/3/girth 5 in " << t << "s; ";

  const Graph medial = timed(t, [&] { return rectified(dodec.graph, RectifyMode::all_at_vertex); });
  o.require(t < 1.0, "<3,5,3,5> time");
  o.require(medial.vertex_count() == 30 && medial.regular_degree() == 4, "<3,5,3,5> counts");
  o.detail << "<3,5,3,5> 30/4 in " << t << "s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = Clock::now();
  const std::pair<const char*, const DartCayleyInstance*> cases[] = {{"A5", &a5().instance},
                                                                     {"G1440", &icosian().instance}};
  for (auto [label, inst] : cases) {
    const std::string p(label);
    o.require(inst->iso.ok, p + " dart bijection");
    const int n = inst->group.order(), e = inst->base.edge_count();
    const ExactOperator a1 = lift_A1(inst->base, inst->iso.map);
    const ExactOperator a2 = average_A2(inst->base, inst->iso.map);
    o.require(!exact_mismatch(ExactOperator(a2 * a1), ExactOperator(2 * identity_operator(e))), p + " A2A1=2I");
    o.require(!exact_mismatch(ExactOperator(a1 * a2),
                              ExactOperator(identity_operator(n) + right_translation(inst->group, inst->special))),
              p + " A1A2=I+R_special");
    o.require(!verify_factorization(adjacency_operator(inst->edge_graph), a2,
                                    sum_right_translations(inst->group, inst->nonspecial), a1),
              p + " X=A2 B A1");
    o.detail << p << ": A2A1=2I, A1A2=I+R_s, X=A2 B A1 exact; ";
  }
  const double t = seconds_since(start);
  o.require(t < 10.0, "time");
  o.detail << "in " << t << "s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto& f = icosian();
  const auto& inst = f.instance;
  std::vector<int> all(inst.group.order());
  std::iota(all.begin(), all.end(), 0);
  const auto rep = simply_transitive_check(all, inst.dart_graph.vertex_count(), inst.act);
  o.require(rep.simply_transitive, "G1440 simply transitive on darts");
  o.require(inst.iso.ok, "Cayley graph isomorphic to P1440");

  const int one = f.q120.at(QuaternionQ5::one());
  std::set<int> stab, diagonal;
  for (int g : all) {
    if (f.g1440.act(g, one) == one) stab.insert(g);
  }
  for (const auto& q : f.q24.keys) diagonal.insert(*f.g1440.find(f.q120.at(q), f.q120.at(q)));
  o.require(stab == diagonal && stab.size() == 12, "stabilizer of 1 = 12 diagonal elements");
  const auto nb = inst.base.neighbors(one);
  const std::vector<int> nbv(nb.begin(), nb.end());
  const std::vector<int> stabv(stab.begin(), stab.end());
  const auto local = simply_transitive_check(stabv, 12, [&](int g, int p) {
    return static_cast<int>(std::find(nbv.begin(), nbv.end(), f.g1440.act(g, nbv[p])) - nbv.begin());
  });
  o.require(local.simply_transitive, "stabilizer simply transitive on 12 neighbours");

  const FiniteGroup& g = inst.group;
  const auto& gen = f.generators.nonspecial;
  const int id = g.identity();
  o.require(g.mul(gen[0], gen[0]) == id && gen[0] != id, "g0 self-inverse");
  o.require(g.mul(f.generators.special, f.generators.special) == id && f.generators.special != id,
            "gs self-inverse");
  o.require(g.inv(gen[1]) == gen[4], "g1^-1 = g4");
  o.require(g.inv(gen[2]) == gen[3], "g2^-1 = g3");
  o.detail << "1440 darts, stabilizer " << stab.size() << " diagonal elements, pairing g0,gs / g1-g4 / g2-g3";
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto check = [&](const char* name, const FiniteGroup& g, int rows, std::multiset<int> degrees) {
    const auto cd = conjugacy_classes(g);
    const auto t = character_table(g, cd);
    int sum = 0;
    for (int d : t.degrees) sum += d * d;
    o.require(t.rows() == rows, std::string(name) + " row count");
    o.require(sum == g.order(), std::string(name) + " sum of squared degrees");
    if (!degrees.empty()) o.require(std::multiset<int>(t.degrees.begin(), t.degrees.end()) == degrees, "A5 degrees");
    o.require(t.row_orthogonality_residual() < kOrthogonalityTol, std::string(name) + " row orthogonality");
    o.require(t.column_orthogonality_residual() < kOrthogonalityTol, std::string(name) + " column orthogonality");
    o.detail << name << ": " << t.rows() << " rows, sum d^2=" << sum << ", residuals "
             << t.row_orthogonality_residual() << "/" << t.column_orthogonality_residual() << "; ";
  };
  check("A5", a5().instance.group, 5, {1, 3, 3, 4, 5});
  check("G1440", icosian().instance.group, 32, {});
  o.detail << "row and column orthogonality tolerance " << kOrthogonalityTol;
  return o;
}

void compare_into(Outcome& o, const std::string& what, const SpectrumMultiset& smaller,
                  const SpectrumMultiset& larger, int padding) {
  const auto cmp = compare_spectra(smaller, larger, padding, kSpectrumTol);
  o.require(cmp.equal, what + ": " + cmp.report);
  o.detail << what << " max dev " << cmp.max_deviation << "; ";
}

Outcome criterion5() {
  Outcome o;
  const auto start = Clock::now();
  const auto& inst = a5().instance;
  const auto x = spectrum_direct(inst.edge_graph);
  shared.x3535 = x;
  const ExactOperator t = surrogate_numerator(inst.group, inst.nonspecial, inst.special);
  const auto w = symmetric_eigen(Eigen::MatrixXd(t.cast<double>()) / 2.0);
  compare_into(o, "spec(W60) vs spec(X3535)+30 zeros", x, w, 30);

  const auto cd = conjugacy_classes(inst.group);
  const auto table = character_table(inst.group, cd);
  const auto blocks = spectrum_via_blocks(inst.group, cd, table, inst.nonspecial, inst.special);
  compare_into(o, "blocks vs direct+30 zeros", x, blocks.spectrum, 30);
  o.require(blocks.total_dimension == 60, "block dimensions sum to 60");

  // Line-graph oracle: spec(L(G)) = {theta + k - 2} + {-2 x (m - n)} for k-regular G.
  const auto dodec = spectrum_direct(inst.base);
  std::vector<double> predicted;
  for (double v : dodec.values()) predicted.push_back(v + 1);
  predicted.insert(predicted.end(), inst.base.edge_count() - inst.base.vertex_count(), -2.0);
  compare_into(o, "line-graph oracle", SpectrumMultiset::from_values(predicted), x, 0);
  shared.line_graph_oracle = o.pass;
  shared.traces.push_back(trace_check("dodecahedron", dodec, inst.base));

  const double secs = seconds_since(start);
  o.require(secs < 30.0, "time");
  o.detail << "in " << secs << "s";
  shared.c5 = o.pass;
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto start = Clock::now();
  const auto& inst = icosian().instance;
  double t = 0;
  const auto x = timed(t, [&] { return spectrum_direct(inst.edge_graph); });
  shared.p720 = x;
  o.detail << "direct P720 " << t << "s; ";

  const ExactOperator tnum = surrogate_numerator(inst.group, inst.nonspecial, inst.special);
  o.require(!exact_mismatch(tnum, ExactOperator(tnum.transpose())), "W symmetric");
  const auto w = timed(t, [&] { return symmetric_eigen(Eigen::MatrixXd(tnum.cast<double>()) / 2.0); });
  o.detail << "direct W1440 " << t << "s; ";
  compare_into(o, "spec(W1440) vs spec(X_P720)+720 zeros", x, w, 720);

  const auto cd = conjugacy_classes(inst.group);
  const auto table = character_table(inst.group, cd);
  const auto blocks = timed(t, [&] {
    return spectrum_via_blocks(inst.group, cd, table, inst.nonspecial, inst.special);
  });
  o.detail << "blocks " << t << "s; ";
  o.require(blocks.blocks.size() == 32, "32 blocks");
  o.require(blocks.total_dimension == 1440, "block dimensions sum to 1440");
  double imag = 0;
  for (const auto& b : blocks.blocks) imag = std::max(imag, b.max_imag);
  o.require(imag < kImagTol, "block eigenvalues real");
  o.require(blocks.blocks[0].degree == 1 && blocks.blocks[0].eigenvalues.size() == 1 &&
                std::abs(blocks.blocks[0].eigenvalues[0] - 10) < kSpectrumTol,
            "trivial block eigenvalue 10");
  compare_into(o, "blocks vs direct+720 zeros", x, blocks.spectrum, 720);
  compare_into(o, "blocks vs W direct", w, blocks.spectrum, 0);
  o.detail << "max imag " << imag << "; zero multiplicity of X_P720 " << x.multiplicity_of(0.0) << "; ";

  const double secs = seconds_since(start);
  o.require(secs < 1800.0, "time");
  o.detail << "in " << secs << "s";
  shared.c6 = o.pass;
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto& traces = shared.traces;
  if (shared.x3535) traces.push_back(trace_check("<3,5,3,5>", *shared.x3535, a5().instance.edge_graph));
  if (shared.p720) traces.push_back(trace_check("P720", *shared.p720, icosian().instance.edge_graph));
  o.require(shared.x3535 && shared.p720, "spectra from criteria 5 and 6 available");
  traces.push_back(trace_check("cell600", spectrum_direct(icosian().instance.base), icosian().instance.base));
  traces.push_back(trace_check("<3,10,10>", spectrum_direct(a5().instance.dart_graph), a5().instance.dart_graph));
  for (const auto& t : traces) {
    o.require(t.ok, t.text);
    o.detail << t.text;
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto small = no_cayley_small();
  o.require(small.no_cayley, "no order-30 subgroup");
  o.require(small.tuples_processed == 120 + 120 * 120, "exhaustive sweep");
  o.detail << "order-30 subgroups " << small.order30_subgroups << " after " << small.tuples_processed << " tuples; ";

  const auto& f = icosian();
  const auto g7200 = icosian_pair_group(f.q120, f.q120);
  const auto perms = permutation_group_orders(f.q120, g7200, f.instance.base);
  o.require(perms.rotation_order == 7200 && perms.faithful, "G7200 faithful of order 7200");
  o.require(perms.full_order == 14400, "with reflection 14400");
  o.detail << "permutation orders " << perms.rotation_order << "/" << perms.full_order << "; ";

  const auto r5 = order5_fixed_edge_report(f.q120, g7200, f.instance.base);
  o.require(r5.orbit_sizes_in_1_or_5, "orbit sizes in {1,5}");
  o.require(r5.at_least_two_fixed_neighbors, ">= 2 fixed neighbours");
  o.require(r5.fixed_edge_exists, ">= 1 fixed edge");
  int fixing = 0;
  for (const auto& c : r5.classes) fixing += c.fixed_vertices > 0;
  o.detail << r5.elements_checked << " order-5 elements in " << r5.classes.size() << " classes, " << fixing
           << " classes with fixed vertices";
  return o;
}

Outcome criterion9() {
  Outcome o;
  o.require(shared.c5 && shared.c6, "dual-method agreement (criteria 5 and 6)");
  o.require(shared.line_graph_oracle, "line-graph oracle for <3,5,3,5>");
  o.detail << "no published eigenvalue table for P720; substituted by criteria 5-6 and the line-graph oracle";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"structural counts", criterion1},       {"exact identities", criterion2},
      {"Cayley structure", criterion3},        {"character tables", criterion4},
      {"A5 spectrum cross-validation", criterion5}, {"G1440 spectrum cross-validation", criterion6},
      {"trace sanity", criterion7},            {"obstruction suite", criterion8},
      {"literature substitution", criterion9}};
  // Build shared fixtures up front so criterion timings measure the criterion.
  icosian();
  a5();
  int failures = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::cout << "criterion " << index << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name << "  ("
              << o.detail.str() << ")" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
