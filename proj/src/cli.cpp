#include "polyspec/cli.hpp"

#include "polyspec/fixtures.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

namespace polyspec {

namespace {

const IcosianFixture& icosian() {
  static const auto f = std::make_unique<IcosianFixture>(icosian_fixture());
  return *f;
}

const A5Fixture& a5() {
  static const auto f = std::make_unique<A5Fixture>(a5_fixture());
  return *f;
}

struct FixtureGraph {
  const Graph* graph;
  /// The dart/Cayley instance whose surrogate W covers this graph's spectrum,
  /// or null when only the direct method applies.
  const DartCayleyInstance* instance;
};

FixtureGraph fixture_graph(const std::string& name) {
  if (name == "cell600") return {&icosian().instance.base, nullptr};
  if (name == "p720") return {&icosian().instance.edge_graph, &icosian().instance};
  if (name == "p1440") return {&icosian().instance.dart_graph, nullptr};
  if (name == "dodecahedron") return {&a5().instance.base, nullptr};
  if (name == "icosidodecahedron") return {&a5().instance.edge_graph, &a5().instance};
  if (name == "truncdodecahedron") return {&a5().instance.dart_graph, nullptr};
  throw PreconditionError("unknown fixture: " + name);
}

// ---------------------------------------------------------------------------
// Verification suites.

class SuiteRunner {
 public:
  void check(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    try {
      auto [ok, detail] = fn();
      r.passed = ok;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  std::vector<CheckResult> results;
};

std::pair<bool, std::string> exact_equal(const ExactOperator& a, const ExactOperator& b) {
  const auto m = exact_mismatch(a, b);
  if (!m) return {true, ""};
  std::ostringstream s;
  s << "entry (" << m->row << "," << m->col << "): " << m->lhs << " vs " << m->rhs;
  return {false, s.str()};
}

void identities_suite(SuiteRunner& run) {
  const std::pair<const char*, const DartCayleyInstance*> cases[] = {{"a5", &a5().instance},
                                                                     {"g1440", &icosian().instance}};
  for (auto [label, inst] : cases) {
    const std::string p = std::string(label) + ".";
    const int n = inst->group.order();
    const int e = inst->base.edge_count();
    const ExactOperator a1 = lift_A1(inst->base, inst->iso.map);
    const ExactOperator a2 = average_A2(inst->base, inst->iso.map);
    run.check(p + "A2A1=2I", [&] { return exact_equal(ExactOperator(a2 * a1), ExactOperator(2 * identity_operator(e))); });
    run.check(p + "A1A2=I+R_special", [&] {
      return exact_equal(ExactOperator(a1 * a2),
                         ExactOperator(identity_operator(n) + right_translation(inst->group, inst->special)));
    });
    run.check(p + "X=A2*B*A1", [&] {
      const auto m = verify_factorization(adjacency_operator(inst->edge_graph), a2,
                                          sum_right_translations(inst->group, inst->nonspecial), a1);
      return std::pair(!m.has_value(), m ? std::string("factorization mismatch") : std::string());
    });
    run.check(p + "W symmetric", [&] {
      const ExactOperator t = surrogate_numerator(inst->group, inst->nonspecial, inst->special);
      return exact_equal(t, ExactOperator(t.transpose()));
    });
  }
}

std::pair<bool, std::string> table_ok(const CharacterTable& t, const ConjugacyData& cd) {
  int sum = 0;
  for (int d : t.degrees) sum += d * d;
  std::ostringstream s;
  s << "rows " << t.rows() << ", classes " << cd.count() << ", sum of squared degrees " << sum << ", residuals "
    << t.row_orthogonality_residual() << " / " << t.column_orthogonality_residual();
  const bool ok = t.rows() == cd.count() && sum == t.group_order && t.row_orthogonality_residual() < 1e-9 &&
                  t.column_orthogonality_residual() < 1e-9;
  return {ok, s.str()};
}

void chartable_suite(SuiteRunner& run) {
  run.check("a5 table", [] {
    const auto& g = a5().instance.group;
    const auto cd = conjugacy_classes(g);
    const auto t = character_table(g, cd);
    auto [ok, detail] = table_ok(t, cd);
    std::multiset<int> deg(t.degrees.begin(), t.degrees.end());
    return std::pair(ok && t.rows() == 5 && deg == std::multiset<int>{1, 3, 3, 4, 5}, detail);
  });
  run.check("g1440 table", [] {
    const auto& g = icosian().instance.group;
    const auto cd = conjugacy_classes(g);
    const auto t = character_table(g, cd);
    auto [ok, detail] = table_ok(t, cd);
    return std::pair(ok && t.rows() == 32, detail);
  });
  run.check("q120 table", [] {
    const auto& g = icosian().q120.group;
    const auto cd = conjugacy_classes(g);
    return table_ok(character_table(g, cd), cd);
  });
  run.check("q24 table", [] {
    const auto& g = icosian().q24.group;
    const auto cd = conjugacy_classes(g);
    return table_ok(character_table(g, cd), cd);
  });
}

void isomorphisms_suite(SuiteRunner& run) {
  run.check("a5 Cayley graph = dart graph", [] { return std::pair(a5().instance.iso.ok, a5().instance.iso.failure); });
  run.check("g1440 Cayley graph = dart graph",
            [] { return std::pair(icosian().instance.iso.ok, icosian().instance.iso.failure); });
  run.check("g1440 simply transitive on darts", [] {
    const auto& inst = icosian().instance;
    std::vector<int> all(inst.group.order());
    std::iota(all.begin(), all.end(), 0);
    const auto r = simply_transitive_check(all, inst.dart_graph.vertex_count(), inst.act);
    return std::pair(r.simply_transitive, std::string());
  });
  run.check("stabilizer of 1 is the diagonal, simply transitive on neighbours", [] {
    const auto& f = icosian();
    const int one = f.q120.at(QuaternionQ5::one());
    std::vector<int> stab;
    for (int g = 0; g < f.g1440.order(); ++g) {
      if (f.g1440.act(g, one) == one) stab.push_back(g);
    }
    std::set<int> diagonal;
    for (const auto& q : f.q24.keys) diagonal.insert(*f.g1440.find(f.q120.at(q), f.q120.at(q)));
    const auto nb = f.instance.base.neighbors(one);
    const std::vector<int> nbv(nb.begin(), nb.end());
    const auto r = simply_transitive_check(stab, static_cast<int>(nbv.size()), [&](int g, int p) {
      return static_cast<int>(std::find(nbv.begin(), nbv.end(), f.g1440.act(g, nbv[p])) - nbv.begin());
    });
    const bool ok = std::set<int>(stab.begin(), stab.end()) == diagonal && stab.size() == 12 && r.simply_transitive;
    return std::pair(ok, "stabilizer size " + std::to_string(stab.size()));
  });
  run.check("P720 = nearest-neighbour graph of edge midpoints", [] {
    const auto& f = icosian();
    return std::pair(nearest_neighbor_graph(edge_midpoints(f.instance.base, f.q120)) == f.instance.edge_graph,
                     std::string());
  });
  run.check("special quotients equal the rectifications", [] {
    const bool ok = special_quotient(a5().instance.base, a5().instance.dart_graph) == a5().instance.edge_graph &&
                    special_quotient(icosian().instance.base, icosian().instance.dart_graph) ==
                        icosian().instance.edge_graph;
    return std::pair(ok, std::string());
  });
  run.check("P720 vertex figures are pentagonal prisms", [] {
    const Graph& g = icosian().instance.edge_graph;
    const Graph prism = pentagonal_prism();
    int bad = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto nb = g.neighbors(v);
      bad += !isomorphic(induced_subgraph(g, {nb.begin(), nb.end()}), prism);
    }
    return std::pair(bad == 0, std::to_string(bad) + " mismatches");
  });
  run.check("dodecahedron contraction", [] {
    const Graph& g = a5().instance.base;
    return std::pair(g.vertex_count() == 20 && g.regular_degree() == 3 && g.girth() == 5, std::string());
  });
}

void obstruction_suite(SuiteRunner& run) {
  run.check("no subgroup of order 30 in A5 x Z2", [] {
    const auto r = no_cayley_small();
    return std::pair(r.no_cayley && r.tuples_processed == 120 + 120 * 120 && r.a5_among_order60,
                     std::to_string(r.tuples_processed) + " tuples");
  });
  run.check("5-Sylow structure", [] {
    const auto r = sylow5_structure(icosian().q120);
    return std::pair(r.is_sylow && r.exponent == 5 && r.abelian && r.conjugates_product_form && r.diagonal_fixes_one,
                     std::to_string(r.conjugate_count) + " conjugates");
  });
  const auto g7200 = std::make_shared<IcosianPairGroup>(icosian_pair_group(icosian().q120, icosian().q120));
  run.check("order-5 fixed vertices and edges", [g7200] {
    const auto r = order5_fixed_edge_report(icosian().q120, *g7200, icosian().instance.base);
    const bool ok = r.orbit_sizes_in_1_or_5 && r.at_least_two_fixed_neighbors && r.fixed_edge_exists &&
                    r.setwise_equals_pointwise;
    return std::pair(ok, std::to_string(r.elements_checked) + " elements in " + std::to_string(r.classes.size()) +
                             " classes");
  });
  run.check("permutation groups of order 7200 and 14400", [g7200] {
    const auto r = permutation_group_orders(icosian().q120, *g7200, icosian().instance.base);
    return std::pair(r.rotation_order == 7200 && r.full_order == 14400 && r.faithful && r.preserves_cell,
                     std::to_string(r.rotation_order) + " / " + std::to_string(r.full_order));
  });
}

Json checks_json(const std::string& suite, const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", round12(r.seconds)}});
  }
  return {{"suite", suite}, {"passed", all}, {"checks", checks}};
}

// ---------------------------------------------------------------------------

struct Emitter {
  std::ostream& out;
  std::ostream& err;
  std::string path;

  bool emit(const std::string& text) {
    if (path.empty()) {
      out << text;
      return true;
    }
    std::ofstream f(path);
    if (!f) {
      err << "cannot write " << path << "\n";
      return false;
    }
    f << text;
    return static_cast<bool>(f);
  }
};

std::string spectrum_text(const SpectrumMultiset& s) {
  std::ostringstream o;
  for (const auto& e : s.entries()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", round12(e.value));
    o << buf << " x" << e.multiplicity << "\n";
  }
  return o.str();
}

Json trace_json(const SpectrumMultiset& s, const Graph& g) {
  const double expected = 2.0 * g.edge_count();
  const bool ok = std::abs(s.trace()) <= 1e-6 * std::max(1.0, expected) &&
                  std::abs(s.trace_of_squares() - expected) <= 1e-6 * expected;
  return {{"trace", round12(s.trace())},
          {"trace_of_squares", round12(s.trace_of_squares())},
          {"expected_trace_of_squares", expected},
          {"passed", ok}};
}

int cmd_graph(const std::string& fixture, const std::string& format, const std::string& edges_path, Emitter& em) {
  const Graph& g = *fixture_graph(fixture).graph;
  if (!edges_path.empty()) {
    Emitter edges{em.out, em.err, edges_path};
    if (!edges.emit(edge_list_text(g))) return kExitUsage;
  }
  const std::string text = format == "text" ? edge_list_text(g) : dump_json(graph_json(g, fixture));
  return em.emit(text) ? kExitOk : kExitUsage;
}

int cmd_spectrum(const std::string& fixture, const std::string& method, double tol, const std::string& format,
                 int jobs, Emitter& em) {
  const auto fg = fixture_graph(fixture);
  if (method != "direct" && !fg.instance) {
    em.err << "method '" << method << "' needs a fixture with a dart Cayley structure (p720, icosidodecahedron)\n";
    return kExitUsage;
  }
  EigenOptions eo;
  eo.coalesce_tol = tol;

  std::optional<SpectrumMultiset> direct;
  std::optional<BlockSpectrum> blocks;
  if (method != "blocks") direct = spectrum_direct(*fg.graph, eo);
  if (method != "direct") {
    const auto& inst = *fg.instance;
    const auto cd = conjugacy_classes(inst.group);
    const auto table = character_table(inst.group, cd);
    BlockOptions bo;
    bo.eigen = eo;
    bo.jobs = jobs;
    blocks = spectrum_via_blocks(inst.group, cd, table, inst.nonspecial, inst.special, bo);
  }

  const SpectrumMultiset& primary = direct ? *direct : blocks->spectrum;
  Json j = spectrum_json(fixture, method, primary, blocks ? &*blocks : nullptr);
  bool ok = true;
  if (direct) {
    j["trace_check"] = trace_json(*direct, *fg.graph);
    ok = ok && j["trace_check"]["passed"].get<bool>();
  }
  if (blocks) {
    const int padding = fg.instance->group.order() - fg.graph->vertex_count();
    j["surrogate_eigenvalues"] = spectrum_entries_json(blocks->spectrum);
    j["block_checks"] = {{"total_dimension", blocks->total_dimension},
                         {"idempotence_residual", round12(blocks->idempotence_residual)},
                         {"completeness_residual", round12(blocks->completeness_residual)},
                         {"zero_padding", padding}};
    if (direct) {
      const auto cmp = compare_spectra(*direct, blocks->spectrum, padding, tol);
      j["comparison"] = {{"equal", cmp.equal},
                         {"max_deviation", round12(cmp.max_deviation)},
                         {"zero_padding", padding},
                         {"tolerance", tol},
                         {"report", cmp.report}};
      ok = ok && cmp.equal;
      if (!cmp.equal) em.err << "spectra differ: " << cmp.report << "\n";
    }
  }

  std::string text;
  if (format == "json") {
    text = dump_json(j);
  } else if (format == "csv") {
    text = spectrum_csv(primary);
  } else {
    std::ostringstream o;
    o << fixture << " (" << method << ")\n" << spectrum_text(primary);
    if (j.contains("comparison")) o << "verdict: " << (ok ? "pass" : "FAIL") << "\n";
    text = o.str();
  }
  if (!em.emit(text)) return kExitUsage;
  return ok ? kExitOk : kExitFailure;
}

int cmd_chartable(const std::string& group, Emitter& em) {
  FiniteGroup g;
  if (group == "a5") g = a5().instance.group;
  if (group == "q120") g = icosian().q120.group;
  if (group == "q24") g = icosian().q24.group;
  if (group == "g1440") g = icosian().instance.group;
  const auto cd = conjugacy_classes(g);
  return em.emit(dump_json(character_table_json(character_table(g, cd)))) ? kExitOk : kExitUsage;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"cell600",      "p720",          "p1440",
                                              "dodecahedron", "icosidodecahedron", "truncdodecahedron"};
  return names;
}

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
  SuiteRunner run;
  const bool all = suite == "all";
  if (!all && suite != "identities" && suite != "chartable" && suite != "obstruction" && suite != "isomorphisms") {
    throw PreconditionError("unknown suite: " + suite);
  }
  if (all || suite == "identities") identities_suite(run);
  if (all || suite == "chartable") chartable_suite(run);
  if (all || suite == "isomorphisms") isomorphisms_suite(run);
  if (all || suite == "obstruction") obstruction_suite(run);
  return run.results;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra and Cayley structures of the rectified 600-cell and its relatives", "polyspec"};
  app.require_subcommand(1);
  // POLYSPEC_SEED is reserved; every default path is deterministic.

  std::string fixture, method = "direct", format = "json", out_path, edges_path, suite = "all", group = "g1440";
  double tol = 1e-8;
  int jobs = 1;

  auto* graph = app.add_subcommand("graph", "Export a fixture graph and its statistics");
  graph->add_option("--fixture", fixture)->required()->check(CLI::IsMember(fixture_names()));
  graph->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  graph->add_option("--out", out_path, "Write the output here instead of stdout");
  graph->add_option("--edges", edges_path, "Also write the edge list here");

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency spectrum of a fixture");
  spectrum->add_option("--fixture", fixture)->required()->check(CLI::IsMember(fixture_names()));
  spectrum->add_option("--method", method)->check(CLI::IsMember({"direct", "blocks", "both"}));
  spectrum->add_option("--tol", tol, "Coalescing and comparison tolerance")->check(CLI::PositiveNumber);
  spectrum->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  spectrum->add_option("--out", out_path);
  spectrum->add_option("--jobs", jobs, "Threads for the irrep blocks")->check(CLI::Range(1, 1024));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"identities", "chartable", "obstruction", "isomorphisms", "all"}));
  verify->add_option("--out", out_path);

  auto* chartable = app.add_subcommand("chartable", "Character table as JSON");
  chartable->add_option("--group", group)->check(CLI::IsMember({"a5", "q120", "q24", "g1440"}));
  chartable->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Emitter em{out, err, out_path};
  try {
    if (*graph) return cmd_graph(fixture, format, edges_path, em);
    if (*spectrum) return cmd_spectrum(fixture, method, tol, format, jobs, em);
    if (*chartable) return cmd_chartable(group, em);
    const auto results = run_verify_suite(suite);
    const Json j = checks_json(suite, results);
    if (!em.emit(dump_json(j))) return kExitUsage;
    return j["passed"].get<bool>() ? kExitOk : kExitFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace polyspec
