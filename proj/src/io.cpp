#include "polyspec/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

namespace polyspec {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << "# vertices=" << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || header.rfind("# vertices=", 0) != 0) {
    throw PreconditionError("edge list: missing '# vertices=N' header");
  }
  int n = 0;
  try {
    n = std::stoi(header.substr(11));
  } catch (const std::exception&) {
    throw PreconditionError("edge list: bad vertex count");
  }
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int u, v;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest)) throw PreconditionError("edge list: bad line '" + line + "'");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Json graph_json(const Graph& g, const std::string& name) {
  std::map<int, int> degree_counts;
  Json adjacency = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    ++degree_counts[g.degree(v)];
    const auto nb = g.neighbors(v);
    adjacency.push_back(std::vector<int>(nb.begin(), nb.end()));
  }
  Json degrees = Json::array();
  for (auto [d, c] : degree_counts) degrees.push_back({{"degree", d}, {"count", c}});
  Json j;
  j["name"] = name;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["degree_sequence"] = degrees;
  const auto reg = g.regular_degree();
  j["regular_degree"] = reg ? Json(*reg) : Json(nullptr);
  j["connected"] = g.connected();
  j["adjacency"] = adjacency;
  return j;
}

Json character_table_json(const CharacterTable& t) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < t.class_sizes.size(); ++c) {
    classes.push_back({{"size", t.class_sizes[c]}, {"representative_order", t.class_rep_orders[c]}});
  }
  Json rows = Json::array();
  for (int r = 0; r < t.rows(); ++r) {
    Json values = Json::array();
    for (Eigen::Index c = 0; c < t.values.cols(); ++c) {
      values.push_back({round12(t.values(r, c).real()), round12(t.values(r, c).imag())});
    }
    rows.push_back({{"degree", t.degrees[r]}, {"values", values}});
  }
  return {{"group_order", t.group_order}, {"prime", t.prime}, {"classes", classes}, {"characters", rows}};
}

Json spectrum_entries_json(const SpectrumMultiset& s) {
  Json out = Json::array();
  for (const auto& e : s.entries()) out.push_back({{"value", round12(e.value)}, {"multiplicity", e.multiplicity}});
  return out;
}

Json block_report_json(const BlockSpectrum& b) {
  Json out = Json::array();
  for (const auto& blk : b.blocks) {
    const auto s = SpectrumMultiset::from_values(blk.eigenvalues, b.spectrum.coalesce_tolerance());
    out.push_back({{"degree", blk.degree},
                   {"class_count_index", blk.character},
                   {"dimension", blk.dimension},
                   {"eigenvalues", spectrum_entries_json(s)}});
  }
  return out;
}

Json spectrum_json(const std::string& graph, const std::string& method, const SpectrumMultiset& s,
                   const BlockSpectrum* blocks) {
  return {{"graph", graph},
          {"method", method},
          {"eigenvalues", spectrum_entries_json(s)},
          {"per_irrep", blocks ? block_report_json(*blocks) : Json::array()}};
}

std::string spectrum_csv(const SpectrumMultiset& s) {
  std::ostringstream out;
  out << "value,multiplicity\n";
  for (const auto& e : s.entries()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", round12(e.value));
    out << buf << "," << e.multiplicity << "\n";
  }
  return out.str();
}

Json small_case_json(const SmallCaseReport& r) {
  return {{"group_order", r.group_order},
          {"order30_subgroups", r.order30_subgroups},
          {"tuples_processed", r.tuples_processed},
          {"order60_subgroups", r.order60_subgroups},
          {"a5_among_order60", r.a5_among_order60},
          {"whole_group_two_generated", r.whole_group_two_generated},
          {"no_cayley", r.no_cayley}};
}

Json sylow_json(const SylowReport& r) {
  return {{"q", r.q},
          {"five_part", r.five_part},
          {"subgroup_order", r.subgroup_order},
          {"exponent", r.exponent},
          {"abelian", r.abelian},
          {"is_sylow", r.is_sylow},
          {"conjugate_count", r.conjugate_count},
          {"conjugates_product_form", r.conjugates_product_form},
          {"diagonal_fixes_one", r.diagonal_fixes_one}};
}

Json order5_json(const Order5Report& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"class_index", c.class_index},
                       {"representative", c.representative},
                       {"left_order", c.left_order},
                       {"right_order", c.right_order},
                       {"order", c.order},
                       {"class_size", c.class_size},
                       {"contains_diagonal", c.contains_diagonal},
                       {"fixed_vertices", c.fixed_vertices},
                       {"fixed_edges_setwise", c.fixed_edges_setwise},
                       {"fixed_edges_pointwise", c.fixed_edges_pointwise},
                       {"orbit_profile", c.orbit_profile},
                       {"uniform_over_class", c.uniform_over_class},
                       {"local_claims_hold", c.local_claims_hold}});
  }
  return {{"classes", classes},
          {"elements_checked", r.elements_checked},
          {"orbit_sizes_in_1_or_5", r.orbit_sizes_in_1_or_5},
          {"at_least_two_fixed_neighbors", r.at_least_two_fixed_neighbors},
          {"fixed_edge_exists", r.fixed_edge_exists},
          {"setwise_equals_pointwise", r.setwise_equals_pointwise},
          {"fixed_iff_diagonal", r.fixed_iff_diagonal}};
}

Json permutation_group_json(const PermutationGroupReport& r) {
  return {{"rotation_order", r.rotation_order},
          {"full_order", r.full_order},
          {"faithful", r.faithful},
          {"preserves_cell", r.preserves_cell}};
}

}  // namespace polyspec
