#pragma once

// JSON, CSV and edge-list exports. Objects have sorted keys and reals are
// rounded to 12 significant digits, so equal inputs give identical bytes.

#include "polyspec/groups.hpp"
#include "polyspec/obstruction.hpp"
#include "polyspec/polytopes.hpp"
#include "polyspec/spectra.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace polyspec {

using Json = nlohmann::json;

/// x rounded to 12 significant digits, with -0 mapped to 0.
double round12(double x);

/// Indented JSON text with a trailing newline.
std::string dump_json(const Json& j);

/// "# vertices=N" then one "u v" line per edge, ascending.
std::string edge_list_text(const Graph& g);
/// Inverse of edge_list_text; throws PreconditionError on malformed input.
Graph parse_edge_list(const std::string& text);

/// Counts, degree sequence, connectivity and adjacency lists.
Json graph_json(const Graph& g, const std::string& name);

Json character_table_json(const CharacterTable& t);

Json spectrum_entries_json(const SpectrumMultiset& s);
Json block_report_json(const BlockSpectrum& b);

/// {graph, method, eigenvalues, per_irrep}; per_irrep is empty without blocks.
Json spectrum_json(const std::string& graph, const std::string& method, const SpectrumMultiset& s,
                   const BlockSpectrum* blocks = nullptr);

/// "value,multiplicity" rows after a header line.
std::string spectrum_csv(const SpectrumMultiset& s);

Json small_case_json(const SmallCaseReport& r);
Json sylow_json(const SylowReport& r);
Json order5_json(const Order5Report& r);
Json permutation_group_json(const PermutationGroupReport& r);

}  // namespace polyspec
