#ifndef WHITEHEAD_REPORT_HPP_
#define WHITEHEAD_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "whitehead/algorithm.hpp"

namespace whitehead {

/// Factorization report. Field names are part of the CLI contract:
/// factors[].block / generators[].name / generators[].over_original,
/// allotment[].relator / block / rewritten, rank_one_leftovers, trace.
/// Factors sort by block id, allotment by relator index.
nlohmann::json factorization_json(const RunResult& run, const Strategy& strategy,
                                  bool include_trace);
std::string factorization_text(const RunResult& run);

nlohmann::json minimize_json(const MinimizeResult& result);
std::string minimize_text(const MinimizeResult& result);

nlohmann::json subbasis_json(const SubbasisResult& result);
std::string subbasis_text(const SubbasisResult& result);

/// One entry per finest-partition block that carries relators: vertices,
/// edges and cutvertices of its Whitehead graph.
nlohmann::json graph_json(const BasisState& x, const std::vector<Relator>& rs);

/// The same blocks as DOT, one undirected graph per block; vertices are
/// labelled 1, a, A, ... and the graph name carries the relator list.
std::string graph_dot(const BasisState& x, const std::vector<Relator>& rs);

}  // namespace whitehead

#endif  // WHITEHEAD_REPORT_HPP_
