#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sunspot/graph.hpp"
#include "sunspot/leveling.hpp"
#include "sunspot/structures.hpp"

namespace sunspot {

/// Chromatic thresholds for the sun-extraction guarantee at exclusion
/// length ell: tau is the long-hole threshold, c = 2*max(tau, 4*ell-1)+1.
/// For ell == 6 the known values are tau = 20 and c = 47.
struct Constants {
  int ell = 0;
  int tau = 0;
  int c = 0;
};

// ell >= 6; tau defaults to 20 for ell == 6 and must be supplied otherwise.
Constants constants_for(int ell, std::optional<int> tau = std::nullopt);

Graph make_cycle(int n);
Graph make_sun(int t);     // cycle 0..t-1, pendant of i at t+i
Graph make_sunspot(int t); // sun minus the last pendant
Graph make_net();
Graph make_bull();
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_petersen();
Graph make_groetzsch();
Graph mycielskian(const Graph& g); // base 0..n-1, shadows n..2n-1, apex 2n
// Vertices are the pairs (i,j), 1 <= i < j <= n, in lexicographic order;
// (i,j) is adjacent to (j,k). Triangle-free with chromatic number
// ceil(log2 n).
Graph make_shift_graph(int n);

/// End-to-end witness extraction: either an induced t-sun with t >= ell, a
/// 4-sunspot, or a structured failure naming the stage that came up empty.
/// Stages: (1) flapless chromatic subgraph L at threshold max(tau, 4*ell-1);
/// (2) shortest hole of length >= ell in L; (3) full ell-safe flare on it;
/// (4) pendant anticompleteness check; (5) sun assembly. The trace records
/// every intermediate object with graph6 snapshots.
struct ExtractionResult {
  enum class Kind { Sun, Sunspot, Failure };
  Kind kind = Kind::Failure;
  std::optional<SunWitness> sun;
  std::optional<SunspotWitness> sunspot;
  int failed_stage = 0;
  std::string reason;
  nlohmann::json trace;
  nlohmann::json to_json() const;
};

// Requires a triangle-free graph; any 4-sunspot short-circuits into the
// Sunspot branch. Below the guarantee threshold the failure branch is a
// legitimate outcome.
ExtractionResult extract_witness(const Graph& g, int ell,
                                 std::optional<int> tau = std::nullopt);

// Stages 2..5 on a prescribed induced subgraph (original labels preserved).
ExtractionResult extract_sun_from(const Graph& g, const VertexSet& subgraph, int ell);

} // namespace sunspot
