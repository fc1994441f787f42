#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "sunspot/graph.hpp"
#include "sunspot/structures.hpp"
#include "sunspot/verdict.hpp"

namespace sunspot {

/// Partial assignment of at most one outside neighbor to each hole vertex;
/// assign[i] pairs with hole.cyc[i]. order = number of assigned vertices,
/// full = all assigned.
struct Flare {
  Hole hole;
  std::vector<std::optional<int>> assign;

  int order() const;
  bool full() const;
  nlohmann::json to_json() const;
};

bool validate_flare(const Graph& g, const Flare& f);

// Distance between positions i and j along the hole (shorter way around).
int hole_distance(const Hole& h, int i, int j);

struct SafetyViolation {
  int h = -1, h_other = -1; // hole vertices (labels, not positions)
  int a = -1, b = -1;       // offending pair: a in Phi(h), b in Phi[h_other]
};

// d-safe: for every ordered pair of DISTINCT hole vertices at hole-distance
// at most d, the assigned vertex of the first is anticomplete to the second
// vertex together with its assigned vertex. The h == h' pair is excluded:
// an assigned vertex always meets its own closed set.
std::optional<SafetyViolation> d_safety_violation(const Graph& g, const Flare& f, int d);
bool is_d_safe(const Graph& g, const Flare& f, int d);

// Common-neighbor bounds for assigned-or-hole vertices against the other
// hole vertices: across a hole edge no common outside neighbor at all,
// across a non-edge at most one. Hypotheses: triangle-free, 4-sunspot-free,
// liberal, flapless, hole length >= 6, valid flare.
CheckResult check_common_neighbor_bounds(const Graph& g, const Hole& h, const Flare& f);
// Same conclusion check with the graph-level hypotheses already established
// by the caller (used by corpus sweeps to avoid recomputation).
CheckResult common_neighbor_bounds_conclusion(const Graph& g, const Hole& h, const Flare& f);

struct FlareResult {
  std::optional<Flare> flare;
  // On failure: the hole vertex that could not be assigned and the blocking
  // set U (closed assigned sets of all hole vertices within distance d).
  int blocked_vertex = -1;
  VertexSet blocked_set;
  nlohmann::json detail;
};

// Greedy full d-safe flare: hole vertices processed in cycle order, each
// assigned its least eligible outside neighbor (anticomplete to the closed
// sets within distance d). Success re-verifies validity, fullness and
// d-safety. Hole must be valid of length >= 6; the greedy is attempted
// regardless of the other hypotheses and reports failure when blocked.
FlareResult construct_full_flare(const Graph& g, const Hole& h, int d);

} // namespace sunspot
