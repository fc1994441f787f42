#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sunspot/coloring.hpp"
#include "sunspot/graph.hpp"
#include "sunspot/structures.hpp"
#include "sunspot/verdict.hpp"

namespace sunspot {

/// Levels L0..Lr: pairwise disjoint and nonempty; every vertex of Li (i>=1)
/// has a neighbor in L(i-1); an edge between distinct levels forces
/// consecutive indices. Edges inside a single level are unrestricted.
struct Leveling {
  std::vector<VertexSet> levels;
  int depth() const { return int(levels.size()) - 1; }
  VertexSet union_all() const;
};

enum class LevelingAxiom { DisjointNonempty, BackNeighbor, NoLevelSkipping };

struct LevelingCheck {
  bool valid = true;
  std::optional<LevelingAxiom> violated;
  std::string detail;
};

LevelingCheck validate_leveling(const Graph& g, const Leveling& lv);

// BFS levels from root, restricted to root's component: L0 = {root},
// Li = vertices at distance i. Always a valid leveling.
Leveling bfs_leveling(const Graph& g, int root);
// The prefix L0..Lk of a leveling (a leveling in its own right).
Leveling truncate(const Leveling& lv, int k);

struct DeepLeveling {
  Leveling leveling;
  CriticalCertificate top;
};

// Builds a leveling of depth >= 3 whose top level induces a subgraph with
// chromatic number exactly c+1 that is non-degenerate and liberal. Requires
// a triangle-free graph with chi > 2c+1. All tie-breaks are by least label:
// the max-chi component, the start vertex, the eligible second vertex, and
// the first level whose chromatic number exceeds c.
DeepLeveling build_deep_leveling(const Graph& g, int c);

struct FlaplessSubgraphResult {
  VertexSet subgraph;
  Leveling leveling;
  // A 4-sunspot in g, when one exists. Its presence voids the flaplessness
  // guarantee but not the construction; see flapless_chromatic_subgraph.
  std::optional<SunspotWitness> sunspot;
};

// Produces an induced subgraph L with chi(L) == c+1 that is non-degenerate,
// liberal and flapless. Hard preconditions: triangle-free and chi > 2c+1.
// The 4-sunspot detector runs first and its witness is carried in the
// result; flaplessness of L is then verified exhaustively. A verification
// failure raises PreconditionError naming the sunspot when one was found
// (violated hypothesis), and TheoremViolation with a diagnostic bundle
// (graph6 of g, the hole, the flap) when the graph was 4-sunspot-free.
FlaplessSubgraphResult flapless_chromatic_subgraph(const Graph& g, int c);

// Short-sector checks for a hole H in the top level of a leveling. The
// applicable hypothesis depends on where x lives: the level below the top
// (depth >= 2 suffices), or the top level off the hole (depth >= 3 and a
// liberal top level). Verdict: no x-sector of length <= 2 exists.
CheckResult check_sector_lemmas(const Graph& g, const Leveling& lv, const Hole& h, int x);

// Flap-endpoint check: for an H-flap x1-h1-h2-x2 with both off-hole
// vertices inside L(r-1) u Lr (depth >= 3, liberal top), the verdict holds
// iff x1 and x2 both lie in Lr \ H.
CheckResult check_flap_endpoint_lemma(const Graph& g, const Leveling& lv, const Hole& h,
                                      const FlapWitness& flap);

} // namespace sunspot
