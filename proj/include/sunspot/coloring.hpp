#pragma once

#include <array>
#include <optional>
#include <utility>

#include "sunspot/graph.hpp"

namespace sunspot {

/// Proper coloring with palette {1..k}. color[v] == 0 never appears in a
/// returned coloring (every vertex is colored).
struct Coloring {
  std::vector<int> color;
  int k = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

// Exact: a proper k-coloring if one exists. Branch and bound over a DSATUR
// order, palette symmetry broken by only allowing one fresh color per step,
// greedy clique as the infeasibility bound. Result is re-checked proper
// before returning.
std::optional<Coloring> k_colorable(const Graph& g, int k);

// Least k admitting a proper coloring, with a witness. chi(empty graph) = 0,
// chi(edgeless nonempty) = 1.
std::pair<int, Coloring> chromatic_number(const Graph& g);
int chi(const Graph& g);
int chi_in(const Graph& g, const VertexSet& s);

int clique_number(const Graph& g);
std::optional<std::array<int, 3>> find_triangle(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Vertex-minimal induced subgraph keeping chi above `threshold`:
/// chi(G[members]) == threshold+1 and every single-vertex deletion drops
/// chi to <= threshold.
struct CriticalCertificate {
  VertexSet members;
  int threshold = 0;
};

// Deletes vertices in ascending label order, restarting after every
// successful deletion. Requires chi(g) > threshold. The certificate's
// chromatic number, non-degeneracy and liberality are re-verified before
// returning (a failure would be a TheoremViolation).
CriticalCertificate extract_critical(const Graph& g, int threshold);

// Non-degenerate: min degree >= chi - 1. Returns a deficient vertex if any.
std::optional<int> degree_deficient_vertex(const Graph& g);
bool is_non_degenerate(const Graph& g);

// Liberal: every distinct non-adjacent pair x,y has N(x)\N(y) and N(y)\N(x)
// both nonempty. Returns a violating pair (x dominated-or-dominating y).
std::optional<std::pair<int, int>> domination_violation(const Graph& g);
bool is_liberal(const Graph& g);

} // namespace sunspot
