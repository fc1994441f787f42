#pragma once

#include <utility>
#include <vector>

#include "sunspot/vertex_set.hpp"

namespace sunspot {

/// Immutable simple graph on vertices 0..n-1 with symmetric bit-row
/// adjacency. No loops, no parallel edges; construction symmetrizes the
/// given edge list and collapses duplicates. All operations are pure reads,
/// so a Graph can be shared freely across threads.
class Graph {
public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& row(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  int min_degree() const;

  VertexSet vertices() const { return VertexSet::full(n_); }
  std::vector<std::pair<int, int>> edges() const;

  // N_Y(x): neighbors of x inside Y.
  VertexSet neighbors_in(int x, const VertexSet& Y) const;
  // Vertices at distance exactly 2 from v.
  VertexSet second_neighborhood(int v) const;

  // True iff X and Y are disjoint and no edge joins them.
  bool anticomplete(const VertexSet& X, const VertexSet& Y) const;

  // Subgraph induced by S, relabeled to 0..|S|-1, plus the map from new
  // labels back to the originals.
  std::pair<Graph, std::vector<int>> induced(const VertexSet& S) const;

  static constexpr int kUnreachable = -1;
  // BFS distances from root; kUnreachable marks the other components.
  std::vector<int> bfs_distances(int root) const;
  // Same, but the walk is confined to the induced subgraph on `within`
  // (root itself need not be a member).
  std::vector<int> bfs_distances(int root, const VertexSet& within) const;

  // Maximal connected vertex sets, ordered by least member.
  std::vector<VertexSet> components() const;

  Graph disjoint_union(const Graph& other) const;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

} // namespace sunspot
