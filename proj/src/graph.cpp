#include "sunspot/graph.hpp"

#include <deque>
#include <string>

#include "sunspot/errors.hpp"

namespace sunspot {

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw PreconditionError("vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(n_) + ")");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside [0," + std::to_string(n) + ")");
    if (u == v)
      throw PreconditionError("self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }
  for (int v = 0; v < n; ++v) m_ += adj_[v].count();
  m_ /= 2;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::neighbors_in(int x, const VertexSet& Y) const {
  check_vertex(x);
  return adj_[x] & Y;
}

VertexSet Graph::second_neighborhood(int v) const {
  check_vertex(v);
  VertexSet reach(n_);
  adj_[v].for_each([&](int u) { reach |= adj_[u]; });
  reach -= adj_[v];
  if (reach.test(v)) reach.reset(v);
  return reach;
}

bool Graph::anticomplete(const VertexSet& X, const VertexSet& Y) const {
  if (X.intersects(Y)) return false;
  for (int x = X.first(); x >= 0; x = X.next(x))
    if (adj_[x].intersects(Y)) return false;
  return true;
}

std::pair<Graph, std::vector<int>> Graph::induced(const VertexSet& S) const {
  std::vector<int> label = S.to_vector();
  std::vector<int> back(n_, -1);
  for (std::size_t i = 0; i < label.size(); ++i) back[label[i]] = int(i);
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const VertexSet nb = adj_[label[i]] & S;
    for (int v = nb.next(label[i]); v >= 0; v = nb.next(v)) es.emplace_back(int(i), back[v]);
  }
  return {Graph(int(label.size()), es), std::move(label)};
}

std::vector<int> Graph::bfs_distances(int root) const {
  return bfs_distances(root, vertices());
}

std::vector<int> Graph::bfs_distances(int root, const VertexSet& within) const {
  check_vertex(root);
  std::vector<int> dist(n_, kUnreachable);
  dist[root] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    const VertexSet nb = adj_[u] & within;
    for (int v = nb.first(); v >= 0; v = nb.next(v)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet seen(n_);
  for (int v = 0; v < n_; ++v) {
    if (seen.test(v)) continue;
    std::vector<int> dist = bfs_distances(v);
    VertexSet comp(n_);
    for (int u = 0; u < n_; ++u)
      if (dist[u] != kUnreachable) comp.set(u);
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

Graph Graph::disjoint_union(const Graph& other) const {
  std::vector<std::pair<int, int>> es = edges();
  for (auto [u, v] : other.edges()) es.emplace_back(u + n_, v + n_);
  return Graph(n_ + other.n_, es);
}

} // namespace sunspot
