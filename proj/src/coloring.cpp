#include "sunspot/coloring.hpp"

#include <algorithm>
#include <string>

#include "sunspot/errors.hpp"

namespace sunspot {

bool is_proper(const Graph& g, const Coloring& c) {
  if (int(c.color.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (c.color[v] < 1 || c.color[v] > c.k) return false;
  for (auto [u, v] : g.edges())
    if (c.color[u] == c.color[v]) return false;
  return true;
}

namespace {

// Greedy clique: repeatedly take the highest-degree vertex of the running
// common neighborhood. Valid lower bound for chi.
int greedy_clique(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (int start = 0; start < n; ++start) {
    VertexSet cand = g.row(start);
    int size = 1;
    while (true) {
      int pick = -1, pick_deg = -1;
      for (int v = cand.first(); v >= 0; v = cand.next(v)) {
        int d = (g.row(v) & cand).count();
        if (d > pick_deg) {
          pick_deg = d;
          pick = v;
        }
      }
      if (pick < 0) break;
      ++size;
      cand &= g.row(pick);
    }
    best = std::max(best, size);
  }
  return n == 0 ? 0 : best;
}

struct ColorSearch {
  const Graph& g;
  int n;
  int k;
  std::vector<int> color;            // 0 = uncolored
  std::vector<std::vector<int>> hit; // hit[v][c-1]: colored neighbors of v using c
  std::vector<int> sat;              // distinct neighbor colors
  int colored = 0;
  int used_max = 0;

  ColorSearch(const Graph& graph, int palette)
      : g(graph), n(graph.vertex_count()), k(palette), color(n, 0),
        hit(n, std::vector<int>(palette, 0)), sat(n, 0) {}

  void assign(int v, int c) {
    color[v] = c;
    ++colored;
    g.row(v).for_each([&](int u) {
      if (hit[u][c - 1]++ == 0) ++sat[u];
    });
  }
  void unassign(int v) {
    int c = color[v];
    color[v] = 0;
    --colored;
    g.row(v).for_each([&](int u) {
      if (--hit[u][c - 1] == 0) --sat[u];
    });
  }

  // DSATUR choice: max saturation, then max degree, then least label.
  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v]) continue;
      int s = sat[v], d = g.degree(v);
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    return best;
  }

  bool solve() {
    if (colored == n) return true;
    int v = pick();
    if (sat[v] >= k) return false;
    const int cap = std::min(k, used_max + 1);
    for (int c = 1; c <= cap; ++c) {
      if (hit[v][c - 1]) continue;
      int prev_used = used_max;
      used_max = std::max(used_max, c);
      assign(v, c);
      if (solve()) return true;
      unassign(v);
      used_max = prev_used;
    }
    return false;
  }
};

} // namespace

std::optional<Coloring> k_colorable(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("negative palette size");
  const int n = g.vertex_count();
  if (n == 0) return Coloring{{}, k};
  if (k == 0) return std::nullopt;
  if (greedy_clique(g) > k) return std::nullopt;
  ColorSearch search(g, k);
  if (!search.solve()) return std::nullopt;
  Coloring c{std::move(search.color), k};
  if (!is_proper(g, c))
    throw TheoremViolation("search returned an improper coloring", "{}");
  return c;
}

std::pair<int, Coloring> chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {0, Coloring{{}, 0}};
  int lb = std::max(1, greedy_clique(g));
  for (int k = lb;; ++k) {
    if (auto c = k_colorable(g, k)) return {k, std::move(*c)};
  }
}

int chi(const Graph& g) { return chromatic_number(g).first; }

int chi_in(const Graph& g, const VertexSet& s) { return chi(g.induced(s).first); }

namespace {

void max_clique_rec(const Graph& g, VertexSet cand, int size, int& best) {
  if (size + cand.count() <= best) return;
  while (!cand.empty()) {
    if (size + cand.count() <= best) return;
    int v = cand.first();
    cand.reset(v);
    max_clique_rec(g, cand & g.row(v), size + 1, best);
    best = std::max(best, size + 1);
  }
}

} // namespace

int clique_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int best = 1;
  max_clique_rec(g, g.vertices(), 0, best);
  return best;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    VertexSet common = g.row(u) & g.row(v);
    for (int w = common.next(v); w >= 0; w = common.next(w))
      return std::array<int, 3>{u, v, w};
  }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

CriticalCertificate extract_critical(const Graph& g, int threshold) {
  const int full = chi(g);
  if (full <= threshold)
    throw PreconditionError("chromatic number " + std::to_string(full) +
                            " does not exceed threshold " + std::to_string(threshold));
  VertexSet s = g.vertices();
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
      VertexSet t = s;
      t.reset(v);
      if (chi_in(g, t) > threshold) {
        s = t;
        shrunk = true;
        break;
      }
    }
  }
  auto [sub, label] = g.induced(s);
  (void)label;
  if (chi(sub) != threshold + 1 || !is_non_degenerate(sub) || !is_liberal(sub))
    throw TheoremViolation("critical subgraph failed its re-verification",
                           "{\"threshold\":" + std::to_string(threshold) + "}");
  return CriticalCertificate{std::move(s), threshold};
}

std::optional<int> degree_deficient_vertex(const Graph& g) {
  const int need = chi(g) - 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < need) return v;
  return std::nullopt;
}

bool is_non_degenerate(const Graph& g) { return !degree_deficient_vertex(g).has_value(); }

std::optional<std::pair<int, int>> domination_violation(const Graph& g) {
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      if ((g.row(x) - g.row(y)).empty()) return std::pair{x, y};
      if ((g.row(y) - g.row(x)).empty()) return std::pair{y, x};
    }
  }
  return std::nullopt;
}

bool is_liberal(const Graph& g) { return !domination_violation(g).has_value(); }

} // namespace sunspot
