#include "sunspot/structures.hpp"

#include <algorithm>
#include <string>

#include "sunspot/errors.hpp"

namespace sunspot {

bool validate_path(const Graph& g, const std::vector<int>& seq) {
  const int l = int(seq.size());
  if (l < 1) return false;
  for (int i = 0; i < l; ++i) {
    if (seq[i] < 0 || seq[i] >= g.vertex_count()) return false;
    for (int j = i + 1; j < l; ++j) {
      if (seq[i] == seq[j]) return false;
      if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

bool validate_hole(const Graph& g, const std::vector<int>& cyc) {
  const int l = int(cyc.size());
  if (l < 4) return false;
  for (int i = 0; i < l; ++i) {
    if (cyc[i] < 0 || cyc[i] >= g.vertex_count()) return false;
    for (int j = i + 1; j < l; ++j) {
      if (cyc[i] == cyc[j]) return false;
      const bool consecutive = (j == i + 1) || (i == 0 && j == l - 1);
      if (g.adjacent(cyc[i], cyc[j]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

// Canonical induced-cycle DFS. Grows induced paths from a least-labeled
// anchor; every other path vertex exceeds the anchor, each new vertex is
// adjacent to the current endpoint and to no other path vertex except
// possibly the anchor. Anchor-adjacency closes a cycle and never extends
// (the anchor edge would become a chord deeper down). Each hole is seen
// once: at its least vertex, oriented with second < last.
struct HoleDfs {
  const Graph& g;
  int lmin, lmax;
  const std::function<bool(const Hole&)>& visit;
  int anchor = 0;
  VertexSet above;                  // vertices > anchor
  std::vector<int> path;
  std::vector<VertexSet> blocked;   // path members + neighborhoods of interior
  bool stopped = false;

  HoleDfs(const Graph& graph, int lo, int hi, const std::function<bool(const Hole&)>& v)
      : g(graph), lmin(lo), lmax(hi), visit(v) {}

  void run_anchor(int a, int first_branch = -1) {
    anchor = a;
    above = VertexSet(g.vertex_count());
    for (int v = a + 1; v < g.vertex_count(); ++v) above.set(v);
    const VertexSet nb = g.row(a) & above;
    for (int b = nb.first(); b >= 0 && !stopped; b = nb.next(b)) {
      if (first_branch >= 0 && b != first_branch) continue;
      path = {a, b};
      VertexSet blk(g.vertex_count());
      blk.set(a);
      blk.set(b);
      blocked = {blk};
      extend();
    }
  }

  void run() {
    for (int a = 0; a < g.vertex_count() && !stopped; ++a) run_anchor(a);
  }

  void extend() {
    if (stopped) return;
    const int len = int(path.size());
    const VertexSet cand = (g.row(path.back()) - blocked.back()) & above;
    for (int w = cand.first(); w >= 0 && !stopped; w = cand.next(w)) {
      if (g.adjacent(w, anchor)) {
        if (len >= 3 && path[1] < w && len + 1 >= lmin && len + 1 <= lmax) {
          Hole h;
          h.cyc = path;
          h.cyc.push_back(w);
          if (!visit(h)) stopped = true;
        }
      } else if (len + 2 <= lmax) {
        VertexSet blk = blocked.back() | g.row(path.back());
        blk.set(w);
        blocked.push_back(std::move(blk));
        path.push_back(w);
        extend();
        path.pop_back();
        blocked.pop_back();
      }
    }
  }
};

} // namespace

void for_each_hole(const Graph& g, int lmin, int lmax,
                   const std::function<bool(const Hole&)>& visit) {
  if (lmin < 4) throw PreconditionError("hole length bound below 4");
  if (lmax < lmin) return;
  HoleDfs dfs(g, lmin, lmax, visit);
  dfs.run();
}

std::vector<Hole> enumerate_holes(const Graph& g, int lmin, int lmax) {
  std::vector<Hole> out;
  for_each_hole(g, lmin, lmax, [&](const Hole& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

HoleStream::HoleStream(const Graph& g, int lmin, int lmax)
    : g_(&g), lmin_(lmin), lmax_(lmax) {
  if (lmin < 4) throw PreconditionError("hole length bound below 4");
}

void HoleStream::refill() {
  buffer_.clear();
  pos_ = 0;
  const int n = g_->vertex_count();
  while (anchor_ < n) {
    if (anchor_ >= 0) {
      // Advance within the current anchor: next branch vertex.
      branch_ = (g_->row(anchor_)).next(std::max(branch_, anchor_));
      if (branch_ >= 0) {
        HoleDfs dfs(*g_, lmin_, lmax_, [&](const Hole& h) {
          buffer_.push_back(h);
          return true;
        });
        dfs.run_anchor(anchor_, branch_);
        if (!buffer_.empty()) return;
        continue;
      }
    }
    ++anchor_;
    branch_ = -1;
  }
}

std::optional<Hole> HoleStream::next() {
  while (pos_ >= buffer_.size()) {
    if (anchor_ >= g_->vertex_count()) return std::nullopt;
    refill();
    if (buffer_.empty() && anchor_ >= g_->vertex_count()) return std::nullopt;
  }
  return buffer_[pos_++];
}

std::optional<Hole> find_hole_min_length(const Graph& g, int lmin) {
  if (lmin < 4) throw PreconditionError("hole length bound below 4");
  for (int target = lmin; target <= g.vertex_count(); ++target) {
    std::optional<Hole> found;
    for_each_hole(g, target, target, [&](const Hole& h) {
      found = h;
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool verify_sun(const Graph& g, const SunWitness& w) {
  const int t = w.t;
  if (t < 4 || int(w.cycle.size()) != t || int(w.pendants.size()) != t) return false;
  std::vector<int> verts = w.cycle;
  verts.insert(verts.end(), w.pendants.begin(), w.pendants.end());
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (int i = 0; i < 2 * t; ++i) {
    for (int j = i + 1; j < 2 * t; ++j) {
      bool expected = false;
      if (i < t && j < t) expected = (j == i + 1) || (i == 0 && j == t - 1);
      else if (i < t && j >= t) expected = (j - t == i);
      if (g.adjacent(verts[i], verts[j]) != expected) return false;
    }
  }
  return true;
}

bool verify_sunspot(const Graph& g, const SunspotWitness& w) {
  std::array<int, 7> verts{w.x[0], w.x[1], w.x[2], w.x[3], w.y[0], w.y[1], w.y[2]};
  std::array<int, 7> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count()) return false;
  auto expected = [&](int i, int j) {
    auto is = [&](int a, int b) { return (i == a && j == b) || (i == b && j == a); };
    return is(0, 1) || is(1, 2) || is(2, 3) || is(3, 0) || is(0, 4) || is(1, 5) || is(2, 6);
  };
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (g.adjacent(verts[i], verts[j]) != expected(i, j)) return false;
  return true;
}

bool verify_net(const Graph& g, const NetWitness& w) {
  std::array<int, 6> verts{w.triangle[0], w.triangle[1], w.triangle[2],
                           w.pendants[0], w.pendants[1], w.pendants[2]};
  std::array<int, 6> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      bool expected = (i < 3 && j < 3) || (j >= 3 && j - 3 == i);
      if (g.adjacent(verts[i], verts[j]) != expected) return false;
    }
  return true;
}

bool verify_bull(const Graph& g, const BullWitness& w) {
  std::array<int, 5> verts{w.triangle[0], w.triangle[1], w.triangle[2],
                           w.pendants[0], w.pendants[1]};
  std::array<int, 5> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      bool expected = (i < 3 && j < 3) || (j >= 3 && j - 3 == i);
      if (g.adjacent(verts[i], verts[j]) != expected) return false;
    }
  return true;
}

namespace {

// Pendant candidates for each vertex of an induced cycle: neighbors outside
// the cycle that touch no other cycle vertex. Candidate sets are pairwise
// disjoint by construction, so chosen pendants are automatically distinct;
// mutual non-adjacency is resolved by backtracking, degree-one candidates
// first (they are forced choices elsewhere, so they prune fastest).
bool assign_pendants(const Graph& g, const std::vector<VertexSet>& cands,
                     std::size_t i, std::vector<int>& chosen) {
  if (i == cands.size()) return true;
  std::vector<int> order = cands[i].to_vector();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return (g.degree(a) == 1) > (g.degree(b) == 1); });
  for (int y : order) {
    bool clash = false;
    for (int z : chosen)
      if (g.adjacent(y, z)) {
        clash = true;
        break;
      }
    if (clash) continue;
    chosen.push_back(y);
    if (assign_pendants(g, cands, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

std::vector<VertexSet> pendant_candidates(const Graph& g, const std::vector<int>& cyc) {
  VertexSet in_cycle(g.vertex_count());
  for (int v : cyc) in_cycle.set(v);
  std::vector<VertexSet> cands;
  cands.reserve(cyc.size());
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    VertexSet c = g.row(cyc[i]) - in_cycle;
    for (std::size_t j = 0; j < cyc.size(); ++j)
      if (j != i) c -= g.row(cyc[j]);
    cands.push_back(std::move(c));
  }
  return cands;
}

// Sun search: the hole DFS above, augmented with per-path-vertex pendant
// candidate sets maintained incrementally. Growing the path only shrinks a
// candidate set (new adjacency constraints, and a candidate may itself join
// the path), so an empty set anywhere prunes the whole subtree.
struct SunDfs {
  const Graph& g;
  int tmin, tmax;
  int anchor = 0;
  VertexSet above;
  std::vector<int> path;
  std::vector<VertexSet> blocked;
  std::vector<std::vector<VertexSet>> cands; // per depth, one set per path vertex
  std::optional<SunWitness> found;

  SunDfs(const Graph& graph, int lo, int hi) : g(graph), tmin(lo), tmax(hi) {}

  void run() {
    const int n = g.vertex_count();
    for (anchor = 0; anchor < n && !found; ++anchor) {
      above = VertexSet(n);
      for (int v = anchor + 1; v < n; ++v) above.set(v);
      const VertexSet nb = g.row(anchor) & above;
      for (int b = nb.first(); b >= 0 && !found; b = nb.next(b)) {
        path = {anchor, b};
        VertexSet blk(n);
        blk.set(anchor);
        blk.set(b);
        blocked = {blk};
        VertexSet ca = g.row(anchor), cb = g.row(b);
        ca.reset(b);
        ca -= g.row(b);
        cb.reset(anchor);
        cb -= g.row(anchor);
        cands = {{ca, cb}};
        if (!ca.empty() && !cb.empty()) extend();
      }
    }
  }

  void try_close(int w) {
    std::vector<int> cyc = path;
    cyc.push_back(w);
    std::vector<VertexSet> final_cands = cands.back();
    for (auto& c : final_cands) {
      c -= g.row(w);
      c.reset(w);
      if (c.empty()) return;
    }
    VertexSet cw = g.row(w);
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i) {
      cw -= g.row(cyc[i]);
      cw.reset(cyc[i]);
    }
    if (cw.empty()) return;
    final_cands.push_back(std::move(cw));
    std::vector<int> chosen;
    if (!assign_pendants(g, final_cands, 0, chosen)) return;
    SunWitness w2{int(cyc.size()), std::move(cyc), std::move(chosen)};
    if (!verify_sun(g, w2))
      throw TheoremViolation("sun witness failed re-verification", "{}");
    found = std::move(w2);
  }

  void extend() {
    if (found) return;
    const int len = int(path.size());
    const VertexSet cand = (g.row(path.back()) - blocked.back()) & above;
    for (int w = cand.first(); w >= 0 && !found; w = cand.next(w)) {
      if (g.adjacent(w, anchor)) {
        if (len >= 3 && path[1] < w && len + 1 >= tmin && len + 1 <= tmax) try_close(w);
      } else if (len + 2 <= tmax) {
        std::vector<VertexSet> next = cands.back();
        bool dead = false;
        for (auto& c : next) {
          c -= g.row(w);
          c.reset(w);
          if (c.empty()) {
            dead = true;
            break;
          }
        }
        if (dead) continue;
        VertexSet cw = g.row(w);
        for (int p : path) {
          cw -= g.row(p);
          cw.reset(p);
        }
        if (cw.empty()) continue;
        next.push_back(std::move(cw));
        cands.push_back(std::move(next));
        VertexSet blk = blocked.back() | g.row(path.back());
        blk.set(w);
        blocked.push_back(std::move(blk));
        path.push_back(w);
        extend();
        path.pop_back();
        blocked.pop_back();
        cands.pop_back();
      }
    }
  }
};

} // namespace

std::optional<SunWitness> find_sun(const Graph& g, int tmin) {
  if (tmin < 4) throw PreconditionError("sun cycle length below 4");
  const int tmax = g.vertex_count() / 2;
  if (tmax < tmin) return std::nullopt;
  SunDfs dfs(g, tmin, tmax);
  dfs.run();
  return dfs.found;
}

std::optional<SunWitness> find_sun_exact(const Graph& g, int t) {
  if (t < 4) throw PreconditionError("sun cycle length below 4");
  if (2 * t > g.vertex_count()) return std::nullopt;
  SunDfs dfs(g, t, t);
  dfs.run();
  return dfs.found;
}

std::optional<SunspotWitness> find_sunspot4(const Graph& g) {
  std::optional<SunspotWitness> found;
  for_each_hole(g, 4, 4, [&](const Hole& h) {
    // All eight labelings of the 4-hole: the pendant-free position x4 and
    // the traversal direction both matter for the pattern.
    const auto& c = h.cyc;
    std::array<std::array<int, 4>, 8> labelings;
    for (int r = 0; r < 4; ++r) {
      for (int i = 0; i < 4; ++i) {
        labelings[r][i] = c[(r + i) % 4];
        labelings[4 + r][i] = c[(r + 4 - i) % 4];
      }
    }
    VertexSet in_hole(g.vertex_count());
    for (int v : c) in_hole.set(v);
    for (const auto& x : labelings) {
      std::vector<VertexSet> cands;
      bool dead = false;
      for (int i = 0; i < 3 && !dead; ++i) {
        VertexSet ci = g.row(x[i]) - in_hole;
        for (int j = 0; j < 4; ++j)
          if (j != i) ci -= g.row(x[j]);
        if (ci.empty()) dead = true;
        cands.push_back(std::move(ci));
      }
      if (dead) continue;
      std::vector<int> chosen;
      if (!assign_pendants(g, cands, 0, chosen)) continue;
      SunspotWitness w{{x[0], x[1], x[2], x[3]}, {chosen[0], chosen[1], chosen[2]}};
      if (!verify_sunspot(g, w))
        throw TheoremViolation("sunspot witness failed re-verification", "{}");
      found = w;
      return false;
    }
    return true;
  });
  return found;
}

namespace {

template <class F>
void for_each_triangle(const Graph& g, F&& f) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    const VertexSet nu = g.row(u);
    for (int v = nu.next(u); v >= 0; v = nu.next(v)) {
      const VertexSet common = nu & g.row(v);
      for (int w = common.next(v); w >= 0; w = common.next(w))
        if (f(u, v, w)) return;
    }
  }
}

} // namespace

std::optional<NetWitness> find_net(const Graph& g) {
  std::optional<NetWitness> found;
  for_each_triangle(g, [&](int u, int v, int w) {
    const std::array<int, 3> tri{u, v, w};
    std::vector<VertexSet> cands;
    for (int i = 0; i < 3; ++i) {
      VertexSet ci = g.row(tri[i]);
      for (int j = 0; j < 3; ++j) {
        if (j != i) ci -= g.row(tri[j]);
        ci.reset(tri[j]);
      }
      if (ci.empty()) return false;
      cands.push_back(std::move(ci));
    }
    std::vector<int> chosen;
    if (!assign_pendants(g, cands, 0, chosen)) return false;
    NetWitness nw{tri, {chosen[0], chosen[1], chosen[2]}};
    if (!verify_net(g, nw)) throw TheoremViolation("net witness failed re-verification", "{}");
    found = nw;
    return true;
  });
  return found;
}

std::optional<BullWitness> find_bull(const Graph& g) {
  std::optional<BullWitness> found;
  for_each_triangle(g, [&](int u, int v, int w) {
    const std::array<int, 3> tri{u, v, w};
    // Which two corners carry the pendants.
    for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      std::vector<VertexSet> cands;
      bool dead = false;
      for (int idx : {a, b}) {
        VertexSet ci = g.row(tri[idx]);
        for (int j = 0; j < 3; ++j) {
          if (j != idx) ci -= g.row(tri[j]);
          ci.reset(tri[j]);
        }
        if (ci.empty()) {
          dead = true;
          break;
        }
        cands.push_back(std::move(ci));
      }
      if (dead) continue;
      std::vector<int> chosen;
      if (!assign_pendants(g, cands, 0, chosen)) continue;
      BullWitness bw{{tri[a], tri[b], tri[3 - a - b]}, {chosen[0], chosen[1]}};
      if (!verify_bull(g, bw))
        throw TheoremViolation("bull witness failed re-verification", "{}");
      found = bw;
      return true;
    }
    return false;
  });
  return found;
}

std::vector<InducedPath> x_sectors(const Graph& g, const Hole& h, int x) {
  if (!validate_hole(g, h.cyc)) throw PreconditionError("invalid hole");
  const int t = h.length();
  for (int v : h.cyc)
    if (v == x) throw PreconditionError("sector vertex lies on the hole");
  std::vector<int> positions;
  for (int i = 0; i < t; ++i)
    if (g.adjacent(x, h.cyc[i])) positions.push_back(i);
  if (positions.size() < 2) return {};
  std::vector<InducedPath> out;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    const int from = positions[j];
    const int to = positions[(j + 1) % positions.size()];
    InducedPath p;
    for (int i = from;; i = (i + 1) % t) {
      p.seq.push_back(h.cyc[i]);
      if (i == to) break;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<FlapWitness> find_flap(const Graph& g, const Hole& h) {
  if (!validate_hole(g, h.cyc)) throw PreconditionError("invalid hole");
  const int t = h.length();
  const int n = g.vertex_count();
  std::vector<int> pos(n, -1);
  for (int i = 0; i < t; ++i) pos[h.cyc[i]] = i;
  auto hole_edge = [&](int u, int v) {
    if (u < 0 || v < 0 || pos[u] < 0 || pos[v] < 0) return false;
    int d = std::abs(pos[u] - pos[v]);
    return d == 1 || d == t - 1;
  };
  for (int i = 0; i < t; ++i) {
    const int h1 = h.cyc[i];
    const int h2 = h.cyc[(i + 1) % t];
    // x1: adjacent to h1 but not h2, distinct from both.
    VertexSet c1 = g.row(h1) - g.row(h2);
    c1.reset(h2);
    for (int x1 = c1.first(); x1 >= 0; x1 = c1.next(x1)) {
      // x2: adjacent to h2 and x1, not to h1; x1 never qualifies (it misses h2).
      VertexSet c2 = (g.row(h2) & g.row(x1)) - g.row(h1);
      c2.reset(h1);
      const int x2 = c2.first();
      if (x2 < 0) continue;
      FlapWitness w;
      w.quad = {x1, h1, h2, x2};
      const std::array<std::pair<int, int>, 4> qedges{
          std::pair{x1, h1}, {h1, h2}, {h2, x2}, {x2, x1}};
      for (auto [u, v] : qedges)
        if (hole_edge(u, v)) w.shared.emplace_back(u, v);
      return w;
    }
  }
  return std::nullopt;
}

FlaplessReport flapless_check(const Graph& g) {
  FlaplessReport report;
  for_each_hole(g, 6, g.vertex_count(), [&](const Hole& h) {
    if (auto flap = find_flap(g, h)) {
      report.flapless = false;
      report.hole = h;
      report.flap = std::move(flap);
      return false;
    }
    return true;
  });
  return report;
}

bool is_flapless(const Graph& g) { return flapless_check(g).flapless; }

Hole map_hole(const std::vector<int>& label, const Hole& h) {
  Hole out;
  out.cyc.reserve(h.cyc.size());
  for (int v : h.cyc) out.cyc.push_back(label[v]);
  return out;
}

} // namespace sunspot
