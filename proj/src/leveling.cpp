#include "sunspot/leveling.hpp"

#include <algorithm>

#include <json.hpp>

#include "sunspot/errors.hpp"
#include "sunspot/graph6.hpp"

namespace sunspot {

using nlohmann::json;

VertexSet Leveling::union_all() const {
  if (levels.empty()) return VertexSet(0);
  VertexSet u(levels[0].universe());
  for (const auto& l : levels) u |= l;
  return u;
}

LevelingCheck validate_leveling(const Graph& g, const Leveling& lv) {
  const int n = g.vertex_count();
  const int r = lv.depth();
  VertexSet seen(n);
  for (int i = 0; i <= r; ++i) {
    const VertexSet& li = lv.levels[i];
    if (li.universe() != n || li.empty() || seen.intersects(li))
      return {false, LevelingAxiom::DisjointNonempty,
              "level " + std::to_string(i) + " is empty or overlaps an earlier level"};
    seen |= li;
  }
  for (int i = 1; i <= r; ++i) {
    for (int v = lv.levels[i].first(); v >= 0; v = lv.levels[i].next(v))
      if (!g.row(v).intersects(lv.levels[i - 1]))
        return {false, LevelingAxiom::BackNeighbor,
                "vertex " + std::to_string(v) + " in level " + std::to_string(i) +
                    " has no neighbor one level down"};
  }
  for (int i = 0; i <= r; ++i) {
    for (int j = i + 2; j <= r; ++j) {
      for (int v = lv.levels[i].first(); v >= 0; v = lv.levels[i].next(v))
        if (g.row(v).intersects(lv.levels[j]))
          return {false, LevelingAxiom::NoLevelSkipping,
                  "edge between levels " + std::to_string(i) + " and " + std::to_string(j)};
    }
  }
  return {};
}

Leveling bfs_leveling(const Graph& g, int root) {
  const std::vector<int> dist = g.bfs_distances(root);
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  Leveling lv;
  lv.levels.assign(ecc + 1, VertexSet(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] != Graph::kUnreachable) lv.levels[dist[v]].set(v);
  return lv;
}

Leveling truncate(const Leveling& lv, int k) {
  Leveling out;
  out.levels.assign(lv.levels.begin(), lv.levels.begin() + k + 1);
  return out;
}

namespace {

// Max-chi component, ties by least member.
int max_chi_component(const Graph& g, const std::vector<VertexSet>& comps) {
  int best = -1, best_chi = -1;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    int c = chi_in(g, comps[i]);
    if (c > best_chi) {
      best_chi = c;
      best = int(i);
    }
  }
  return best;
}

} // namespace

DeepLeveling build_deep_leveling(const Graph& g, int c) {
  if (c < 1) throw PreconditionError("threshold must be positive");
  if (auto tri = find_triangle(g))
    throw PreconditionError("graph has a triangle {" + std::to_string((*tri)[0]) + "," +
                            std::to_string((*tri)[1]) + "," + std::to_string((*tri)[2]) + "}");
  const int full_chi = chi(g);
  if (full_chi <= 2 * c + 1)
    throw PreconditionError("chromatic number " + std::to_string(full_chi) +
                            " does not exceed 2c+1 = " + std::to_string(2 * c + 1));
  const int n = g.vertex_count();

  const std::vector<VertexSet> comps = g.components();
  const VertexSet K = comps[max_chi_component(g, comps)];
  const int x0 = K.first();

  VertexSet rest = K - g.row(x0);
  rest.reset(x0);
  auto [rest_graph, rest_label] = g.induced(rest);
  const std::vector<VertexSet> sub_comps = rest_graph.components();
  const VertexSet sub_K1 = sub_comps[max_chi_component(rest_graph, sub_comps)];
  VertexSet K1(n);
  for (int v = sub_K1.first(); v >= 0; v = sub_K1.next(v)) K1.set(rest_label[v]);

  // Least neighbor of x0 that attaches to K1; one exists because K is
  // connected and K1 is a component of K minus the closed neighborhood.
  int x1 = -1;
  const VertexSet nbr0 = g.neighbors_in(x0, K);
  for (int v = nbr0.first(); v >= 0; v = nbr0.next(v)) {
    if (g.row(v).intersects(K1)) {
      x1 = v;
      break;
    }
  }
  if (x1 < 0)
    throw TheoremViolation("no neighbor of the start vertex attaches to the chosen component",
                           "{}");

  VertexSet walk = K1;
  walk.set(x1);
  const std::vector<int> dist = g.bfs_distances(x1, walk);
  int max_dist = 0;
  for (int v = K1.first(); v >= 0; v = K1.next(v)) max_dist = std::max(max_dist, dist[v]);
  std::vector<VertexSet> M(max_dist + 1, VertexSet(n));
  for (int v = K1.first(); v >= 0; v = K1.next(v)) M[dist[v]].set(v);

  int r1 = -1;
  for (int r = 2; r <= max_dist; ++r) {
    if (chi_in(g, M[r]) > c) {
      r1 = r;
      break;
    }
  }
  if (r1 < 0)
    throw TheoremViolation("no level beyond the first exceeds the threshold", "{}");

  auto [mg, mlabel] = g.induced(M[r1]);
  const CriticalCertificate local = extract_critical(mg, c);
  VertexSet K2(n);
  for (int v = local.members.first(); v >= 0; v = local.members.next(v)) K2.set(mlabel[v]);

  Leveling lv;
  lv.levels.push_back(VertexSet::of(n, {x0}));
  lv.levels.push_back(VertexSet::of(n, {x1}));
  for (int i = 2; i <= r1; ++i) lv.levels.push_back(M[i - 1]);
  lv.levels.push_back(K2);

  const LevelingCheck check = validate_leveling(g, lv);
  if (!check.valid || lv.depth() < 3)
    throw TheoremViolation("constructed leveling failed validation: " + check.detail, "{}");
  auto [top, top_label] = g.induced(K2);
  (void)top_label;
  if (chi(top) != c + 1 || !is_non_degenerate(top) || !is_liberal(top))
    throw TheoremViolation("top level failed its re-verification", "{}");
  return DeepLeveling{std::move(lv), CriticalCertificate{std::move(K2), c}};
}

FlaplessSubgraphResult flapless_chromatic_subgraph(const Graph& g, int c) {
  FlaplessSubgraphResult result;
  result.sunspot = find_sunspot4(g);
  DeepLeveling deep = build_deep_leveling(g, c);
  result.subgraph = deep.top.members;
  result.leveling = std::move(deep.leveling);

  auto [sub, label] = g.induced(result.subgraph);
  const FlaplessReport rep = flapless_check(sub);
  if (!rep.flapless) {
    json diag;
    diag["graph6"] = serialize_graph6(g);
    diag["subgraph"] = result.subgraph.to_vector();
    diag["hole"] = map_hole(label, *rep.hole).cyc;
    json quad = json::array();
    for (int v : rep.flap->quad) quad.push_back(label[v]);
    diag["flap"] = quad;
    if (result.sunspot) {
      throw PreconditionError(
          "graph has a 4-sunspot (" + std::to_string(result.sunspot->x[0]) + "," +
          std::to_string(result.sunspot->x[1]) + "," + std::to_string(result.sunspot->x[2]) +
          "," + std::to_string(result.sunspot->x[3]) + ";" +
          std::to_string(result.sunspot->y[0]) + "," + std::to_string(result.sunspot->y[1]) +
          "," + std::to_string(result.sunspot->y[2]) +
          ") and the constructed subgraph is not flapless: " + diag.dump());
    }
    throw TheoremViolation("flapless verification failed on a 4-sunspot-free input",
                           diag.dump());
  }
  return result;
}

namespace {

bool common_hypotheses(const Graph& g, const Leveling& lv, const Hole& h, json& detail) {
  if (find_triangle(g)) {
    detail["reason"] = "graph has a triangle";
    return false;
  }
  if (find_sunspot4(g)) {
    detail["reason"] = "graph has a 4-sunspot";
    return false;
  }
  if (!validate_leveling(g, lv).valid) {
    detail["reason"] = "invalid leveling";
    return false;
  }
  if (!validate_hole(g, h.cyc) || h.length() < 6) {
    detail["reason"] = "not a hole of length at least 6";
    return false;
  }
  const VertexSet& top = lv.levels.back();
  for (int v : h.cyc)
    if (!top.test(v)) {
      detail["reason"] = "hole not inside the top level";
      return false;
    }
  return true;
}

} // namespace

CheckResult check_sector_lemmas(const Graph& g, const Leveling& lv, const Hole& h, int x) {
  CheckResult res;
  if (!common_hypotheses(g, lv, h, res.detail)) return res;
  const int r = lv.depth();
  VertexSet hole_set(g.vertex_count());
  for (int v : h.cyc) hole_set.set(v);

  bool applicable = false;
  if (r >= 2 && lv.levels[r - 1].test(x)) {
    applicable = true;
    res.detail["case"] = "level-below";
  } else if (r >= 3 && lv.levels[r].test(x) && !hole_set.test(x)) {
    auto [top, label] = g.induced(lv.levels[r]);
    (void)label;
    if (is_liberal(top)) {
      applicable = true;
      res.detail["case"] = "top-level";
    } else {
      res.detail["reason"] = "top level not liberal";
    }
  } else {
    res.detail["reason"] = "x outside the hypothesis levels";
  }
  if (!applicable) return res;

  for (const InducedPath& p : x_sectors(g, h, x)) {
    if (p.length() <= 2) {
      res.verdict = Verdict::Violated;
      res.detail["x"] = x;
      res.detail["hole"] = h.cyc;
      res.detail["sector"] = p.seq;
      return res;
    }
  }
  res.verdict = Verdict::Holds;
  return res;
}

CheckResult check_flap_endpoint_lemma(const Graph& g, const Leveling& lv, const Hole& h,
                                      const FlapWitness& flap) {
  CheckResult res;
  if (!common_hypotheses(g, lv, h, res.detail)) return res;
  const int r = lv.depth();
  if (r < 3) {
    res.detail["reason"] = "leveling depth below 3";
    return res;
  }
  auto [top_graph, label] = g.induced(lv.levels[r]);
  (void)label;
  if (!is_liberal(top_graph)) {
    res.detail["reason"] = "top level not liberal";
    return res;
  }
  VertexSet hole_set(g.vertex_count());
  for (int v : h.cyc) hole_set.set(v);
  const int x1 = flap.quad[0], h1 = flap.quad[1], h2 = flap.quad[2], x2 = flap.quad[3];
  if (!hole_set.test(h1) || !hole_set.test(h2) || !g.adjacent(h1, h2) ||
      !validate_hole(g, {x1, h1, h2, x2})) {
    res.detail["reason"] = "not an H-flap on a hole edge";
    return res;
  }
  const VertexSet& top = lv.levels[r];
  const VertexSet& below = lv.levels[r - 1];
  auto in_hypothesis = [&](int v) { return top.test(v) || below.test(v); };
  if (!in_hypothesis(x1) || !in_hypothesis(x2)) {
    res.detail["reason"] = "flap endpoints outside the top two levels";
    return res;
  }
  const bool ok1 = top.test(x1) && !hole_set.test(x1);
  const bool ok2 = top.test(x2) && !hole_set.test(x2);
  res.verdict = (ok1 && ok2) ? Verdict::Holds : Verdict::Violated;
  if (res.verdict == Verdict::Violated) {
    res.detail["hole"] = h.cyc;
    res.detail["flap"] = {x1, h1, h2, x2};
  }
  return res;
}

} // namespace sunspot
