#include "sunspot/flare.hpp"

#include <algorithm>
#include <string>

#include "sunspot/coloring.hpp"
#include "sunspot/errors.hpp"

namespace sunspot {

using nlohmann::json;

int Flare::order() const {
  int c = 0;
  for (const auto& a : assign) c += a.has_value();
  return c;
}

bool Flare::full() const { return order() == int(assign.size()); }

json Flare::to_json() const {
  json j;
  j["hole"] = hole.cyc;
  json a = json::object();
  for (std::size_t i = 0; i < assign.size(); ++i) {
    const std::string key = std::to_string(hole.cyc[i]);
    if (assign[i]) a[key] = *assign[i];
    else a[key] = nullptr;
  }
  j["assign"] = std::move(a);
  return j;
}

bool validate_flare(const Graph& g, const Flare& f) {
  if (!validate_hole(g, f.hole.cyc)) return false;
  if (f.assign.size() != f.hole.cyc.size()) return false;
  VertexSet in_hole(g.vertex_count());
  for (int v : f.hole.cyc) in_hole.set(v);
  for (std::size_t i = 0; i < f.assign.size(); ++i) {
    if (!f.assign[i]) continue;
    const int x = *f.assign[i];
    if (x < 0 || x >= g.vertex_count()) return false;
    if (in_hole.test(x)) return false;
    if (!g.adjacent(x, f.hole.cyc[i])) return false;
  }
  return true;
}

int hole_distance(const Hole& h, int i, int j) {
  const int t = h.length();
  const int fwd = ((j - i) % t + t) % t;
  return std::min(fwd, t - fwd);
}

std::optional<SafetyViolation> d_safety_violation(const Graph& g, const Flare& f, int d) {
  if (d < 1) throw PreconditionError("safety radius below 1");
  if (!validate_flare(g, f)) throw PreconditionError("invalid flare");
  const int t = f.hole.length();
  for (int i = 0; i < t; ++i) {
    if (!f.assign[i]) continue;
    const int a = *f.assign[i];
    for (int j = 0; j < t; ++j) {
      if (j == i || hole_distance(f.hole, i, j) > d) continue;
      // Phi[h'] = {h'} plus its assignment.
      std::vector<int> closed{f.hole.cyc[j]};
      if (f.assign[j]) closed.push_back(*f.assign[j]);
      for (int b : closed) {
        if (a == b || g.adjacent(a, b))
          return SafetyViolation{f.hole.cyc[i], f.hole.cyc[j], a, b};
      }
    }
  }
  return std::nullopt;
}

bool is_d_safe(const Graph& g, const Flare& f, int d) {
  return !d_safety_violation(g, f, d).has_value();
}

CheckResult common_neighbor_bounds_conclusion(const Graph& g, const Hole& h, const Flare& f) {
  CheckResult res;
  VertexSet outside = VertexSet::full(g.vertex_count());
  for (int v : h.cyc) outside.reset(v);
  const int t = h.length();
  for (int i = 0; i < t; ++i) {
    std::vector<int> closed{h.cyc[i]};
    if (f.assign[i]) closed.push_back(*f.assign[i]);
    for (int x : closed) {
      for (int j = 0; j < t; ++j) {
        if (j == i) continue;
        const int other = h.cyc[j];
        VertexSet common = (g.row(x) & g.row(other)) & outside;
        const int limit = g.adjacent(h.cyc[i], other) ? 0 : 1;
        if (common.count() > limit) {
          res.verdict = Verdict::Violated;
          res.detail["h"] = h.cyc[i];
          res.detail["h_other"] = other;
          res.detail["x"] = x;
          res.detail["common"] = common.to_vector();
          res.detail["limit"] = limit;
          return res;
        }
      }
    }
  }
  res.verdict = Verdict::Holds;
  return res;
}

CheckResult check_common_neighbor_bounds(const Graph& g, const Hole& h, const Flare& f) {
  CheckResult res;
  if (find_triangle(g)) {
    res.detail["reason"] = "graph has a triangle";
    return res;
  }
  if (find_sunspot4(g)) {
    res.detail["reason"] = "graph has a 4-sunspot";
    return res;
  }
  if (!is_liberal(g)) {
    res.detail["reason"] = "graph not liberal";
    return res;
  }
  if (!is_flapless(g)) {
    res.detail["reason"] = "graph not flapless";
    return res;
  }
  if (!validate_hole(g, h.cyc) || h.length() < 6) {
    res.detail["reason"] = "not a hole of length at least 6";
    return res;
  }
  if (!validate_flare(g, f)) {
    res.detail["reason"] = "invalid flare";
    return res;
  }
  return common_neighbor_bounds_conclusion(g, h, f);
}

FlareResult construct_full_flare(const Graph& g, const Hole& h, int d) {
  if (d < 1) throw PreconditionError("safety radius below 1");
  if (!validate_hole(g, h.cyc) || h.length() < 6)
    throw PreconditionError("needs a valid hole of length at least 6");
  const int t = h.length();
  const int n = g.vertex_count();
  VertexSet in_hole(n);
  for (int v : h.cyc) in_hole.set(v);

  FlareResult result;
  Flare flare{h, std::vector<std::optional<int>>(t)};
  for (int i = 0; i < t; ++i) {
    // D: hole vertices (other than this one) within distance d; U: their
    // closed assigned sets. The counting bounds |D| <= 2d, |U| <= 4d come
    // with the construction and are asserted as invariants.
    VertexSet U(n);
    int d_size = 0;
    for (int j = 0; j < t; ++j) {
      if (j == i || hole_distance(h, i, j) > d) continue;
      ++d_size;
      U.set(h.cyc[j]);
      if (flare.assign[j]) U.set(*flare.assign[j]);
    }
    if (d_size > 2 * d || U.count() > 4 * d)
      throw TheoremViolation("blocking set exceeded its counting bound", "{}");
    int pick = -1;
    const VertexSet candidates = g.row(h.cyc[i]) - in_hole;
    for (int x = candidates.first(); x >= 0; x = candidates.next(x)) {
      if (U.test(x) || g.row(x).intersects(U)) continue;
      pick = x;
      break;
    }
    if (pick < 0) {
      result.blocked_vertex = h.cyc[i];
      result.blocked_set = U;
      result.detail["blocked_vertex"] = h.cyc[i];
      result.detail["blocking_set"] = U.to_vector();
      result.detail["partial"] = flare.to_json();
      return result;
    }
    flare.assign[i] = pick;
    if (flare.order() != i + 1)
      throw TheoremViolation("flare order did not grow monotonically", "{}");
  }
  if (!validate_flare(g, flare) || !flare.full() || !is_d_safe(g, flare, d))
    throw TheoremViolation("greedy flare failed its re-verification", flare.to_json().dump());
  result.flare = std::move(flare);
  return result;
}

} // namespace sunspot
