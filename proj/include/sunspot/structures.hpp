#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "sunspot/graph.hpp"

namespace sunspot {

/// Induced path p1..pl: consecutive vertices adjacent, all other pairs not.
struct InducedPath {
  std::vector<int> seq;
  int length() const { return int(seq.size()) - 1; }
};

/// Induced cycle on >= 4 vertices; length == vertex count == edge count.
struct Hole {
  std::vector<int> cyc;
  int length() const { return int(cyc.size()); }
};

bool validate_path(const Graph& g, const std::vector<int>& seq);
bool validate_hole(const Graph& g, const std::vector<int>& cyc);

// Enumerates every hole with length in [lmin, lmax] exactly once, in
// canonical order: anchored at its least vertex, oriented so the second
// vertex is smaller than the last, anchors ascending. The visitor returns
// false to stop. Requires 4 <= lmin <= lmax.
void for_each_hole(const Graph& g, int lmin, int lmax,
                   const std::function<bool(const Hole&)>& visit);

std::vector<Hole> enumerate_holes(const Graph& g, int lmin, int lmax);

/// Restartable stream over the same canonical enumeration.
class HoleStream {
public:
  HoleStream(const Graph& g, int lmin, int lmax);
  std::optional<Hole> next();

private:
  void refill();
  const Graph* g_;
  int lmin_, lmax_;
  int anchor_ = -1;
  int branch_ = -1; // second path vertex of the subtree last buffered
  std::vector<Hole> buffer_;
  std::size_t pos_ = 0;
};

// Minimum-length hole among those of length >= lmin (absent if none).
std::optional<Hole> find_hole_min_length(const Graph& g, int lmin);

/// t-cycle plus one private degree-one neighbor per cycle vertex;
/// pendants[i] attaches to cycle[i].
struct SunWitness {
  int t = 0;
  std::vector<int> cycle;
  std::vector<int> pendants;
};

/// Seven distinct vertices inducing exactly the edges
/// {x1x2, x2x3, x3x4, x4x1, x1y1, x2y2, x3y3}.
struct SunspotWitness {
  std::array<int, 4> x{};
  std::array<int, 3> y{};
};

/// Triangle plus one private pendant per corner (net) or per two corners
/// (bull); pendants[i] attaches to triangle[i].
struct NetWitness {
  std::array<int, 3> triangle{};
  std::array<int, 3> pendants{};
};
struct BullWitness {
  std::array<int, 3> triangle{};
  std::array<int, 2> pendants{}; // attach to triangle[0], triangle[1]
};

/// 4-hole x1-h1-h2-x2 sharing at least one edge with a reference hole.
struct FlapWitness {
  std::array<int, 4> quad{}; // cyclic order x1,h1,h2,x2
  std::vector<std::pair<int, int>> shared;
};

bool verify_sun(const Graph& g, const SunWitness& w);
bool verify_sunspot(const Graph& g, const SunspotWitness& w);
bool verify_net(const Graph& g, const NetWitness& w);
bool verify_bull(const Graph& g, const BullWitness& w);

// Induced t-sun with t >= tmin (first in canonical search order), or absent.
// Candidate pendants are tried degree-one first, then by label.
std::optional<SunWitness> find_sun(const Graph& g, int tmin);
std::optional<SunWitness> find_sun_exact(const Graph& g, int t);

std::optional<SunspotWitness> find_sunspot4(const Graph& g);
std::optional<NetWitness> find_net(const Graph& g);
std::optional<BullWitness> find_bull(const Graph& g);

// All x-sectors of H: paths of H whose two ends are exactly the neighbors of
// x on H. For k >= 2 neighbors the k sectors partition the edges of H;
// fewer than 2 neighbors yields none. x must lie outside H.
std::vector<InducedPath> x_sectors(const Graph& g, const Hole& h, int x);

// A 4-hole sharing an edge with H, or absent. H must be a valid hole.
std::optional<FlapWitness> find_flap(const Graph& g, const Hole& h);

struct FlaplessReport {
  bool flapless = true;
  std::optional<Hole> hole;
  std::optional<FlapWitness> flap;
};
// Quantifies over every hole of length >= 6.
FlaplessReport flapless_check(const Graph& g);
bool is_flapless(const Graph& g);

// Relabels a structure found in an induced subgraph back to original labels.
Hole map_hole(const std::vector<int>& label, const Hole& h);

} // namespace sunspot
