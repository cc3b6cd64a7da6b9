#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "carpet/builder.hpp"
#include "carpet/word.hpp"

namespace oracle {

using carpet::Coord;

/// Γ_w^n assembled literally: level 1 is a unit square, level k+1 is the union
/// of 8 translated copies of level k on the model graph.
struct GluedGraph {
  int level = 1;
  std::int64_t side = 1;
  std::set<Coord> vertices;
  std::set<std::pair<Coord, Coord>> edges;  // (lower, upper) row-major
  std::set<Coord> cells;                    // lower-left corners of unit squares
  Coord root;
};

GluedGraph glue(const carpet::WordSpec& w, int n);

/// All-pairs distances over `vertices` in sorted order; -1 for unreachable.
std::vector<std::vector<int>> floyd_warshall(const std::vector<Coord>& vertices,
                                             const std::set<std::pair<Coord, Coord>>& edges);

struct FloodHole {
  Coord lo;  // lower-left lattice corner
  std::int64_t side = 0;
  int level = 0;
  bool square = false;  // component is exactly a filled side x side block
};

/// 4-connected components of missing unit cells inside [0,side]^2.
std::vector<FloodHole> flood_fill_holes(const GluedGraph& g);

/// Index-aligned agreement of the two letter streams far out.
bool cofinal_by_expansion(const carpet::WordSpec& u, const carpet::WordSpec& v, std::size_t horizon = 400);

/// Closure of the two generators, computed by repeated multiplication.
std::set<std::array<int, 8>> closure_of_generators();

bool isomorphic_by_expansion(const carpet::WordSpec& u, const carpet::WordSpec& v);

/// Root-preserving isomorphism of two fragments via Boost.Graph.
bool boost_rooted_isomorphic(const carpet::Fragment& a, const carpet::Fragment& b);

}  // namespace oracle
