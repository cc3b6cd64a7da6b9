#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "carpet/geometry.hpp"
#include "carpet/word.hpp"

namespace carpet {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultLevelCap = 8;

std::int64_t pow3(int e);
std::int64_t pow8(int e);

/// |V(Γ_n)| = (11/70)8^n + (8/15)3^n + 8/7, evaluated exactly.
std::int64_t expected_vertex_count(int n);

/// Grid cell of the model graph occupied by copy p (0..7), counterclockwise
/// from bottom-left; the centre (1,1) is never used.
Coord position_offset(Letter p);
/// Corner of the unit square C_4 named by the root letter.
Coord root_base(RootLetter y);

/// Whether unit cell (i,j) of the level-n square survives all subdivisions.
bool cell_included(std::int64_t i, std::int64_t j, int n);

/// Root of Γ_w^n in the absolute frame [0, 3^(n-1)]^2.
Coord root_coordinate(const WordSpec& w, int n);

enum class HoleSide : std::uint8_t { s1, s3, s5, s7 };  // top, left, bottom, right

/// Square hole isomorphic to H_m; corners counterclockwise from bottom-left.
struct Hole {
  int level = 2;  // m >= 2, side of 3^(m-2) edges
  Coord A, B, C, D;

  std::int64_t side_length() const { return C.x - A.x; }
  /// Vertices of one side, ordered by increasing coordinate.
  std::vector<Coord> side(HoleSide s) const;
  /// 4 * 3^(m-2) distinct boundary vertices.
  std::vector<Coord> boundary() const;
  /// Strict interior contains p.
  bool contains_strictly(Coord p) const {
    return p.x > A.x && p.x < C.x && p.y > A.y && p.y < C.y;
  }
  Hole translated(Coord by) const { return {level, A + by, B + by, C + by, D + by}; }

  friend bool operator==(const Hole&, const Hole&) = default;
};

/// Central hole of Γ_n in the absolute frame (n >= 2).
Hole central_hole(int n);

struct BuildOptions {
  int level_cap = kDefaultLevelCap;
};

/// Level-n approximation Γ_w^n, embedded in Z^2 with vertices in [0, side]^2.
/// Immutable once built.
class FiniteCarpet {
 public:
  int level() const { return level_; }
  std::int64_t side() const { return side_; }
  Coord root_abs() const { return root_; }
  const WordSpec& word() const { return word_; }

  bool contains(Coord abs) const;
  /// Unit lattice edge between two absolute points.
  bool has_edge(Coord a, Coord b) const;
  /// Neighbors of a vertex in the fixed order +x, +y, -x, -y.
  template <typename F>
  void for_each_neighbor(Coord v, F&& f) const {
    for (Coord step : kLatticeSteps) {
      Coord u = v + step;
      if (has_edge(v, u)) f(u);
    }
  }
  int degree(Coord abs) const;

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const;
  /// Row-major (y, then x) list of vertices.
  std::vector<Coord> vertices() const;
  /// Each undirected edge once, as (lower, upper) in row-major order.
  std::vector<std::pair<Coord, Coord>> edges() const;

  Coord to_relative(Coord abs) const { return abs - root_; }
  Coord to_absolute(Coord rel) const { return rel + root_; }

  /// Dense index of an in-range absolute point, for per-vertex arrays.
  std::size_t index_of(Coord abs) const {
    return static_cast<std::size_t>(abs.y * (side_ + 1) + abs.x);
  }
  Coord coord_of(std::size_t idx) const {
    auto w = static_cast<std::size_t>(side_ + 1);
    return {static_cast<std::int64_t>(idx % w), static_cast<std::int64_t>(idx / w)};
  }
  std::size_t grid_size() const { return static_cast<std::size_t>((side_ + 1) * (side_ + 1)); }
  bool in_range(Coord abs) const {
    return abs.x >= 0 && abs.y >= 0 && abs.x <= side_ && abs.y <= side_;
  }

  /// Cell (i,j) = unit square [i,i+1]x[j,j+1]; false outside the square.
  bool cell(std::int64_t i, std::int64_t j) const;

  friend FiniteCarpet build_level(const WordSpec& w, int n, const BuildOptions& opts);

 private:
  FiniteCarpet() = default;

  int level_ = 1;
  std::int64_t side_ = 1;
  Coord root_;
  WordSpec word_;
  std::vector<std::uint8_t> cells_;    // side*side, row-major
  std::vector<std::uint8_t> present_;  // (side+1)^2, row-major
  std::size_t vertex_count_ = 0;
};

FiniteCarpet build_level(const WordSpec& w, int n, const BuildOptions& opts = {});

/// If absolute point p lies strictly inside a hole of g, that hole.
std::optional<Hole> hole_containing(const FiniteCarpet& g, Coord abs);

/// All holes of level >= min_level, largest first, then row-major by corner A.
std::vector<Hole> enumerate_holes(const FiniteCarpet& g, int min_level = 2);

// --- rooted balls -----------------------------------------------------------

/// Induced subgraph of a rooted ball, in coordinates relative to its root.
struct Fragment {
  std::vector<Coord> vertices;                 // sorted; root is (0,0)
  std::vector<std::pair<int, int>> edges;      // indices into vertices, i < j, sorted

  int index_of(Coord rel) const;  // -1 when absent
  friend bool operator==(const Fragment&, const Fragment&) = default;
};

Fragment rooted_ball(const FiniteCarpet& g, std::int64_t radius);
/// Whole carpet as a fragment centred at its root.
Fragment whole_graph(const FiniteCarpet& g);

enum class RootedMatch {
  /// Same rooted picture in the lattice: the roots occupy the same vertex.
  Embedded,
  /// Abstract root-preserving graph isomorphism.
  Abstract,
};

bool rooted_isomorphic(const Fragment& f1, const Fragment& f2,
                       RootedMatch mode = RootedMatch::Abstract);

// --- export -----------------------------------------------------------------

enum class ExportFormat { dot, csv, json };
ExportFormat parse_export_format(std::string_view text);

struct ExportOptions {
  ExportFormat format = ExportFormat::json;
  bool absolute = false;
};

void export_carpet(const FiniteCarpet& g, std::ostream& out, const ExportOptions& opts = {});

}  // namespace carpet
