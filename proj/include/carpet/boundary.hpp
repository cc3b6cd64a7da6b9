#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <span>
#include <stdexcept>
#include <vector>

#include "carpet/builder.hpp"
#include "carpet/metric.hpp"
#include "carpet/word.hpp"

namespace carpet {

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

constexpr int slot(Direction d) { return (index(d) - 1) / 2; }
constexpr int slot(DiagonalDirection q) { return static_cast<int>(q); }

/// Letter whose occurrence at step m puts the new central hole in direction d.
inline Letter letter_of(Direction d) { return Letter(index(d)); }

struct DirectionProfile {
  std::array<bool, 4> growth{};       // by slot(Direction)
  std::array<bool, 4> obstruction{};  // by slot(Direction)
  std::array<bool, 4> diagonal{};     // by slot(DiagonalDirection)

  bool grows(Direction d) const { return growth[static_cast<std::size_t>(slot(d))]; }
  bool obstructed(Direction d) const { return obstruction[static_cast<std::size_t>(slot(d))]; }
  bool grows(DiagonalDirection q) const { return diagonal[static_cast<std::size_t>(slot(q))]; }

  friend bool operator==(const DirectionProfile&, const DirectionProfile&) = default;
};

DirectionProfile classify_directions(const WordSpec& w);

/// M = {m <= max_level : x_m = letter_of(dir)}. Throws PreconditionError if
/// there is no obstruction in dir or M is empty.
std::vector<int> obstruction_levels(const WordSpec& w, Direction dir, int max_level);

/// Central hole of Γ^(m+1) in coordinates relative to the root; unchanged by
/// any further growth of the level.
Hole hole_corners_relative(const WordSpec& w, int m);

/// Corners of a hole as seen from the root when looking along `dir`.
struct FrameCorners {
  Coord far_minus;  // far side, negative across coordinate (B for d7)
  Coord far_plus;   // far side, positive across coordinate (C for d7)
  Coord near_minus;
  Coord near_plus;
};
FrameCorners frame_corners(const Hole& h, Direction dir);

/// A built carpet for one word together with its metric. Level m data lives
/// at any built level >= m+1.
class Workspace {
 public:
  Workspace(WordSpec w, int level, const BuildOptions& opts = {});

  const WordSpec& word() const { return word_; }
  const FiniteCarpet& carpet() const { return *carpet_; }
  const Metric& metric() const { return *metric_; }
  int level() const { return carpet_->level(); }

 private:
  WordSpec word_;
  std::unique_ptr<FiniteCarpet> carpet_;
  std::unique_ptr<Metric> metric_;
};

/// Level needed to see sequence data up to index m: m+1, at least 4, at most cap.
int auto_level(int m, int cap = kDefaultLevelCap);

enum class SequenceFamily {
  corner_B,
  corner_C,
  antipodal,
  shifted_antipodal,
  f_seq,
  g_seq,
  diagonal,
  axis_ray,
};
std::string to_string(SequenceFamily f);
SequenceFamily parse_family(std::string_view text);

/// Representative of a boundary point: level (or step) index -> vertex, in
/// root-relative coordinates.
struct SequenceRep {
  SequenceFamily family = SequenceFamily::antipodal;
  std::int64_t k = 0;  // shift / axis offset when relevant
  std::variant<Direction, DiagonalDirection> direction = Direction::d7;
  std::map<int, Coord> points;
  std::vector<std::pair<int, std::string>> dropped;  // skipped indices with reason

  std::vector<int> levels() const;
  std::vector<Coord> ordered_points() const;
  std::string direction_name() const;
};

/// Obstruction levels (usable at the built level) whose hole's transverse
/// span reaches at least `margin` beyond the root on both sides.
std::vector<int> deep_levels(const Workspace& ws, Direction dir, std::int64_t margin);

/// Far-side antipodal points z_m: both constrained distances through the far
/// corners equal d(root, z_m).
SequenceRep antipodal_sequence(const Workspace& ws, Direction dir);
/// z_m + k * across; indices whose shifted point leaves the side are dropped.
SequenceRep shifted_antipodal(const Workspace& ws, Direction dir, std::int64_t k);

struct CornerSequences {
  SequenceRep B, C, f, g;
};
/// Far corners and the points at one and two thirds of the far side.
CornerSequences corner_and_fg_sequences(const Workspace& ws, Direction dir);

/// Unbounded sequence diverging into the quadrant: far hole corners of an
/// adjacent obstruction when there is one, otherwise corners of the nested
/// copies containing the root.
SequenceRep diagonal_sequence(const Workspace& ws, DiagonalDirection quad);
SequenceRep diagonal_sequence_from_copies(const Workspace& ws, DiagonalDirection quad);
/// Limit of φ_v along any diagonal sequence in quad (a linear form in v).
std::int64_t diagonal_phi_limit(DiagonalDirection quad, Coord v);
/// Indices whose point lies at least `radius` deep in both coordinates, so
/// that every probe of ball(root, radius) sits in its bounding box.
std::vector<int> dominating_indices(const SequenceRep& s, std::int64_t radius);

struct HoleHit {
  Hole hole;            // relative coordinates
  std::int64_t step;    // ray parameter of the first missing vertex
};

struct AxisRay {
  std::int64_t k = 0;
  std::int64_t start = 0;        // first step along the line that is a vertex
  std::int64_t length = 0;       // steps walked inside the built square
  std::vector<HoleHit> hits;     // in order along the ray
  int max_hole_level = 0;        // 0 when no hole is hit
  std::vector<std::int64_t> recurring_steps;  // steps of the hits at max level
};

struct AxisRayReport {
  Direction dir = Direction::d7;
  int built_level = 0;
  std::vector<std::int64_t> busemann_ks;     // ray contained up to the built level
  std::vector<std::int64_t> nonbusemann_ks;  // max-size holes recur
  std::vector<std::int64_t> undecided_ks;
  std::vector<AxisRay> rays;
};

/// Traces straight rays k*across + s*along for |k| <= k_window, each from the
/// first s >= 0 that is a vertex.
/// Requires growth but no obstruction in dir.
AxisRayReport axis_ray_families(const Workspace& ws, Direction dir, std::int64_t k_window);
/// Points on the far side of the recurring maximal holes of one ray, at the ray's offset.
SequenceRep axis_ray_sequence(const AxisRay& ray, Direction dir);
/// Straight-ray points v_k + s*along for the given steps.
SequenceRep straight_ray_sequence(Direction dir, std::int64_t k, const std::vector<std::int64_t>& steps);

/// Named sequence: `direction` is an axis name for obstruction families and
/// axis rays, a quadrant name for diagonal sequences; `k` is the shift or
/// axis offset where the family takes one.
SequenceRep make_sequence(const Workspace& ws, SequenceFamily family, std::string_view direction,
                          std::int64_t k = 0);

enum class Verdict { Equal, Distinct, Undecided };
std::string to_string(Verdict v);

struct ProbeRow {
  Coord probe;
  std::vector<std::int64_t> phi1, phi2;
};

struct Distinction {
  Verdict verdict = Verdict::Undecided;
  std::optional<Coord> witness;
  std::vector<int> levels1, levels2;
  std::vector<ProbeRow> rows;
};

/// φ-table comparison over the last `tail` indices of each sequence, for all
/// probes within probe_radius of the root. A value is stabilised when it is
/// constant over those indices.
Distinction distinguish(const Workspace& ws, const SequenceRep& s1, const SequenceRep& s2,
                        std::int64_t probe_radius, std::size_t tail = 3);

/// φ_v(p) for every probe row, p over the chosen indices.
std::vector<ProbeRow> phi_table(const Workspace& ws, const SequenceRep& s,
                                std::span<const Coord> probes, std::span<const int> levels);

/// Whether geodesics from v1 and from v2 to s_m share only the endpoint, for each m.
bool certify_witness(const Workspace& ws, const SequenceRep& s, Coord v1, Coord v2,
                     std::span<const int> levels);

/// Searches pairs in the ball of search_radius; first pair in probe order wins.
std::optional<std::pair<Coord, Coord>> nonbusemann_witness(const Workspace& ws,
                                                           const SequenceRep& s,
                                                           std::int64_t search_radius,
                                                           std::size_t tail = 2);

/// The first check of the antipodal construction: both constrained distances
/// equal the BFS distance at every emitted index.
bool antipodal_equalities_hold(const Workspace& ws, Direction dir, const SequenceRep& z);

// --- catalog ------------------------------------------------------------

enum class BoundaryLabel { zeta, beta, xi, eta };
enum class PointKind { Busemann, NonBusemann };
enum class IndexSetKind { singleton, all_of_Z, infinite_subset_of_Z };
enum class IndexSide { left, right, bi };

std::string to_string(BoundaryLabel l);
std::string to_string(PointKind k);

struct IndexSet {
  IndexSetKind kind = IndexSetKind::singleton;
  std::optional<IndexSide> side;  // only for infinite_subset_of_Z
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};
std::string to_string(const IndexSet& s);

struct BoundaryPointFamily {
  BoundaryLabel label = BoundaryLabel::zeta;
  std::variant<Direction, DiagonalDirection> direction;
  PointKind kind = PointKind::NonBusemann;
  IndexSet index_set;

  std::string direction_name() const;
  friend bool operator==(const BoundaryPointFamily&, const BoundaryPointFamily&) = default;
};

struct Evidence {
  std::string family;  // e.g. "zeta(d7)"
  std::string check;
  bool pass = false;
  int built_level = 0;
  std::vector<int> levels;
  std::string detail;
};

struct BoundaryCatalog {
  WordSpec word;
  DirectionProfile profile;
  std::vector<BoundaryPointFamily> families;  // sorted: zeta, beta, xi, eta; then direction
  std::vector<Evidence> evidence;
};

BoundaryCatalog catalog(const WordSpec& w);
/// Numeric checks backing each family, computed on the workspace's level.
std::vector<Evidence> catalog_evidence(const Workspace& ws, const BoundaryCatalog& c);

/// Relabels directions by the odd-letter action of σ (index sides flip for reflections).
BoundaryCatalog relabel(const BoundaryCatalog& c, const Symmetry& sigma);
/// Same family structure up to one of the 8 symmetries of the direction square.
bool catalogs_isomorphic(const BoundaryCatalog& a, const BoundaryCatalog& b);

// --- measure -----------------------------------------------------------

struct MeasureResult {
  std::size_t samples = 0;
  std::size_t prefix_len = 0;
  std::uint64_t seed = 0;
  double fraction_all_letters = 0.0;
  std::array<std::size_t, 9> histogram{};  // by number of distinct letters
};

/// Uniform i.i.d. prefixes; deterministic for a seed regardless of `workers`.
MeasureResult sample_measure(std::size_t n_samples, std::size_t prefix_len, std::uint64_t seed,
                             unsigned workers = 0);

/// Random eventually periodic word: prefix length and cycle length drawn
/// uniformly from [0, max_prefix] and [1, max_cycle].
WordSpec random_word(std::uint64_t seed, std::size_t max_prefix = 4, std::size_t max_cycle = 4);

}  // namespace carpet
