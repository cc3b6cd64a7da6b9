#pragma once

#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "carpet/builder.hpp"

namespace carpet {

class NotAVertexError : public std::invalid_argument {
 public:
  explicit NotAVertexError(Coord rel)
      : std::invalid_argument("not a vertex of the carpet: " + to_string(rel)) {}
};

/// Exact geodesic distances from one source. Coordinates are relative to the
/// carpet root.
class DistanceField {
 public:
  Coord source() const { return source_; }
  /// -1 for points that are not vertices.
  std::int64_t at(Coord rel) const;
  std::int64_t eccentricity() const { return eccentricity_; }

 private:
  friend class Metric;
  Coord source_;
  Coord root_abs_;
  std::int64_t width_ = 0;
  std::int64_t eccentricity_ = 0;
  std::vector<std::int32_t> dist_;
};

/// Distance queries on one built carpet, in root-relative coordinates.
///
/// BFS fields are cached per source (LRU, `cache_budget` fields); the cache is
/// internally synchronized so a Metric may be shared between threads.
class Metric {
 public:
  explicit Metric(const FiniteCarpet& g, std::size_t cache_budget = 64);

  const FiniteCarpet& carpet() const { return *g_; }
  bool is_vertex(Coord rel) const { return g_->contains(g_->to_absolute(rel)); }

  std::shared_ptr<const DistanceField> bfs(Coord source) const;
  std::int64_t distance(Coord u, Coord v) const;
  /// d(y, base) - d(y, v)
  std::int64_t phi(Coord base, Coord v, Coord y) const;
  /// d(u, via) + d(via, v)
  std::int64_t constrained_distance(Coord u, Coord v, Coord via) const;
  /// Union of all geodesics from u to v, row-major.
  std::vector<Coord> geodesic_support(Coord u, Coord v) const;
  /// Vertices within distance r of the root, ordered by distance then row-major.
  std::vector<Coord> ball(std::int64_t r) const;

  std::size_t cached_fields() const;

 private:
  void require_vertex(Coord rel) const;

  const FiniteCarpet* g_;
  std::size_t budget_;
  mutable std::mutex mutex_;
  mutable std::list<Coord> lru_;
  mutable std::unordered_map<Coord, std::pair<std::shared_ptr<const DistanceField>,
                                              std::list<Coord>::iterator>,
                             CoordHash>
      cache_;
};

/// A sampled ray γ: T -> X, stored as (t, γ(t)) with strictly increasing t from 0.
struct RaySample {
  std::vector<std::pair<std::int64_t, Coord>> points;
};

/// Parametrizes a point sequence by distance from the root, prepending the root at t = 0.
RaySample ray_from_points(const Metric& metric, std::span<const Coord> points);

struct RayCheckOptions {
  double epsilon = 0.5;
  /// Index into the sample where the tail starts; default drops the first third.
  std::optional<std::size_t> tail_start;
};

struct RayCheck {
  bool pass = true;
  std::int64_t worst_violation = 0;
  std::size_t tail_start = 0;
  /// Violation attributed to each sample point (0 before the tail).
  std::vector<std::int64_t> per_point;
};

RayCheck check_weakly_geodesic(const Metric& metric, const RaySample& ray,
                               std::span<const Coord> probes, const RayCheckOptions& opts = {});
RayCheck check_almost_geodesic(const Metric& metric, const RaySample& ray,
                               const RayCheckOptions& opts = {});

/// d(root, p_m) = d(root, p_k) + d(p_k, p_m) for every k < m.
bool check_geodesic_chain(const Metric& metric, std::span<const Coord> points);

}  // namespace carpet
