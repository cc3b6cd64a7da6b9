#include "carpet/metric.hpp"

#include <algorithm>
#include <cmath>

namespace carpet {

std::int64_t DistanceField::at(Coord rel) const {
  const Coord abs = rel + root_abs_;
  if (abs.x < 0 || abs.y < 0 || abs.x >= width_ || abs.y >= width_) return -1;
  return dist_[static_cast<std::size_t>(abs.y * width_ + abs.x)];
}

Metric::Metric(const FiniteCarpet& g, std::size_t cache_budget)
    : g_(&g), budget_(std::max<std::size_t>(cache_budget, 1)) {}

void Metric::require_vertex(Coord rel) const {
  if (!is_vertex(rel)) throw NotAVertexError(rel);
}

std::shared_ptr<const DistanceField> Metric::bfs(Coord source) const {
  require_vertex(source);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(source);
    if (it != cache_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second.second);
      return it->second.first;
    }
  }

  auto field = std::make_shared<DistanceField>();
  field->source_ = source;
  field->root_abs_ = g_->root_abs();
  field->width_ = g_->side() + 1;
  field->dist_.assign(g_->grid_size(), -1);
  const Coord start = g_->to_absolute(source);
  std::vector<Coord> queue{start};
  queue.reserve(g_->vertex_count());
  field->dist_[g_->index_of(start)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Coord v = queue[head];
    const std::int32_t dv = field->dist_[g_->index_of(v)];
    g_->for_each_neighbor(v, [&](Coord u) {
      auto& du = field->dist_[g_->index_of(u)];
      if (du < 0) {
        du = dv + 1;
        queue.push_back(u);
      }
    });
  }
  field->eccentricity_ = field->dist_[g_->index_of(queue.back())];

  std::lock_guard lock(mutex_);
  auto it = cache_.find(source);
  if (it != cache_.end()) return it->second.first;  // another thread won
  lru_.push_front(source);
  cache_.emplace(source, std::make_pair(std::shared_ptr<const DistanceField>(field), lru_.begin()));
  while (cache_.size() > budget_) {
    cache_.erase(lru_.back());
    lru_.pop_back();
  }
  return field;
}

std::size_t Metric::cached_fields() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::int64_t Metric::distance(Coord u, Coord v) const {
  require_vertex(v);
  return bfs(u)->at(v);
}

std::int64_t Metric::phi(Coord base, Coord v, Coord y) const {
  require_vertex(base);
  require_vertex(v);
  require_vertex(y);
  auto from_y = bfs(y);
  return from_y->at(base) - from_y->at(v);
}

std::int64_t Metric::constrained_distance(Coord u, Coord v, Coord via) const {
  require_vertex(u);
  require_vertex(v);
  auto from_via = bfs(via);
  return from_via->at(u) + from_via->at(v);
}

std::vector<Coord> Metric::geodesic_support(Coord u, Coord v) const {
  auto du = bfs(u);
  auto dv = bfs(v);
  const std::int64_t total = du->at(v);
  std::vector<Coord> out;
  for (std::size_t idx = 0; idx < g_->grid_size(); ++idx) {
    const Coord rel = g_->to_relative(g_->coord_of(idx));
    const std::int64_t a = du->at(rel);
    if (a < 0 || a > total) continue;
    if (a + dv->at(rel) == total) out.push_back(rel);
  }
  return out;
}

std::vector<Coord> Metric::ball(std::int64_t r) const {
  auto field = bfs({0, 0});
  std::vector<std::pair<std::int64_t, Coord>> tagged;
  for (std::size_t idx = 0; idx < g_->grid_size(); ++idx) {
    const Coord rel = g_->to_relative(g_->coord_of(idx));
    const std::int64_t d = field->at(rel);
    if (d >= 0 && d <= r) tagged.emplace_back(d, rel);
  }
  std::sort(tagged.begin(), tagged.end());
  std::vector<Coord> out;
  out.reserve(tagged.size());
  for (auto& [d, c] : tagged) out.push_back(c);
  return out;
}

RaySample ray_from_points(const Metric& metric, std::span<const Coord> points) {
  RaySample ray;
  ray.points.emplace_back(0, Coord{0, 0});
  auto from_root = metric.bfs({0, 0});
  for (Coord p : points) {
    const std::int64_t t = from_root->at(p);
    if (t < 0) throw NotAVertexError(p);
    ray.points.emplace_back(t, p);
  }
  return ray;
}

namespace {

void validate(const RaySample& ray) {
  if (ray.points.empty() || ray.points.front().first != 0) {
    throw std::invalid_argument("ray sample must start at t = 0");
  }
  for (std::size_t i = 1; i < ray.points.size(); ++i) {
    if (ray.points[i].first <= ray.points[i - 1].first) {
      throw std::invalid_argument("ray sample t-values must be strictly increasing");
    }
  }
}

std::size_t resolve_tail(const RaySample& ray, const RayCheckOptions& opts) {
  const std::size_t start = opts.tail_start.value_or(ray.points.size() / 3);
  return std::min(start, ray.points.size());
}

}  // namespace

RayCheck check_weakly_geodesic(const Metric& metric, const RaySample& ray,
                               std::span<const Coord> probes, const RayCheckOptions& opts) {
  validate(ray);
  if (probes.empty()) throw std::invalid_argument("weakly-geodesic check needs probes");
  RayCheck out;
  out.tail_start = resolve_tail(ray, opts);
  out.per_point.assign(ray.points.size(), 0);

  const Coord origin = ray.points.front().second;
  std::vector<std::shared_ptr<const DistanceField>> probe_fields;
  for (Coord y : probes) probe_fields.push_back(metric.bfs(y));

  for (std::size_t i = out.tail_start; i < ray.points.size(); ++i) {
    const auto [t, pt] = ray.points[i];
    std::int64_t worst = std::abs(metric.distance(pt, origin) - t);
    for (std::size_t j = out.tail_start; j < i; ++j) {
      const auto [s, ps] = ray.points[j];
      for (const auto& fy : probe_fields) {
        worst = std::max(worst, std::abs(fy->at(pt) - fy->at(ps) - (t - s)));
      }
    }
    out.per_point[i] = worst;
    out.worst_violation = std::max(out.worst_violation, worst);
  }
  out.pass = static_cast<double>(out.worst_violation) < opts.epsilon;
  return out;
}

RayCheck check_almost_geodesic(const Metric& metric, const RaySample& ray,
                               const RayCheckOptions& opts) {
  validate(ray);
  RayCheck out;
  out.tail_start = resolve_tail(ray, opts);
  out.per_point.assign(ray.points.size(), 0);

  const Coord origin = ray.points.front().second;
  for (std::size_t i = out.tail_start; i < ray.points.size(); ++i) {
    const auto [t, pt] = ray.points[i];
    auto from_t = metric.bfs(pt);
    std::int64_t worst = 0;
    for (std::size_t j = out.tail_start; j <= i; ++j) {
      const Coord ps = ray.points[j].second;
      worst = std::max(worst, std::abs(from_t->at(ps) + metric.distance(ps, origin) - t));
    }
    out.per_point[i] = worst;
    out.worst_violation = std::max(out.worst_violation, worst);
  }
  out.pass = static_cast<double>(out.worst_violation) < opts.epsilon;
  return out;
}

bool check_geodesic_chain(const Metric& metric, std::span<const Coord> points) {
  auto from_root = metric.bfs({0, 0});
  for (std::size_t m = 0; m < points.size(); ++m) {
    auto from_m = metric.bfs(points[m]);
    for (std::size_t k = 0; k < m; ++k) {
      if (from_root->at(points[m]) != from_root->at(points[k]) + from_m->at(points[k])) return false;
    }
  }
  return true;
}

}  // namespace carpet
