#include "carpet/boundary.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace carpet {

namespace {

int wrap8(int i) { return ((i % 8) + 8) % 8; }

}  // namespace

DirectionProfile classify_directions(const WordSpec& w) {
  const LetterProfile n = letter_profile(w);
  DirectionProfile p;
  for (Direction d : kDirections) {
    const int i = index(d);
    const auto s = static_cast<std::size_t>(slot(d));
    p.obstruction[s] = n.infinite(i);
    bool grows = n.infinite(wrap8(i - 1)) || n.infinite(i) || n.infinite(wrap8(i + 1));
    for (int h = 1; h < 8; h += 2) {
      if (h != wrap8(i + 4) && n.infinite(h)) grows = true;
    }
    p.growth[s] = grows;
  }
  for (DiagonalDirection q : kDiagonals) {
    const int i = index(bounding_directions(q).first);
    p.diagonal[static_cast<std::size_t>(slot(q))] =
        n.infinite(i) || n.infinite(wrap8(i + 1)) || n.infinite(wrap8(i + 2));
  }
  return p;
}

std::vector<int> obstruction_levels(const WordSpec& w, Direction dir, int max_level) {
  if (!classify_directions(w).obstructed(dir)) {
    throw PreconditionError("no obstruction in direction " + to_string(dir) + " for " + to_string(w));
  }
  std::vector<int> m_set;
  for (int m = 1; m <= max_level; ++m) {
    if (w.letter(static_cast<std::size_t>(m)) == letter_of(dir)) m_set.push_back(m);
  }
  if (m_set.empty()) {
    throw PreconditionError("no obstruction level up to " + std::to_string(max_level) + " in direction " +
                            to_string(dir));
  }
  return m_set;
}

Hole hole_corners_relative(const WordSpec& w, int m) {
  if (m < 1) throw std::invalid_argument("obstruction levels start at 1");
  const Coord root = root_coordinate(w, m + 1);
  return central_hole(m + 1).translated(Coord{} - root);
}

FrameCorners frame_corners(const Hole& h, Direction dir) {
  const DirectionFrame f(dir);
  std::array<Coord, 4> c{h.A, h.B, h.C, h.D};
  std::sort(c.begin(), c.end(), [&](Coord a, Coord b) {
    if (f.along_of(a) != f.along_of(b)) return f.along_of(a) > f.along_of(b);
    return f.across_of(a) < f.across_of(b);
  });
  return {c[0], c[1], c[2], c[3]};
}

Workspace::Workspace(WordSpec w, int level, const BuildOptions& opts)
    : word_(std::move(w)),
      carpet_(std::make_unique<FiniteCarpet>(build_level(word_, level, opts))),
      metric_(std::make_unique<Metric>(*carpet_)) {}

int auto_level(int m, int cap) { return std::min(std::max(m + 1, 4), cap); }

std::string to_string(SequenceFamily f) {
  switch (f) {
    case SequenceFamily::corner_B: return "corner-B";
    case SequenceFamily::corner_C: return "corner-C";
    case SequenceFamily::antipodal: return "antipodal";
    case SequenceFamily::shifted_antipodal: return "shifted-antipodal";
    case SequenceFamily::f_seq: return "f-seq";
    case SequenceFamily::g_seq: return "g-seq";
    case SequenceFamily::diagonal: return "diagonal";
    case SequenceFamily::axis_ray: return "axis-ray";
  }
  return "?";
}

SequenceFamily parse_family(std::string_view text) {
  for (auto f : {SequenceFamily::corner_B, SequenceFamily::corner_C, SequenceFamily::antipodal,
                 SequenceFamily::shifted_antipodal, SequenceFamily::f_seq, SequenceFamily::g_seq,
                 SequenceFamily::diagonal, SequenceFamily::axis_ray}) {
    if (text == to_string(f)) return f;
  }
  if (text == "B") return SequenceFamily::corner_B;
  if (text == "C") return SequenceFamily::corner_C;
  if (text == "z") return SequenceFamily::antipodal;
  if (text == "f") return SequenceFamily::f_seq;
  if (text == "g") return SequenceFamily::g_seq;
  throw std::invalid_argument("unknown sequence family \"" + std::string(text) + "\"");
}

std::vector<int> SequenceRep::levels() const {
  std::vector<int> out;
  for (const auto& [m, p] : points) out.push_back(m);
  return out;
}

std::vector<Coord> SequenceRep::ordered_points() const {
  std::vector<Coord> out;
  for (const auto& [m, p] : points) out.push_back(p);
  return out;
}

std::string SequenceRep::direction_name() const {
  return std::visit([](auto d) { return to_string(d); }, direction);
}

namespace {

/// Obstruction levels whose hole fits inside the built carpet.
std::vector<int> usable_levels(const Workspace& ws, Direction dir) {
  try {
    return obstruction_levels(ws.word(), dir, ws.level() - 1);
  } catch (const PreconditionError&) {
    if (!classify_directions(ws.word()).obstructed(dir)) throw;
    return {};
  }
}

SequenceRep empty_rep(SequenceFamily fam, Direction dir, std::int64_t k = 0) {
  SequenceRep s;
  s.family = fam;
  s.direction = dir;
  s.k = k;
  return s;
}

}  // namespace

std::vector<int> deep_levels(const Workspace& ws, Direction dir, std::int64_t margin) {
  const DirectionFrame f(dir);
  std::vector<int> out;
  for (int m : usable_levels(ws, dir)) {
    const FrameCorners c = frame_corners(hole_corners_relative(ws.word(), m), dir);
    if (-f.across_of(c.far_minus) >= margin && f.across_of(c.far_plus) >= margin) out.push_back(m);
  }
  return out;
}

SequenceRep antipodal_sequence(const Workspace& ws, Direction dir) {
  const DirectionFrame f(dir);
  const Metric& metric = ws.metric();
  auto from_root = metric.bfs({0, 0});
  SequenceRep s = empty_rep(SequenceFamily::antipodal, dir);
  for (int m : usable_levels(ws, dir)) {
    const Hole h = hole_corners_relative(ws.word(), m);
    const FrameCorners c = frame_corners(h, dir);
    const std::int64_t qb = f.across_of(c.far_minus);
    const std::int64_t qc = f.across_of(c.far_plus);
    if (qb > 0 || qc < 0) {
      s.dropped.emplace_back(m, "root outside the transverse span of the hole");
      continue;
    }
    const std::int64_t db = from_root->at(c.far_minus);
    const std::int64_t dc = from_root->at(c.far_plus);
    const std::int64_t twice = dc - db + qc + qb;
    if (twice % 2 != 0) {
      s.dropped.emplace_back(m, "no balanced vertex on the far side");
      continue;
    }
    const std::int64_t qz = twice / 2;
    if (qz < qb || qz > qc) {
      s.dropped.emplace_back(m, "balanced point leaves the far side");
      continue;
    }
    const Coord z = c.far_minus + (qz - qb) * f.across;
    const std::int64_t d = from_root->at(z);
    if (metric.constrained_distance({0, 0}, z, c.far_minus) != d ||
        metric.constrained_distance({0, 0}, z, c.far_plus) != d) {
      s.dropped.emplace_back(m, "constrained distances differ from the distance");
      continue;
    }
    s.points.emplace(m, z);
  }
  if (s.points.empty()) {
    throw PreconditionError("no valid antipodal level in direction " + to_string(dir) + " up to " +
                            std::to_string(ws.level() - 1));
  }
  return s;
}

SequenceRep shifted_antipodal(const Workspace& ws, Direction dir, std::int64_t k) {
  const SequenceRep z = antipodal_sequence(ws, dir);
  const DirectionFrame f(dir);
  SequenceRep s = empty_rep(SequenceFamily::shifted_antipodal, dir, k);
  s.dropped = z.dropped;
  for (const auto& [m, p] : z.points) {
    const FrameCorners c = frame_corners(hole_corners_relative(ws.word(), m), dir);
    const Coord q = p + k * f.across;
    if (f.across_of(q) < f.across_of(c.far_minus) || f.across_of(q) > f.across_of(c.far_plus)) {
      s.dropped.emplace_back(m, "shifted point leaves the far side");
      continue;
    }
    s.points.emplace(m, q);
  }
  if (s.points.empty()) throw PreconditionError("no level keeps the shifted point on the far side");
  return s;
}

CornerSequences corner_and_fg_sequences(const Workspace& ws, Direction dir) {
  const DirectionFrame f(dir);
  CornerSequences out{empty_rep(SequenceFamily::corner_B, dir), empty_rep(SequenceFamily::corner_C, dir),
                      empty_rep(SequenceFamily::f_seq, dir), empty_rep(SequenceFamily::g_seq, dir)};
  for (int m : usable_levels(ws, dir)) {
    const Hole h = hole_corners_relative(ws.word(), m);
    const FrameCorners c = frame_corners(h, dir);
    out.B.points.emplace(m, c.far_minus);
    out.C.points.emplace(m, c.far_plus);
    const std::int64_t side = h.side_length();
    if (side % 3 != 0) {
      out.f.dropped.emplace_back(m, "side not divisible into thirds");
      out.g.dropped.emplace_back(m, "side not divisible into thirds");
      continue;
    }
    out.f.points.emplace(m, c.far_minus + (2 * side / 3) * f.across);
    out.g.points.emplace(m, c.far_minus + (side / 3) * f.across);
  }
  return out;
}

std::int64_t diagonal_phi_limit(DiagonalDirection quad, Coord v) {
  const auto [lo, hi] = bounding_directions(quad);
  const Coord sign = unit_vector(lo) + unit_vector(hi);
  return dot(sign, v);
}

std::vector<int> dominating_indices(const SequenceRep& s, std::int64_t radius) {
  std::vector<int> out;
  for (const auto& [m, p] : s.points) {
    if (std::min(std::abs(p.x), std::abs(p.y)) >= radius) out.push_back(m);
  }
  return out;
}

SequenceRep diagonal_sequence_from_copies(const Workspace& ws, DiagonalDirection quad) {
  const auto [lo, hi] = bounding_directions(quad);
  const Coord sign = unit_vector(lo) + unit_vector(hi);
  SequenceRep s;
  s.family = SequenceFamily::diagonal;
  s.direction = quad;
  std::int64_t best = 0;
  for (int n = 2; n <= ws.level(); ++n) {
    const std::int64_t side = pow3(n - 1);
    const Coord r = root_coordinate(ws.word(), n);
    const Coord corner{(sign.x > 0 ? side : 0) - r.x, (sign.y > 0 ? side : 0) - r.y};
    const std::int64_t reach = std::min(sign.x * corner.x, sign.y * corner.y);
    if (reach <= best) {
      s.dropped.emplace_back(n, "copy corner does not advance into the quadrant");
      continue;
    }
    best = reach;
    s.points.emplace(n, corner);
  }
  return s;
}

SequenceRep diagonal_sequence(const Workspace& ws, DiagonalDirection quad) {
  const DirectionProfile profile = classify_directions(ws.word());
  if (!profile.grows(quad)) {
    throw PreconditionError("no diagonal growth in " + to_string(quad) + " for " + to_string(ws.word()));
  }
  const auto [lo, hi] = bounding_directions(quad);
  std::optional<std::pair<Direction, bool>> source;  // direction, use far-plus corner
  if (profile.obstructed(lo)) {
    source = {lo, true};
  } else if (profile.obstructed(hi)) {
    source = {hi, false};
  }
  if (!source || usable_levels(ws, source->first).empty()) return diagonal_sequence_from_copies(ws, quad);

  SequenceRep s;
  s.family = SequenceFamily::diagonal;
  s.direction = quad;
  const Coord sign = unit_vector(lo) + unit_vector(hi);
  for (int m : usable_levels(ws, source->first)) {
    const FrameCorners c = frame_corners(hole_corners_relative(ws.word(), m), source->first);
    const Coord p = source->second ? c.far_plus : c.far_minus;
    if (sign.x * p.x <= 0 || sign.y * p.y <= 0) {
      s.dropped.emplace_back(m, "corner not inside the open quadrant");
      continue;
    }
    s.points.emplace(m, p);
  }
  return s;
}

// --- axis rays ---------------------------------------------------------

AxisRayReport axis_ray_families(const Workspace& ws, Direction dir, std::int64_t k_window) {
  const DirectionProfile profile = classify_directions(ws.word());
  if (!profile.grows(dir) || profile.obstructed(dir)) {
    throw PreconditionError("axis rays need growth without obstruction in " + to_string(dir));
  }
  const FiniteCarpet& g = ws.carpet();
  const DirectionFrame f(dir);
  AxisRayReport report;
  report.dir = dir;
  report.built_level = ws.level();
  for (std::int64_t k = -k_window; k <= k_window; ++k) {
    const Coord start = k * f.across;
    if (!g.in_range(g.to_absolute(start))) continue;
    std::int64_t s0 = 0;
    while (g.in_range(g.to_absolute(start + s0 * f.along)) && !g.contains(g.to_absolute(start + s0 * f.along))) ++s0;
    if (!g.in_range(g.to_absolute(start + s0 * f.along))) continue;
    AxisRay ray;
    ray.k = k;
    ray.start = s0;
    std::optional<Hole> current;
    for (std::int64_t s = s0;; ++s) {
      const Coord abs = g.to_absolute(start + s * f.along);
      if (!g.in_range(abs)) break;
      ray.length = s;
      if (g.contains(abs)) {
        current.reset();
        continue;
      }
      auto h = hole_containing(g, abs);
      if (!h) throw std::logic_error("lattice point outside every hole and the vertex set");
      if (!current || !(*current == *h)) {
        ray.hits.push_back({h->translated(Coord{} - g.root_abs()), s});
        current = h;
      }
    }
    for (const HoleHit& hit : ray.hits) ray.max_hole_level = std::max(ray.max_hole_level, hit.hole.level);
    for (const HoleHit& hit : ray.hits) {
      if (hit.hole.level == ray.max_hole_level) ray.recurring_steps.push_back(hit.step);
    }
    if (ray.hits.empty()) {
      report.busemann_ks.push_back(k);
    } else if (ray.recurring_steps.size() >= 2) {
      report.nonbusemann_ks.push_back(k);
    } else {
      report.undecided_ks.push_back(k);
    }
    report.rays.push_back(std::move(ray));
  }
  return report;
}

SequenceRep axis_ray_sequence(const AxisRay& ray, Direction dir) {
  const DirectionFrame f(dir);
  SequenceRep s;
  s.family = SequenceFamily::axis_ray;
  s.direction = dir;
  s.k = ray.k;
  int t = 0;
  for (const HoleHit& hit : ray.hits) {
    if (hit.hole.level != ray.max_hole_level) continue;
    const FrameCorners c = frame_corners(hit.hole, dir);
    s.points.emplace(++t, f.along_of(c.far_minus) * f.along + ray.k * f.across);
  }
  return s;
}

SequenceRep straight_ray_sequence(Direction dir, std::int64_t k, const std::vector<std::int64_t>& steps) {
  const DirectionFrame f(dir);
  SequenceRep s;
  s.family = SequenceFamily::axis_ray;
  s.direction = dir;
  s.k = k;
  int t = 0;
  for (std::int64_t step : steps) s.points.emplace(++t, step * f.along + k * f.across);
  return s;
}

SequenceRep make_sequence(const Workspace& ws, SequenceFamily family, std::string_view direction,
                          std::int64_t k) {
  if (family == SequenceFamily::diagonal) return diagonal_sequence(ws, parse_diagonal(direction));
  const Direction dir = parse_direction(direction);
  switch (family) {
    case SequenceFamily::antipodal: return antipodal_sequence(ws, dir);
    case SequenceFamily::shifted_antipodal: return shifted_antipodal(ws, dir, k);
    case SequenceFamily::corner_B: return corner_and_fg_sequences(ws, dir).B;
    case SequenceFamily::corner_C: return corner_and_fg_sequences(ws, dir).C;
    case SequenceFamily::f_seq: return corner_and_fg_sequences(ws, dir).f;
    case SequenceFamily::g_seq: return corner_and_fg_sequences(ws, dir).g;
    case SequenceFamily::axis_ray: {
      const AxisRayReport r = axis_ray_families(ws, dir, std::abs(k));
      for (const AxisRay& ray : r.rays) {
        if (ray.k == k) return axis_ray_sequence(ray, dir);
      }
      throw PreconditionError("offset " + std::to_string(k) + " is not on the axis");
    }
    case SequenceFamily::diagonal: break;
  }
  throw std::logic_error("unhandled sequence family");
}

// --- distinguishing ----------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

namespace {

std::vector<int> tail_levels(const SequenceRep& s, std::size_t tail) {
  auto lv = s.levels();
  if (lv.size() < tail) {
    throw PreconditionError(to_string(s.family) + " sequence has " + std::to_string(lv.size()) +
                            " indices, fewer than the tail of " + std::to_string(tail));
  }
  return {lv.end() - static_cast<std::ptrdiff_t>(tail), lv.end()};
}

bool constant(const std::vector<std::int64_t>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace

std::vector<ProbeRow> phi_table(const Workspace& ws, const SequenceRep& s, std::span<const Coord> probes,
                                std::span<const int> levels) {
  const Metric& metric = ws.metric();
  std::vector<std::shared_ptr<const DistanceField>> fields;
  for (int m : levels) {
    auto it = s.points.find(m);
    if (it == s.points.end()) throw std::invalid_argument("sequence has no point at index " + std::to_string(m));
    fields.push_back(metric.bfs(it->second));
  }
  std::vector<ProbeRow> rows;
  for (Coord v : probes) {
    if (!metric.is_vertex(v)) throw NotAVertexError(v);
    ProbeRow row{v, {}, {}};
    for (const auto& fy : fields) row.phi1.push_back(fy->at({0, 0}) - fy->at(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

Distinction distinguish(const Workspace& ws, const SequenceRep& s1, const SequenceRep& s2,
                        std::int64_t probe_radius, std::size_t tail) {
  if (tail == 0) throw std::invalid_argument("tail must be >= 1");
  Distinction out;
  out.levels1 = tail_levels(s1, tail);
  out.levels2 = tail_levels(s2, tail);
  const auto probes = ws.metric().ball(probe_radius);
  auto t1 = phi_table(ws, s1, probes, out.levels1);
  auto t2 = phi_table(ws, s2, probes, out.levels2);
  bool all_stable = true;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    ProbeRow row{probes[i], std::move(t1[i].phi1), std::move(t2[i].phi1)};
    const bool stable = constant(row.phi1) && constant(row.phi2);
    if (stable && row.phi1.back() != row.phi2.back() && !out.witness) out.witness = row.probe;
    all_stable = all_stable && stable;
    out.rows.push_back(std::move(row));
  }
  if (out.witness) {
    out.verdict = Verdict::Distinct;
  } else if (all_stable) {
    out.verdict = Verdict::Equal;
  }
  return out;
}

// --- non-Busemann witnesses ---------------------------------------------

namespace {

/// Grid indices of the geodesic support minus the endpoint, sorted.
std::vector<std::size_t> support_indices(const Workspace& ws, Coord from, Coord to) {
  const FiniteCarpet& g = ws.carpet();
  std::vector<std::size_t> out;
  for (Coord p : ws.metric().geodesic_support(from, to)) {
    if (p != to) out.push_back(g.index_of(g.to_absolute(p)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

}  // namespace

bool certify_witness(const Workspace& ws, const SequenceRep& s, Coord v1, Coord v2,
                     std::span<const int> levels) {
  if (v1 == v2) return false;
  for (int m : levels) {
    auto it = s.points.find(m);
    if (it == s.points.end()) throw std::invalid_argument("sequence has no point at index " + std::to_string(m));
    if (!ws.metric().is_vertex(v1) || !ws.metric().is_vertex(v2)) return false;
    if (v1 == it->second || v2 == it->second) return false;
    if (!disjoint(support_indices(ws, v1, it->second), support_indices(ws, v2, it->second))) return false;
  }
  return true;
}

std::optional<std::pair<Coord, Coord>> nonbusemann_witness(const Workspace& ws, const SequenceRep& s,
                                                           std::int64_t search_radius, std::size_t tail) {
  const std::vector<int> levels = tail_levels(s, tail);
  const auto candidates = ws.metric().ball(search_radius);
  // supports[c][l]: support from candidate c to the l-th tail point
  std::vector<std::vector<std::vector<std::size_t>>> supports(candidates.size());
  std::vector<bool> usable(candidates.size(), true);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (int m : levels) {
      const Coord target = s.points.at(m);
      if (candidates[c] == target) usable[c] = false;
      supports[c].push_back(usable[c] ? support_indices(ws, candidates[c], target)
                                      : std::vector<std::size_t>{});
    }
  }
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    if (!usable[a]) continue;
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      if (!usable[b]) continue;
      bool ok = true;
      for (std::size_t l = 0; l < levels.size() && ok; ++l) ok = disjoint(supports[a][l], supports[b][l]);
      if (ok) return std::make_pair(candidates[a], candidates[b]);
    }
  }
  return std::nullopt;
}

bool antipodal_equalities_hold(const Workspace& ws, Direction dir, const SequenceRep& z) {
  const Metric& metric = ws.metric();
  for (const auto& [m, p] : z.points) {
    const FrameCorners c = frame_corners(hole_corners_relative(ws.word(), m), dir);
    const std::int64_t d = metric.distance({0, 0}, p);
    if (metric.constrained_distance({0, 0}, p, c.far_minus) != d) return false;
    if (metric.constrained_distance({0, 0}, p, c.far_plus) != d) return false;
  }
  return true;
}

}  // namespace carpet
