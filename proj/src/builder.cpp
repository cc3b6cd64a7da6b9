#include "carpet/builder.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace carpet {

std::int64_t pow3(int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

std::int64_t pow8(int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 8;
  return r;
}

std::int64_t expected_vertex_count(int n) {
  // common denominator 210: 11/70 = 33/210, 8/15 = 112/210, 8/7 = 240/210
  const std::int64_t numer = 33 * pow8(n) + 112 * pow3(n) + 240;
  return numer / 210;
}

Coord position_offset(Letter p) {
  static constexpr std::array<Coord, 8> table{Coord{0, 0}, Coord{1, 0}, Coord{2, 0}, Coord{2, 1},
                                              Coord{2, 2}, Coord{1, 2}, Coord{0, 2}, Coord{0, 1}};
  return table[static_cast<std::size_t>(p.value())];
}

Coord root_base(RootLetter y) {
  switch (y) {
    case RootLetter::a: return {0, 0};
    case RootLetter::b: return {1, 0};
    case RootLetter::c: return {1, 1};
    case RootLetter::d: return {0, 1};
  }
  return {};
}

bool cell_included(std::int64_t i, std::int64_t j, int n) {
  const std::int64_t side = pow3(n - 1);
  if (n < 1 || i < 0 || j < 0 || i >= side || j >= side) {
    throw std::out_of_range("cell (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside level " + std::to_string(n));
  }
  for (int t = 0; t < n - 1; ++t) {
    if (i % 3 == 1 && j % 3 == 1) return false;
    i /= 3;
    j /= 3;
  }
  return true;
}

Coord root_coordinate(const WordSpec& w, int n) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  Coord r = root_base(w.root);
  std::int64_t scale = 1;
  for (int i = 1; i < n; ++i) {
    r = r + scale * position_offset(w.letter(static_cast<std::size_t>(i)));
    scale *= 3;
  }
  return r;
}

std::vector<Coord> Hole::side(HoleSide s) const {
  Coord from, step;
  switch (s) {
    case HoleSide::s1: from = D; step = {1, 0}; break;
    case HoleSide::s3: from = A; step = {0, 1}; break;
    case HoleSide::s5: from = A; step = {1, 0}; break;
    case HoleSide::s7: from = B; step = {0, 1}; break;
  }
  std::vector<Coord> out;
  for (std::int64_t k = 0; k <= side_length(); ++k) out.push_back(from + k * step);
  return out;
}

std::vector<Coord> Hole::boundary() const {
  std::vector<Coord> out;
  for (auto s : {HoleSide::s1, HoleSide::s3, HoleSide::s5, HoleSide::s7}) {
    auto part = side(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Hole central_hole(int n) {
  if (n < 2) throw std::invalid_argument("Γ_1 has no hole");
  const std::int64_t s = pow3(n - 2);
  return {n, {s, s}, {2 * s, s}, {2 * s, 2 * s}, {s, 2 * s}};
}

namespace {

// Largest hole containing excluded cell (i,j) of a level-n square.
std::optional<Hole> hole_of_cell(std::int64_t i, std::int64_t j, int n) {
  int best = -1;
  std::int64_t a = i, b = j;
  for (int t = 0; t < n - 1; ++t) {
    if (a % 3 == 1 && b % 3 == 1) best = t;
    a /= 3;
    b /= 3;
  }
  if (best < 0) return std::nullopt;
  const std::int64_t s = pow3(best);
  const std::int64_t block = 3 * s;
  const Coord A{i - i % block + s, j - j % block + s};
  return Hole{best + 2, A, A + Coord{s, 0}, A + Coord{s, s}, A + Coord{0, s}};
}

}  // namespace

FiniteCarpet build_level(const WordSpec& w, int n, const BuildOptions& opts) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  if (n > opts.level_cap) {
    throw ResourceLimitError("level " + std::to_string(n) + " exceeds level cap " +
                             std::to_string(opts.level_cap));
  }
  FiniteCarpet g;
  g.level_ = n;
  g.side_ = pow3(n - 1);
  g.word_ = w;
  g.root_ = root_coordinate(w, n);

  const auto side = static_cast<std::size_t>(g.side_);
  g.cells_.assign(side * side, 0);
  for (std::size_t j = 0; j < side; ++j) {
    for (std::size_t i = 0; i < side; ++i) {
      g.cells_[j * side + i] =
          cell_included(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), n) ? 1 : 0;
    }
  }
  g.present_.assign(g.grid_size(), 0);
  for (std::size_t j = 0; j < side; ++j) {
    for (std::size_t i = 0; i < side; ++i) {
      if (!g.cells_[j * side + i]) continue;
      for (std::size_t dy = 0; dy < 2; ++dy) {
        for (std::size_t dx = 0; dx < 2; ++dx) g.present_[(j + dy) * (side + 1) + i + dx] = 1;
      }
    }
  }
  g.vertex_count_ = static_cast<std::size_t>(std::count(g.present_.begin(), g.present_.end(), 1));
  return g;
}

bool FiniteCarpet::cell(std::int64_t i, std::int64_t j) const {
  if (i < 0 || j < 0 || i >= side_ || j >= side_) return false;
  return cells_[static_cast<std::size_t>(j * side_ + i)] != 0;
}

bool FiniteCarpet::contains(Coord abs) const { return in_range(abs) && present_[index_of(abs)]; }

bool FiniteCarpet::has_edge(Coord a, Coord b) const {
  if (!in_range(a) || !in_range(b)) return false;
  if (b < a) std::swap(a, b);
  const Coord d = b - a;
  if (d == Coord{1, 0}) return cell(a.x, a.y - 1) || cell(a.x, a.y);
  if (d == Coord{0, 1}) return cell(a.x - 1, a.y) || cell(a.x, a.y);
  return false;
}

int FiniteCarpet::degree(Coord abs) const {
  int deg = 0;
  for_each_neighbor(abs, [&](Coord) { ++deg; });
  return deg;
}

std::size_t FiniteCarpet::edge_count() const {
  std::size_t count = 0;
  for (std::int64_t y = 0; y <= side_; ++y) {
    for (std::int64_t x = 0; x <= side_; ++x) {
      if (has_edge({x, y}, {x + 1, y})) ++count;
      if (has_edge({x, y}, {x, y + 1})) ++count;
    }
  }
  return count;
}

std::vector<Coord> FiniteCarpet::vertices() const {
  std::vector<Coord> out;
  out.reserve(vertex_count_);
  for (std::size_t idx = 0; idx < present_.size(); ++idx) {
    if (present_[idx]) out.push_back(coord_of(idx));
  }
  return out;
}

std::vector<std::pair<Coord, Coord>> FiniteCarpet::edges() const {
  std::vector<std::pair<Coord, Coord>> out;
  for (std::int64_t y = 0; y <= side_; ++y) {
    for (std::int64_t x = 0; x <= side_; ++x) {
      if (has_edge({x, y}, {x + 1, y})) out.push_back({{x, y}, {x + 1, y}});
      if (has_edge({x, y}, {x, y + 1})) out.push_back({{x, y}, {x, y + 1}});
    }
  }
  return out;
}

std::optional<Hole> hole_containing(const FiniteCarpet& g, Coord abs) {
  if (!g.in_range(abs) || g.contains(abs)) return std::nullopt;
  // A lattice point outside the vertex set has all four surrounding cells excluded.
  if (abs.x == 0 || abs.y == 0 || abs.x == g.side() || abs.y == g.side()) return std::nullopt;
  return hole_of_cell(abs.x, abs.y, g.level());
}

std::vector<Hole> enumerate_holes(const FiniteCarpet& g, int min_level) {
  if (min_level < 2) throw std::invalid_argument("hole levels start at 2");
  std::vector<Hole> out;
  for (std::int64_t j = 0; j < g.side(); ++j) {
    for (std::int64_t i = 0; i < g.side(); ++i) {
      if (g.cell(i, j)) continue;
      auto h = hole_of_cell(i, j, g.level());
      if (h && h->A == Coord{i, j} && h->level >= min_level) out.push_back(*h);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Hole& a, const Hole& b) { return a.level > b.level; });
  return out;
}

}  // namespace carpet
