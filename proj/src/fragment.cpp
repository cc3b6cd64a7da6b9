#include <algorithm>
#include <deque>
#include <map>

#include "carpet/builder.hpp"

namespace carpet {

int Fragment::index_of(Coord rel) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), rel);
  if (it == vertices.end() || *it != rel) return -1;
  return static_cast<int>(it - vertices.begin());
}

namespace {

Fragment fragment_from(const FiniteCarpet& g, std::vector<Coord> abs_vertices) {
  Fragment f;
  f.vertices.reserve(abs_vertices.size());
  for (Coord v : abs_vertices) f.vertices.push_back(g.to_relative(v));
  std::sort(f.vertices.begin(), f.vertices.end());
  for (std::size_t i = 0; i < f.vertices.size(); ++i) {
    const Coord v = g.to_absolute(f.vertices[i]);
    for (Coord step : {Coord{1, 0}, Coord{0, 1}}) {
      if (!g.has_edge(v, v + step)) continue;
      int j = f.index_of(f.vertices[i] + step);
      if (j >= 0) f.edges.emplace_back(static_cast<int>(i), j);
    }
  }
  std::sort(f.edges.begin(), f.edges.end());
  return f;
}

}  // namespace

Fragment rooted_ball(const FiniteCarpet& g, std::int64_t radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  std::vector<std::int64_t> dist(g.grid_size(), -1);
  std::vector<Coord> reached{g.root_abs()};
  dist[g.index_of(g.root_abs())] = 0;
  for (std::size_t head = 0; head < reached.size(); ++head) {
    const Coord v = reached[head];
    const std::int64_t dv = dist[g.index_of(v)];
    if (dv == radius) continue;
    g.for_each_neighbor(v, [&](Coord u) {
      auto& du = dist[g.index_of(u)];
      if (du < 0) {
        du = dv + 1;
        reached.push_back(u);
      }
    });
  }
  return fragment_from(g, std::move(reached));
}

Fragment whole_graph(const FiniteCarpet& g) { return fragment_from(g, g.vertices()); }

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency_of(const Fragment& f) {
  Adjacency adj(f.vertices.size());
  for (auto [a, b] : f.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool same_under(const Fragment& f1, const Fragment& f2, const LatticeSymmetry& s) {
  std::vector<Coord> moved;
  moved.reserve(f1.vertices.size());
  for (Coord v : f1.vertices) moved.push_back(s(v));
  std::sort(moved.begin(), moved.end());
  if (moved != f2.vertices) return false;
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(f1.edges.size());
  for (auto [a, b] : f1.edges) {
    int i = f2.index_of(s(f1.vertices[static_cast<std::size_t>(a)]));
    int j = f2.index_of(s(f1.vertices[static_cast<std::size_t>(b)]));
    mapped.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == f2.edges;
}

// Joint colour refinement of two graphs with individualized roots.
std::pair<std::vector<int>, std::vector<int>> refine(const Adjacency& g1, int r1,
                                                     const Adjacency& g2, int r2) {
  std::vector<int> c1(g1.size()), c2(g2.size());
  for (std::size_t v = 0; v < g1.size(); ++v) c1[v] = static_cast<int>(g1[v].size()) * 2 + (static_cast<int>(v) == r1);
  for (std::size_t v = 0; v < g2.size(); ++v) c2[v] = static_cast<int>(g2[v].size()) * 2 + (static_cast<int>(v) == r2);
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> palette;
    auto signature = [](const Adjacency& g, const std::vector<int>& c, std::size_t v) {
      std::vector<int> sig{c[v]};
      for (int u : g[v]) sig.push_back(c[static_cast<std::size_t>(u)]);
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<int>> s1(g1.size()), s2(g2.size());
    for (std::size_t v = 0; v < g1.size(); ++v) palette.emplace(s1[v] = signature(g1, c1, v), 0);
    for (std::size_t v = 0; v < g2.size(); ++v) palette.emplace(s2[v] = signature(g2, c2, v), 0);
    int next = 0;
    for (auto& [sig, id] : palette) id = next++;
    for (std::size_t v = 0; v < g1.size(); ++v) c1[v] = palette[s1[v]];
    for (std::size_t v = 0; v < g2.size(); ++v) c2[v] = palette[s2[v]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {c1, c2};
}

class RootedMatcher {
 public:
  RootedMatcher(const Adjacency& g1, const Adjacency& g2, std::vector<int> c1, std::vector<int> c2)
      : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)),
        map12_(g1.size(), -1), used_(g2.size(), false) {}

  bool run(int r1, int r2) {
    // BFS order of g1 from its root, remembering a mapped parent per vertex.
    std::vector<int> parent(g1_.size(), -1);
    std::vector<bool> seen(g1_.size(), false);
    order_.push_back(r1);
    seen[static_cast<std::size_t>(r1)] = true;
    for (std::size_t h = 0; h < order_.size(); ++h) {
      for (int u : g1_[static_cast<std::size_t>(order_[h])]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          parent[static_cast<std::size_t>(u)] = order_[h];
          order_.push_back(u);
        }
      }
    }
    if (order_.size() != g1_.size()) return false;  // fragments are connected balls
    parent_ = std::move(parent);
    map12_[static_cast<std::size_t>(r1)] = r2;
    used_[static_cast<std::size_t>(r2)] = true;
    return extend(1);
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    const int p = parent_[static_cast<std::size_t>(v)];
    const int image_p = map12_[static_cast<std::size_t>(p)];
    for (int cand : g2_[static_cast<std::size_t>(image_p)]) {
      if (used_[static_cast<std::size_t>(cand)] || c2_[static_cast<std::size_t>(cand)] != c1_[static_cast<std::size_t>(v)]) continue;
      if (!consistent(v, cand)) continue;
      map12_[static_cast<std::size_t>(v)] = cand;
      used_[static_cast<std::size_t>(cand)] = true;
      if (extend(depth + 1)) return true;
      map12_[static_cast<std::size_t>(v)] = -1;
      used_[static_cast<std::size_t>(cand)] = false;
    }
    return false;
  }

  bool consistent(int v, int cand) const {
    int mapped_neighbors = 0;
    for (int u : g1_[static_cast<std::size_t>(v)]) {
      const int image = map12_[static_cast<std::size_t>(u)];
      if (image < 0) continue;
      ++mapped_neighbors;
      const auto& row = g2_[static_cast<std::size_t>(cand)];
      if (!std::binary_search(row.begin(), row.end(), image)) return false;
    }
    int used_neighbors = 0;
    for (int u : g2_[static_cast<std::size_t>(cand)]) used_neighbors += used_[static_cast<std::size_t>(u)] ? 1 : 0;
    return used_neighbors == mapped_neighbors;
  }

  const Adjacency& g1_;
  const Adjacency& g2_;
  std::vector<int> c1_, c2_;
  std::vector<int> map12_;
  std::vector<bool> used_;
  std::vector<int> order_;
  std::vector<int> parent_;
};

}  // namespace

bool rooted_isomorphic(const Fragment& f1, const Fragment& f2, RootedMatch mode) {
  if (f1.vertices.size() != f2.vertices.size() || f1.edges.size() != f2.edges.size()) return false;
  if (mode == RootedMatch::Embedded) return f1 == f2;

  for (const auto& s : lattice_symmetries()) {
    if (same_under(f1, f2, s)) return true;
  }

  const int r1 = f1.index_of({0, 0});
  const int r2 = f2.index_of({0, 0});
  if (r1 < 0 || r2 < 0) return false;
  const Adjacency g1 = adjacency_of(f1);
  const Adjacency g2 = adjacency_of(f2);
  auto [c1, c2] = refine(g1, r1, g2, r2);
  auto hist = [](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (hist(c1) != hist(c2)) return false;
  RootedMatcher matcher(g1, g2, std::move(c1), std::move(c2));
  return matcher.run(r1, r2);
}

}  // namespace carpet
