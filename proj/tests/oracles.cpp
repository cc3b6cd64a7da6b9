#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/isomorphism.hpp>

namespace oracle {

namespace {

constexpr std::array<Coord, 8> kModel{Coord{0, 0}, Coord{1, 0}, Coord{2, 0}, Coord{2, 1},
                                      Coord{2, 2}, Coord{1, 2}, Coord{0, 2}, Coord{0, 1}};

Coord corner(carpet::RootLetter y) {
  switch (y) {
    case carpet::RootLetter::a: return {0, 0};
    case carpet::RootLetter::b: return {1, 0};
    case carpet::RootLetter::c: return {1, 1};
    case carpet::RootLetter::d: return {0, 1};
  }
  return {};
}

std::pair<Coord, Coord> ordered(Coord a, Coord b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

GluedGraph glue(const carpet::WordSpec& w, int n) {
  GluedGraph g;
  g.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  g.edges = {ordered({0, 0}, {1, 0}), ordered({1, 0}, {1, 1}), ordered({1, 1}, {0, 1}), ordered({0, 1}, {0, 0})};
  g.cells = {{0, 0}};
  g.root = corner(w.root);
  for (int k = 1; k < n; ++k) {
    GluedGraph next;
    next.level = k + 1;
    next.side = g.side * 3;
    for (Coord p : kModel) {
      const Coord shift = g.side * p;
      for (Coord v : g.vertices) next.vertices.insert(v + shift);
      for (auto [a, b] : g.edges) next.edges.insert({a + shift, b + shift});
      for (Coord c : g.cells) next.cells.insert(c + shift);
    }
    const int x = w.letter(static_cast<std::size_t>(k)).value();
    next.root = g.root + g.side * kModel[static_cast<std::size_t>(x)];
    g = std::move(next);
  }
  return g;
}

std::vector<std::vector<int>> floyd_warshall(const std::vector<Coord>& vertices,
                                             const std::set<std::pair<Coord, Coord>>& edges) {
  const std::size_t n = vertices.size();
  constexpr int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  std::map<Coord, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) {
    at[vertices[i]] = i;
    d[i][i] = 0;
  }
  for (auto [a, b] : edges) {
    d[at.at(a)][at.at(b)] = 1;
    d[at.at(b)][at.at(a)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  for (auto& row : d)
    for (int& v : row)
      if (v >= inf) v = -1;
  return d;
}

std::vector<FloodHole> flood_fill_holes(const GluedGraph& g) {
  std::set<Coord> seen;
  std::vector<FloodHole> out;
  for (std::int64_t j = 0; j < g.side; ++j) {
    for (std::int64_t i = 0; i < g.side; ++i) {
      const Coord start{i, j};
      if (g.cells.count(start) || seen.count(start)) continue;
      std::deque<Coord> queue{start};
      seen.insert(start);
      Coord lo = start, hi = start;
      std::size_t size = 0;
      while (!queue.empty()) {
        const Coord c = queue.front();
        queue.pop_front();
        ++size;
        lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
        hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
        for (Coord s : {Coord{1, 0}, Coord{-1, 0}, Coord{0, 1}, Coord{0, -1}}) {
          const Coord nb = c + s;
          if (nb.x < 0 || nb.y < 0 || nb.x >= g.side || nb.y >= g.side) continue;
          if (g.cells.count(nb) || seen.count(nb)) continue;
          seen.insert(nb);
          queue.push_back(nb);
        }
      }
      FloodHole h;
      h.lo = lo;
      h.side = hi.x - lo.x + 1;
      h.square = hi.y - lo.y + 1 == h.side && static_cast<std::int64_t>(size) == h.side * h.side;
      std::int64_t s = h.side;
      h.level = 2;
      while (s > 1 && s % 3 == 0) {
        s /= 3;
        ++h.level;
      }
      if (s != 1) h.level = -1;
      out.push_back(h);
    }
  }
  return out;
}

bool cofinal_by_expansion(const carpet::WordSpec& u, const carpet::WordSpec& v, std::size_t horizon) {
  for (std::size_t i = horizon / 2; i <= horizon; ++i) {
    if (u.letter(i) != v.letter(i)) return false;
  }
  return true;
}

std::set<std::array<int, 8>> closure_of_generators() {
  const std::array<int, 8> r{0, 3, 2, 5, 4, 7, 6, 1};
  const std::array<int, 8> s{4, 3, 2, 1, 0, 7, 6, 5};
  std::set<std::array<int, 8>> out{{0, 1, 2, 3, 4, 5, 6, 7}};
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = out;
    for (const auto& p : snapshot) {
      for (const auto& gen : {r, s}) {
        std::array<int, 8> q{};
        for (int i = 0; i < 8; ++i) q[static_cast<std::size_t>(i)] = gen[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
        grew = out.insert(q).second || grew;
      }
    }
  }
  return out;
}

bool isomorphic_by_expansion(const carpet::WordSpec& u, const carpet::WordSpec& v) {
  for (const auto& p : closure_of_generators()) {
    carpet::WordSpec moved = u;
    for (auto& x : moved.prefix) x = carpet::Letter(p[static_cast<std::size_t>(x.value())]);
    for (auto& x : moved.cycle) x = carpet::Letter(p[static_cast<std::size_t>(x.value())]);
    if (cofinal_by_expansion(moved, v)) return true;
  }
  return false;
}

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

BGraph to_boost(const carpet::Fragment& f) {
  BGraph g(f.vertices.size());
  for (auto [a, b] : f.edges) boost::add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), g);
  return g;
}

struct RootedDegree {
  using argument_type = std::size_t;
  using result_type = std::size_t;
  const BGraph* g;
  std::size_t root;
  std::size_t operator()(std::size_t v) const { return boost::degree(v, *g) * 2 + (v == root ? 1 : 0); }
  std::size_t max() const { return 16; }
};

}  // namespace

bool boost_rooted_isomorphic(const carpet::Fragment& a, const carpet::Fragment& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  const BGraph ga = to_boost(a), gb = to_boost(b);
  const RootedDegree ia{&ga, static_cast<std::size_t>(a.index_of({0, 0}))};
  const RootedDegree ib{&gb, static_cast<std::size_t>(b.index_of({0, 0}))};
  std::vector<std::size_t> f(a.vertices.size());
  return boost::isomorphism(
      ga, gb,
      boost::isomorphism_map(boost::make_iterator_property_map(f.begin(), boost::get(boost::vertex_index, ga)))
          .vertex_invariant1(ia)
          .vertex_invariant2(ib)
          .vertex_max_invariant(ia.max()));
}

}  // namespace oracle
