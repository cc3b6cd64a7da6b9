#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "carpet/boundary.hpp"
#include "carpet/metric.hpp"
#include "oracles.hpp"

using namespace carpet;

namespace {

struct Oracle {
  std::vector<Coord> vertices;  // relative
  std::vector<std::vector<int>> d;
  std::map<Coord, std::size_t> at;

  explicit Oracle(const WordSpec& w, int n) {
    auto glued = oracle::glue(w, n);
    std::set<std::pair<Coord, Coord>> edges;
    for (auto [a, b] : glued.edges) edges.insert({a - glued.root, b - glued.root});
    for (Coord v : glued.vertices) vertices.push_back(v - glued.root);
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) at[vertices[i]] = i;
    d = oracle::floyd_warshall(vertices, edges);
  }
  int dist(Coord u, Coord v) const { return d[at.at(u)][at.at(v)]; }
};

}  // namespace

TEST_SUITE("metric") {

TEST_CASE("level-1 distances") {
  auto g = build_level(parse_word("a(0)*"), 1);
  Metric m(g);
  CHECK(m.distance({0, 0}, {0, 0}) == 0);
  CHECK(m.distance({0, 0}, {1, 0}) == 1);
  CHECK(m.distance({0, 0}, {1, 1}) == 2);
  CHECK(m.distance({0, 0}, {0, 1}) == 1);
  CHECK_THROWS_AS(m.distance({0, 0}, {2, 0}), NotAVertexError);
}

TEST_CASE("all pairs agree with Floyd-Warshall on levels up to 3") {
  for (const char* text : {"a(0)*", "b(7)*", "c35(1)*", "d(246)*"}) {
    const WordSpec w = parse_word(text);
    for (int n = 1; n <= 3; ++n) {
      Oracle o(w, n);
      auto g = build_level(w, n);
      Metric m(g, 4);
      for (Coord u : o.vertices) {
        auto field = m.bfs(u);
        for (Coord v : o.vertices) CHECK(field->at(v) == o.dist(u, v));
      }
    }
  }
}

TEST_CASE("constrained distances and supports agree with Floyd-Warshall") {
  const WordSpec w = parse_word("b13(57)*");
  Oracle o(w, 3);
  auto g = build_level(w, 3);
  Metric m(g);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, o.vertices.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Coord u = o.vertices[pick(rng)], v = o.vertices[pick(rng)], via = o.vertices[pick(rng)];
    CHECK(m.constrained_distance(u, v, via) == o.dist(u, via) + o.dist(via, v));
    CHECK(m.constrained_distance(u, v, u) == m.distance(u, v));
    std::vector<Coord> expected;
    for (Coord x : o.vertices)
      if (o.dist(u, x) + o.dist(x, v) == o.dist(u, v)) expected.push_back(x);
    std::sort(expected.begin(), expected.end());
    CHECK(m.geodesic_support(u, v) == expected);
    const auto support = m.geodesic_support(u, v);
    const bool on = std::binary_search(support.begin(), support.end(), via);
    CHECK((m.constrained_distance(u, v, via) == m.distance(u, v)) == on);
  }
  CHECK(m.geodesic_support({0, 0}, {0, 0}) == std::vector<Coord>{Coord{0, 0}});
}

TEST_CASE("distance dominates the L1 metric and phi is Lipschitz") {
  auto w = parse_word("a(1357)*");
  auto g = build_level(w, 4);
  Metric m(g);
  auto verts = g.vertices();
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    Coord u = g.to_relative(verts[pick(rng)]);
    Coord v = g.to_relative(verts[pick(rng)]);
    auto fu = m.bfs(u);
    for (Coord x : verts) {
      Coord rx = g.to_relative(x);
      CHECK(fu->at(rx) >= l1(u, rx));
      CHECK(m.phi(u, u, rx) == 0);
    }
    for (auto [a, b] : g.edges()) {
      auto pa = m.phi({0, 0}, v, g.to_relative(a)), pb = m.phi({0, 0}, v, g.to_relative(b));
      CHECK(std::abs(pa - pb) <= 2);
    }
  }
}

TEST_CASE("hole-free block has the L1 metric") {
  auto g = build_level(parse_word("a(0)*"), 3);
  Metric m(g);
  // the bottom-left 3x3 block minus its own central cell, corners only
  CHECK(m.distance({0, 0}, {3, 0}) == 3);
  CHECK(m.distance({0, 0}, {3, 3}) == 6);
  CHECK(m.geodesic_support({0, 0}, {1, 0}) == std::vector<Coord>{Coord{0, 0}, Coord{1, 0}});
  auto box = m.geodesic_support({0, 0}, {1, 1});
  CHECK(box == std::vector<Coord>{Coord{0, 0}, Coord{1, 0}, Coord{0, 1}, Coord{1, 1}});
}

TEST_CASE("b7 worked distances") {
  const WordSpec b7 = parse_word("b(7)*");
  auto g = build_level(b7, 4);
  Metric m(g);
  CHECK(m.distance({0, 0}, {17, 5}) == 22);
  for (int mm = 2; mm <= 4; ++mm) {
    auto gm = build_level(b7, mm + 1);
    Metric mmet(gm);
    CHECK(mmet.distance({0, 0}, {2 * pow3(mm - 1) - 1, 1}) == pow3(mm) - 1);
  }
  CHECK(m.phi({0, 0}, {0, 0}, {17, 5}) == 0);
}

TEST_CASE("ball order") {
  auto g = build_level(parse_word("b(7)*"), 4);
  Metric m(g);
  auto b = m.ball(1);
  CHECK(b.front() == Coord{0, 0});
  for (Coord v : b) CHECK(l1(v) <= 1);
  auto b2 = m.ball(2);
  for (std::size_t i = 1; i < b2.size(); ++i) {
    auto di = m.distance({0, 0}, b2[i]), dp = m.distance({0, 0}, b2[i - 1]);
    CHECK((dp < di || (dp == di && b2[i - 1] < b2[i])));
  }
}

TEST_CASE("cache budget is respected") {
  auto g = build_level(parse_word("b(7)*"), 3);
  Metric m(g, 3);
  for (Coord v : m.ball(3)) m.bfs(v);
  CHECK(m.cached_fields() <= 3);
}

TEST_CASE("ray checks on simple samples") {
  auto g = build_level(parse_word("a(0)*"), 4);
  Metric m(g);
  std::vector<Coord> straight;
  for (int t = 1; t <= 27; ++t) straight.push_back({t, 0});
  auto ray = ray_from_points(m, straight);
  CHECK(ray.points.front().second == Coord{0, 0});
  CHECK(ray.points.back().first == 27);
  auto probes = m.ball(2);
  CHECK(check_weakly_geodesic(m, ray, probes).pass);
  CHECK(check_almost_geodesic(m, ray).pass);
  CHECK(check_geodesic_chain(m, straight));

  std::vector<Coord> alternating;
  for (int i = 0; i < 10; ++i) alternating.push_back(i % 2 ? Coord{5, 0} : Coord{0, 5});
  RaySample bad;
  for (int i = 0; i < 10; ++i) bad.points.push_back({i, alternating[static_cast<std::size_t>(i)]});
  CHECK_FALSE(check_weakly_geodesic(m, bad, probes).pass);
  CHECK_FALSE(check_almost_geodesic(m, bad).pass);
  CHECK_FALSE(check_geodesic_chain(m, alternating));
}

TEST_CASE("almost-geodesic implies weakly geodesic") {
  auto g = build_level(parse_word("b(7)*"), 6);
  Metric m(g);
  std::vector<std::vector<Coord>> samples;
  std::vector<Coord> corners, axis, far;
  for (int k = 1; k <= 5; ++k) corners.push_back({2 * pow3(k - 1) - 1, (pow3(k - 1) + 1) / 2});
  for (int k = 1; k <= 30; ++k) axis.push_back({0, k});
  for (int k = 1; k <= 5; ++k) far.push_back({2 * pow3(k - 1) - 1, 1});
  samples = {corners, axis, far};
  int implied = 0;
  for (auto pts : samples) {
    std::erase_if(pts, [&](Coord c) { return !m.is_vertex(c); });
    REQUIRE(pts.size() >= 3);
    auto ray = ray_from_points(m, pts);
    auto almost = check_almost_geodesic(m, ray);
    std::vector<Coord> probes;
    for (std::size_t i = 0; i < almost.tail_start; ++i) probes.push_back(ray.points[i].second);
    if (almost.pass) {
      ++implied;
      CHECK(check_weakly_geodesic(m, ray, probes).pass);
    }
  }
  CHECK(implied >= 2);
}

}
