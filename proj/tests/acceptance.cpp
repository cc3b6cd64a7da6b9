#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <sstream>
#include <string>

#include "carpet/boundary.hpp"
#include "oracles.hpp"

using namespace carpet;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<WordSpec> random_words(std::size_t n, std::uint64_t seed) {
  std::vector<WordSpec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_word(seed + i));
  return out;
}

const WordSpec kB7 = parse_word("b(7)*");

Outcome vertex_counts() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::int64_t expected[] = {4, 16, 96, 688, 5280, 41584};
  bool ok = true;
  std::ostringstream os;
  for (int n = 1; n <= 6; ++n) {
    const auto g = build_level(kB7, n);
    const auto got = static_cast<std::int64_t>(g.vertex_count());
    ok = ok && got == expected[n - 1] && expected_vertex_count(n) == got;
    os << (n > 1 ? "," : "") << got;
  }
  const double s = seconds_since(t0);
  ok = ok && s < 5.0;
  os << " in " << s << " s";
  return {ok, os.str()};
}

Outcome hole_structure() {
  bool ok = true;
  std::ostringstream os;
  for (int n = 3; n <= 6; ++n) {
    const auto g = build_level(kB7, n);
    std::map<int, std::int64_t> count;
    for (const Hole& h : enumerate_holes(g)) {
      ++count[h.level];
      const auto side = pow3(h.level - 2);
      for (HoleSide s : {HoleSide::s1, HoleSide::s3, HoleSide::s5, HoleSide::s7}) {
        ok = ok && static_cast<std::int64_t>(h.side(s).size()) == side + 1;
      }
      ok = ok && static_cast<std::int64_t>(h.boundary().size()) == 4 * side;
      for (Coord v : h.boundary()) ok = ok && g.contains(v);
    }
    for (int m = 2; m <= n; ++m) ok = ok && count[m] == pow8(n - m);
    std::size_t flood = 0;
    for (const auto& h : oracle::flood_fill_holes(oracle::glue(kB7, n))) {
      ok = ok && h.square && h.level >= 2;
      ++flood;
    }
    ok = ok && flood == enumerate_holes(g).size();
    os << (n > 3 ? "; " : "") << "n=" << n << ": " << flood << " holes";
  }
  return {ok, os.str()};
}

Outcome stabilization() {
  const auto words = random_words(10, 31337);
  int checked = 0, failed = 0;
  std::string first;
  for (const auto& w : words) {
    for (int n = 3; n <= 5; ++n) {
      const auto small = build_level(w, n);
      const auto big = build_level(w, n + 1);
      for (std::int64_t r = 0; r <= pow3(n - 2); ++r) {
        ++checked;
        if (rooted_isomorphic(rooted_ball(small, r), rooted_ball(big, r))) continue;
        if (failed++ == 0) first = to_string(w) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
      }
    }
  }
  std::ostringstream os;
  os << checked - failed << "/" << checked << " (word, n, r) cases stable";
  if (failed) os << "; first failure " << first;
  return {failed == 0, os.str()};
}

Outcome worked_example() {
  const auto t0 = std::chrono::steady_clock::now();
  const Workspace ws(kB7, 6);
  const auto cs = corner_and_fg_sequences(ws, Direction::d7);
  const auto z = antipodal_sequence(ws, Direction::d7);
  bool corners = true, dist = true, offsets = true;
  std::ostringstream os;
  for (int m = 2; m <= 5; ++m) {
    const auto s = pow3(m - 1);
    const Hole h = hole_corners_relative(kB7, m);
    corners = corners && h.A == Coord{s - 1, -(s - 1) / 2} && h.B == Coord{2 * s - 1, -(s - 1) / 2} &&
              h.C == Coord{2 * s - 1, (s + 1) / 2} && h.D == Coord{s - 1, (s + 1) / 2};
    corners = corners && cs.B.points.at(m) == h.B && cs.C.points.at(m) == h.C;
    const auto expected = (1 + pow3(m - 2)) / 2;
    const auto fz = cs.f.points.at(m).y - z.points.at(m).y;
    const auto zg = z.points.at(m).y - cs.g.points.at(m).y;
    if (fz != expected || zg != expected) {
      offsets = false;
      os << "m=" << m << ": f-z=" << fz << " z-g=" << zg << " expected " << expected << "; ";
    }
  }
  for (int m = 2; m <= 4; ++m) dist = dist && ws.metric().distance({0, 0}, z.points.at(m)) == pow3(m) - 1;
  const double s = seconds_since(t0);
  os << "corners " << (corners ? "ok" : "mismatch") << ", d(root,z_m) " << (dist ? "ok" : "mismatch")
     << ", f/g offsets " << (offsets ? "ok" : "mismatch") << ", " << s << " s";
  return {corners && dist && offsets && s < 30.0, os.str()};
}

Outcome antipodal_equalities() {
  const Workspace ws(kB7, 6);
  const auto z = antipodal_sequence(ws, Direction::d7);
  bool ok = antipodal_equalities_hold(ws, Direction::d7, z);
  std::ostringstream os;
  for (int m = 2; m <= 4; ++m) {
    const auto c = frame_corners(hole_corners_relative(kB7, m), Direction::d7);
    const Coord p = z.points.at(m);
    const auto d = ws.metric().distance({0, 0}, p);
    const auto via_b = ws.metric().constrained_distance({0, 0}, p, c.far_minus);
    const auto via_c = ws.metric().constrained_distance({0, 0}, p, c.far_plus);
    ok = ok && via_b == d && via_c == d;
    os << (m > 2 ? "; " : "") << "m=" << m << ": " << via_b << "/" << via_c << "/" << d;
  }
  return {ok, os.str()};
}

Outcome separations() {
  int checked = 0, failed = 0;
  for (int level = 4; level <= 6; ++level) {
    const Workspace ws(kB7, level);
    const Metric& m = ws.metric();
    const auto z = antipodal_sequence(ws, Direction::d7);
    const auto cs = corner_and_fg_sequences(ws, Direction::d7);
    std::map<std::int64_t, SequenceRep> shifted;
    for (std::int64_t k = 1; k <= 3; ++k) shifted.emplace(k, shifted_antipodal(ws, Direction::d7, k));
    for (int mm = 3; mm < level; ++mm) {
      auto expect = [&](std::int64_t got, std::int64_t want) {
        ++checked;
        if (got != want) ++failed;
      };
      expect(m.phi({0, 0}, {0, 1}, cs.B.points.at(mm)), -1);
      expect(m.phi({0, 0}, {0, 1}, cs.C.points.at(mm)), 1);
      expect(m.phi({0, 0}, {0, -1}, cs.C.points.at(mm)), -1);
      expect(m.phi({0, 0}, {0, -1}, z.points.at(mm)), 1);
      for (std::int64_t k = 1; k <= 3; ++k) {
        expect(m.phi({0, 0}, {0, -k}, z.points.at(mm)), k);
        expect(m.phi({0, 0}, {0, -k}, shifted.at(k).points.at(mm)), -k);
      }
    }
  }
  return {failed == 0, std::to_string(checked - failed) + "/" + std::to_string(checked) +
                           " identities at levels 4..6, m >= 3"};
}

Outcome equivalences() {
  const Workspace ws(kB7, 7);
  const auto z = antipodal_sequence(ws, Direction::d7);
  const auto cs = corner_and_fg_sequences(ws, Direction::d7);
  bool ok = true;
  std::ostringstream os;
  auto run = [&](const char* name, const SequenceRep& a, const SequenceRep& b, Verdict want) {
    const Verdict got = distinguish(ws, a, b, 2, 3).verdict;
    ok = ok && got == want;
    if (got != want) os << name << "=" << to_string(got) << " ";
  };
  run("(f,C)", cs.f, cs.C, Verdict::Equal);
  run("(g,B)", cs.g, cs.B, Verdict::Equal);
  run("(z,C)", z, cs.C, Verdict::Distinct);
  run("(z,B)", z, cs.B, Verdict::Distinct);
  int pairs = 0;
  for (std::int64_t k = -2; k <= 2; ++k) {
    for (std::int64_t h = k + 1; h <= 2; ++h) {
      const std::string name = "(z^" + std::to_string(k) + ",z^" + std::to_string(h) + ")";
      run(name.c_str(), shifted_antipodal(ws, Direction::d7, k), shifted_antipodal(ws, Direction::d7, h),
          Verdict::Distinct);
      ++pairs;
    }
  }
  os << "4 named pairs + " << pairs << " shifted pairs at level 7, probe radius 2, 3 settled levels";
  return {ok, os.str()};
}

Outcome ray_definitions() {
  const Workspace ws(kB7, 6);
  const Metric& m = ws.metric();
  const auto z = antipodal_sequence(ws, Direction::d7);
  const auto cs = corner_and_fg_sequences(ws, Direction::d7);
  const auto probes = m.ball(2);
  bool ok = true;
  std::ostringstream os;
  auto tail_from = [](const SequenceRep& s, int first) {
    const auto lv = s.levels();
    return static_cast<std::size_t>(std::find_if(lv.begin(), lv.end(), [&](int l) { return l >= first; }) -
                                    lv.begin()) + 1;
  };
  for (const auto* s : {&z, &cs.f, &cs.g}) {
    const auto pts = s->ordered_points();
    const auto ray = ray_from_points(m, pts);
    RayCheckOptions opts;
    opts.epsilon = 0.5;
    opts.tail_start = tail_from(*s, 3);
    const auto r = check_weakly_geodesic(m, ray, probes, opts);
    ok = ok && r.pass;
    os << "weak(" << to_string(s->family) << ")=" << (r.pass ? "pass" : "fail");
    if (!r.pass) os << "[violation " << r.worst_violation << "]";
    os << " ";
  }
  for (const auto* s : {&cs.f, &cs.g}) {
    const auto pts = s->ordered_points();
    const auto ray = ray_from_points(m, pts);
    RayCheckOptions opts;
    opts.epsilon = 0.5;
    opts.tail_start = tail_from(*s, 3);
    const auto r = check_almost_geodesic(m, ray, opts);
    std::vector<std::int64_t> tail(r.per_point.begin() + static_cast<std::ptrdiff_t>(*opts.tail_start),
                                   r.per_point.end());
    bool increasing = tail.size() >= 2;
    for (std::size_t i = 1; i < tail.size(); ++i) increasing = increasing && tail[i] > tail[i - 1];
    ok = ok && !r.pass && increasing;
    os << "almost(" << to_string(s->family) << ")=" << (r.pass ? "pass" : "fail") << "[";
    for (std::size_t i = 0; i < tail.size(); ++i) os << (i ? "," : "") << tail[i];
    os << "] ";
  }
  for (const auto* s : {&cs.B, &cs.C}) {
    const auto pts = s->ordered_points();
    const bool chain = check_geodesic_chain(m, pts);
    ok = ok && chain;
    os << "chain(" << to_string(s->family) << ")=" << (chain ? "pass" : "fail") << " ";
  }
  return {ok, os.str()};
}

Outcome witness() {
  const Workspace ws(kB7, 6);
  const auto z = antipodal_sequence(ws, Direction::d7);
  const std::vector<int> levels{3, 4};
  const bool ok = certify_witness(ws, z, {0, 1}, {0, -1}, levels);
  return {ok, std::string("supports from (0,1) and (0,-1) to z_3, z_4 ") + (ok ? "disjoint" : "intersect")};
}

Outcome catalogs() {
  using Entry = std::tuple<std::string, std::string, std::string>;
  auto entries = [](const BoundaryCatalog& c) {
    std::set<Entry> out;
    for (const auto& f : c.families) out.insert({to_string(f.label), f.direction_name(), to_string(f.kind)});
    return out;
  };
  const std::set<Entry> b7{{"zeta", "d7", "non-Busemann"}, {"eta", "d1", "non-Busemann"},
                           {"eta", "d5", "non-Busemann"},  {"beta", "d57", "Busemann"},
                           {"beta", "d71", "Busemann"},    {"xi", "d1", "Busemann"},
                           {"xi", "d5", "Busemann"}};
  const auto got = catalog(kB7);
  const bool b7_ok = entries(got) == b7 && got.families.size() == b7.size();
  const auto full = catalog(parse_word("a(01234567)*"));
  std::set<Entry> want_full;
  for (DiagonalDirection q : kDiagonals) want_full.insert({"beta", to_string(q), "Busemann"});
  for (Direction d : kDirections) want_full.insert({"zeta", to_string(d), "non-Busemann"});
  const bool full_ok = entries(full) == want_full && full.families.size() == 8;
  return {b7_ok && full_ok, std::string("b(7)* ") + (b7_ok ? "matches" : "differs") + " (" +
                                std::to_string(got.families.size()) + " families); a(01234567)* " +
                                (full_ok ? "is 4 beta + 4 zeta" : "differs")};
}

Outcome isomorphism() {
  auto whole = [](const char* w, int n) { return whole_graph(build_level(parse_word(w), n)); };
  const bool g3 = rooted_isomorphic(whole("a24(0)*", 3), whole("d43(0)*", 3), RootedMatch::Embedded);
  const bool g2 = rooted_isomorphic(whole("a24(0)*", 2), whole("d43(0)*", 2), RootedMatch::Embedded);
  const bool g1 = rooted_isomorphic(whole("a24(0)*", 1), whole("d43(0)*", 1), RootedMatch::Embedded);
  const bool a02 = are_isomorphic(parse_word("a(02)*"), parse_word("a(24)*")).isomorphic;
  int images = 0, image_ok = 0;
  for (const auto& w : random_words(10, 777)) {
    for (const auto& s : group_elements()) {
      ++images;
      if (are_isomorphic(w, apply_symmetry(s, w)).isomorphic) ++image_ok;
    }
  }
  std::ostringstream os;
  os << "rooted pictures: G3 " << (g3 ? "same" : "differ") << ", G2 " << (g2 ? "same" : "differ") << ", G1 "
     << (g1 ? "same" : "differ") << "; a(02)* ~ a(24)* " << (a02 ? "true" : "false") << "; " << image_ok << "/"
     << images << " symmetric images isomorphic";
  return {g3 && !g2 && !g1 && !a02 && image_ok == images, os.str()};
}

Outcome measure() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = sample_measure(10000, 100, 20240611);
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << "fraction " << r.fraction_all_letters << " in " << s << " s";
  return {r.fraction_all_letters >= 0.999 && s < 5.0, os.str()};
}

Outcome oracle_distances() {
  std::size_t pairs = 0, bad = 0;
  auto words = random_words(4, 55);
  words.push_back(kB7);
  for (const auto& w : words) {
    for (int n = 1; n <= 3; ++n) {
      const auto glued = oracle::glue(w, n);
      std::vector<Coord> verts(glued.vertices.begin(), glued.vertices.end());
      const auto d = oracle::floyd_warshall(verts, glued.edges);
      const auto g = build_level(w, n);
      const Metric m(g, 8);
      for (std::size_t i = 0; i < verts.size(); ++i) {
        const auto field = m.bfs(g.to_relative(verts[i]));
        for (std::size_t j = 0; j < verts.size(); ++j) {
          ++pairs;
          if (field->at(g.to_relative(verts[j])) != d[i][j]) ++bad;
        }
      }
    }
  }
  return {bad == 0, std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs agree on 5 words, levels 1..3"};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, vertex_counts},  {2, hole_structure}, {3, stabilization}, {4, worked_example},
      {5, antipodal_equalities}, {6, separations},   {7, equivalences},  {8, ray_definitions},
      {9, witness},         {10, catalogs},     {11, isomorphism},  {12, measure},
      {13, oracle_distances},
  };
  int failures = 0;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s (%s)\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
