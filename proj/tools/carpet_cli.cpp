#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "carpet/boundary.hpp"
#include "carpet/serialize.hpp"
#include "carpet/verify.hpp"

namespace {

using nlohmann::json;
using namespace carpet;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int level_cap() {
  const char* env = std::getenv("CARPET_LEVEL_CAP");
  if (env == nullptr || *env == '\0') return kDefaultLevelCap;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used != std::strlen(env) || cap < 1) throw std::invalid_argument("");
    return cap;
  } catch (const std::exception&) {
    throw UsageError(std::string("CARPET_LEVEL_CAP must be a positive integer, got \"") + env + "\"");
  }
}

void check_level(int level, const char* flag) {
  if (level < 1) throw UsageError(std::string(flag) + " must be >= 1");
  const int cap = level_cap();
  if (level > cap) {
    throw UsageError(std::string(flag) + " " + std::to_string(level) + " exceeds the level cap " +
                     std::to_string(cap) + " (set CARPET_LEVEL_CAP to raise it)");
  }
}

/// Writes to stdout, or atomically to `path` through a temporary sibling.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << text;
    out.close();
    if (!out) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sierpinski carpet graphs: construction, metric and boundary analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "carpet 1.0");

  std::string word, left, right, output, family = "antipodal", direction = "d7", from_text, to_text;
  std::string format = "json";
  int level = 4, max_level = 6;
  bool absolute = false, no_evidence = false;
  std::int64_t probe_radius = 2, k = 0, search_radius = 2;
  std::size_t tail = 3, witness_tail = 2, samples = 10000, prefix_len = 100;
  std::optional<std::size_t> tail_start;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  double epsilon = 0.5;

  auto add_word = [&](CLI::App* c) { c->add_option("--word", word, "word, e.g. \"b(7)*\"")->required(); };
  auto add_output = [&](CLI::App* c) { c->add_option("-o,--output", output, "write to file (atomic)"); };
  auto add_max_level = [&](CLI::App* c) {
    c->add_option("--max-level", max_level, "built level for sequence data")->capture_default_str();
  };
  auto add_sequence = [&](CLI::App* c) {
    c->add_option("--family", family,
                  "antipodal|shifted-antipodal|corner-B|corner-C|f-seq|g-seq|diagonal|axis-ray")
        ->capture_default_str();
    c->add_option("--dir", direction, "d1|d3|d5|d7, or a quadrant d71|d13|d35|d57 for diagonal")
        ->capture_default_str();
    c->add_option("--k", k, "shift or axis offset")->capture_default_str();
  };

  auto* build = app.add_subcommand("build", "export a finite approximation");
  add_word(build);
  build->add_option("--level", level, "level n of the approximation")->capture_default_str();
  build->add_option("--format", format, "json|dot|csv")->check(CLI::IsMember({"json", "dot", "csv"}))
      ->capture_default_str();
  build->add_flag("--absolute", absolute, "absolute frame instead of root-relative");
  add_output(build);

  auto* classify = app.add_subcommand("classify", "direction profile");
  add_word(classify);
  add_output(classify);

  auto* cat = app.add_subcommand("catalog", "boundary catalog with evidence");
  add_word(cat);
  add_max_level(cat);
  cat->add_flag("--no-evidence", no_evidence, "symbolic catalog only");
  add_output(cat);

  auto* dist = app.add_subcommand("distance", "geodesic distance between two vertices");
  add_word(dist);
  dist->add_option("--level", level)->capture_default_str();
  dist->add_option("--from", from_text, "x,y (root-relative)")->required();
  dist->add_option("--to", to_text, "x,y (root-relative)")->required();

  auto* horo = app.add_subcommand("horo", "phi table of a sequence over probes");
  add_word(horo);
  add_max_level(horo);
  add_sequence(horo);
  horo->add_option("--probe-radius", probe_radius)->capture_default_str();
  horo->add_option("--tail", tail)->capture_default_str();
  add_output(horo);

  auto* rays = app.add_subcommand("rays", "weakly/almost geodesic and chain checks of a sequence");
  add_word(rays);
  add_max_level(rays);
  add_sequence(rays);
  rays->add_option("--epsilon", epsilon)->capture_default_str();
  rays->add_option("--probe-radius", probe_radius)->capture_default_str();
  rays->add_option("--tail-start", tail_start, "sample index where the tail starts (root is index 0)");
  add_output(rays);

  auto* wit = app.add_subcommand("witness", "search a non-Busemann witness pair");
  add_word(wit);
  add_max_level(wit);
  add_sequence(wit);
  wit->add_option("--search-radius", search_radius)->capture_default_str();
  wit->add_option("--tail", witness_tail, "number of last indices to certify")->capture_default_str();
  add_output(wit);

  auto* iso = app.add_subcommand("iso", "unrooted isomorphism of two carpet graphs");
  iso->add_option("--left", left)->required();
  iso->add_option("--right", right)->required();
  std::optional<int> rooted_level;
  iso->add_option("--rooted-level", rooted_level, "also compare the rooted approximations at this level");

  auto* sample = app.add_subcommand("sample", "Monte-Carlo letter-frequency experiment");
  sample->add_option("--samples", samples)->capture_default_str();
  sample->add_option("--prefix-len", prefix_len)->capture_default_str();
  sample->add_option("--seed", seed)->required();
  sample->add_option("--workers", workers, "0 = hardware concurrency")->capture_default_str();
  add_output(sample);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_word(verify);
  add_max_level(verify);
  verify->add_option("--probe-radius", probe_radius)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const int cap = level_cap();
    const BuildOptions opts{cap};
    auto parse = [](const std::string& text) {
      return parse_word(text);
    };

    if (*build) {
      check_level(level, "--level");
      const auto g = build_level(parse(word), level, opts);
      std::ostringstream os;
      export_carpet(g, os, {parse_export_format(format), absolute});
      emit(output, os.str());
    } else if (*classify) {
      const WordSpec w = parse(word);
      emit(output, dump({{"word", to_string(w)}, {"profile", to_json_value(classify_directions(w))}}));
    } else if (*cat) {
      check_level(max_level, "--max-level");
      const WordSpec w = parse(word);
      BoundaryCatalog c = catalog(w);
      if (!no_evidence) {
        const Workspace ws(w, max_level, opts);
        c.evidence = catalog_evidence(ws, c);
      }
      emit(output, dump(to_json_value(c)));
    } else if (*dist) {
      check_level(level, "--level");
      const auto g = build_level(parse(word), level, opts);
      const Metric metric(g);
      std::cout << metric.distance(parse_coord(from_text), parse_coord(to_text)) << "\n";
    } else if (*horo) {
      check_level(max_level, "--max-level");
      const Workspace ws(parse(word), max_level, opts);
      const SequenceRep s = make_sequence(ws, parse_family(family), direction, k);
      auto lv = s.levels();
      if (lv.size() > tail) lv.erase(lv.begin(), lv.end() - static_cast<std::ptrdiff_t>(tail));
      const auto probes = ws.metric().ball(probe_radius);
      json rows = json::array();
      for (const ProbeRow& r : phi_table(ws, s, probes, lv)) {
        rows.push_back({{"probe", coord_json(r.probe)}, {"phi", r.phi1}});
      }
      emit(output, dump({{"word", to_string(ws.word())},
                         {"built_level", ws.level()},
                         {"sequence", to_json_value(s)},
                         {"levels", lv},
                         {"rows", rows}}));
    } else if (*rays) {
      check_level(max_level, "--max-level");
      const Workspace ws(parse(word), max_level, opts);
      const SequenceRep s = make_sequence(ws, parse_family(family), direction, k);
      const auto pts = s.ordered_points();
      const RaySample ray = ray_from_points(ws.metric(), pts);
      const RayCheckOptions ro{epsilon, tail_start};
      const auto probes = ws.metric().ball(probe_radius);
      json t = json::array();
      for (auto [tt, p] : ray.points) t.push_back({{"t", tt}, {"point", coord_json(p)}});
      emit(output, dump({{"word", to_string(ws.word())},
                         {"built_level", ws.level()},
                         {"sequence", to_json_value(s)},
                         {"sample", t},
                         {"weakly_geodesic", to_json_value(check_weakly_geodesic(ws.metric(), ray, probes, ro))},
                         {"almost_geodesic", to_json_value(check_almost_geodesic(ws.metric(), ray, ro))},
                         {"geodesic_chain", check_geodesic_chain(ws.metric(), pts)}}));
    } else if (*wit) {
      check_level(max_level, "--max-level");
      const Workspace ws(parse(word), max_level, opts);
      const SequenceRep s = make_sequence(ws, parse_family(family), direction, k);
      const auto found = nonbusemann_witness(ws, s, search_radius, witness_tail);
      json j = {{"word", to_string(ws.word())}, {"built_level", ws.level()}, {"sequence", to_json_value(s)},
                {"search_radius", search_radius}, {"tail", witness_tail}};
      j["witness"] = found ? json{coord_json(found->first), coord_json(found->second)} : json(nullptr);
      emit(output, dump(j));
    } else if (*iso) {
      const WordSpec u = parse(left), v = parse(right);
      const IsomorphismVerdict verdict = are_isomorphic(u, v);
      json j = {{"left", to_string(u)}, {"right", to_string(v)}, {"isomorphic", verdict.isomorphic}};
      j["sigma"] = verdict.witness ? json(verdict.witness->cycle_notation()) : json(nullptr);
      if (rooted_level) {
        check_level(*rooted_level, "--rooted-level");
        const auto f1 = whole_graph(build_level(u, *rooted_level, opts));
        const auto f2 = whole_graph(build_level(v, *rooted_level, opts));
        j["rooted"] = {{"level", *rooted_level},
                       {"abstract", rooted_isomorphic(f1, f2, RootedMatch::Abstract)},
                       {"embedded", rooted_isomorphic(f1, f2, RootedMatch::Embedded)}};
      }
      std::cout << dump(j);
    } else if (*sample) {
      emit(output, dump(to_json_value(sample_measure(samples, prefix_len, seed, workers))));
    } else if (*verify) {
      check_level(max_level, "--max-level");
      VerifyOptions vo;
      vo.max_level = max_level;
      vo.level_cap = cap;
      vo.probe_radius = probe_radius;
      const auto items = run_verify_suite(parse(word), vo);
      for (const auto& i : items) {
        std::cout << to_string(i.status) << "  " << i.name << "  " << i.detail << "\n";
      }
      const bool ok = all_passed(items);
      std::cout << (ok ? "verify: all checks passed" : "verify: FAILURES") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
