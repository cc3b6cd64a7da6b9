#include <json.hpp>

#include "carpet/builder.hpp"

namespace carpet {

ExportFormat parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::dot;
  if (text == "csv") return ExportFormat::csv;
  if (text == "json") return ExportFormat::json;
  throw std::invalid_argument("unknown export format \"" + std::string(text) + "\" (dot|csv|json)");
}

namespace {

std::string dot_name(Coord c) { return std::to_string(c.x) + "_" + std::to_string(c.y); }

nlohmann::json coord_json(Coord c) { return nlohmann::json::array({c.x, c.y}); }

}  // namespace

void export_carpet(const FiniteCarpet& g, std::ostream& out, const ExportOptions& opts) {
  auto frame = [&](Coord abs) { return opts.absolute ? abs : g.to_relative(abs); };
  const auto vertices = g.vertices();
  const auto edges = g.edges();

  switch (opts.format) {
    case ExportFormat::dot: {
      out << "graph carpet {\n";
      out << "  // level " << g.level() << ", word " << to_string(g.word()) << "\n";
      for (Coord v : vertices) {
        out << "  \"" << dot_name(frame(v)) << "\"";
        if (v == g.root_abs()) out << " [root=true]";
        out << ";\n";
      }
      for (auto [a, b] : edges) {
        out << "  \"" << dot_name(frame(a)) << "\" -- \"" << dot_name(frame(b)) << "\";\n";
      }
      out << "}\n";
      break;
    }
    case ExportFormat::csv: {
      out << "# vertices\n";
      for (Coord v : vertices) out << to_string(frame(v)) << "\n";
      out << "# edges\n";
      for (auto [a, b] : edges) out << to_string(frame(a)) << "," << to_string(frame(b)) << "\n";
      break;
    }
    case ExportFormat::json: {
      nlohmann::json j;
      j["level"] = g.level();
      j["side"] = g.side();
      j["word"] = to_string(g.word());
      j["frame"] = opts.absolute ? "absolute" : "relative";
      j["root"] = coord_json(frame(g.root_abs()));
      auto& jv = j["vertices"] = nlohmann::json::array();
      for (Coord v : vertices) jv.push_back(coord_json(frame(v)));
      auto& je = j["edges"] = nlohmann::json::array();
      for (auto [a, b] : edges) je.push_back({coord_json(frame(a)), coord_json(frame(b))});
      auto& jh = j["holes"] = nlohmann::json::array();
      for (const Hole& h : enumerate_holes(g, 2)) {
        jh.push_back({{"level", h.level},
                      {"A", coord_json(frame(h.A))},
                      {"B", coord_json(frame(h.B))},
                      {"C", coord_json(frame(h.C))},
                      {"D", coord_json(frame(h.D))}});
      }
      out << j.dump() << "\n";
      break;
    }
  }
  if (!out) throw std::runtime_error("failed to write carpet export");
}

}  // namespace carpet
