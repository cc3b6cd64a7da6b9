#include "carpet/serialize.hpp"

namespace carpet {

using nlohmann::json;

json coord_json(Coord c) { return json::array({c.x, c.y}); }

json to_json_value(const DirectionProfile& p) {
  json growth = json::object(), obstruction = json::object(), diagonal = json::object();
  for (Direction d : kDirections) {
    growth[to_string(d)] = p.grows(d);
    obstruction[to_string(d)] = p.obstructed(d);
  }
  for (DiagonalDirection q : kDiagonals) diagonal[to_string(q)] = p.grows(q);
  return {{"growth", growth}, {"obstruction", obstruction}, {"diagonal", diagonal}};
}

json to_json_value(const BoundaryPointFamily& f) {
  json index_set = {{"kind", f.index_set.kind == IndexSetKind::singleton   ? "singleton"
                             : f.index_set.kind == IndexSetKind::all_of_Z ? "all-of-Z"
                                                                          : "infinite-subset-of-Z"}};
  if (f.index_set.side) {
    index_set["side"] = *f.index_set.side == IndexSide::left    ? "left"
                        : *f.index_set.side == IndexSide::right ? "right"
                                                                : "bi";
  }
  return {{"label", to_string(f.label)},
          {"direction", f.direction_name()},
          {"kind", to_string(f.kind)},
          {"index_set", index_set}};
}

json to_json_value(const Evidence& e) {
  return {{"family", e.family}, {"check", e.check},   {"pass", e.pass},
          {"built_level", e.built_level}, {"levels", e.levels}, {"detail", e.detail}};
}

json to_json_value(const BoundaryCatalog& c) {
  json fams = json::array(), ev = json::array();
  for (const auto& f : c.families) fams.push_back(to_json_value(f));
  for (const auto& e : c.evidence) ev.push_back(to_json_value(e));
  return {{"word", to_string(c.word)},
          {"classification", "symbolic, from the letter-frequency case split"},
          {"profile", to_json_value(c.profile)},
          {"families", fams},
          {"evidence", ev}};
}

json to_json_value(const SequenceRep& s) {
  json pts = json::array();
  for (const auto& [m, p] : s.points) pts.push_back({{"index", m}, {"point", coord_json(p)}});
  json dropped = json::array();
  for (const auto& [m, why] : s.dropped) dropped.push_back({{"index", m}, {"reason", why}});
  json j = {{"family", to_string(s.family)}, {"direction", s.direction_name()}, {"points", pts},
            {"dropped", dropped}};
  if (s.family == SequenceFamily::shifted_antipodal || s.family == SequenceFamily::axis_ray) j["k"] = s.k;
  return j;
}

json to_json_value(const Distinction& d) {
  json rows = json::array();
  for (const auto& r : d.rows) {
    rows.push_back({{"probe", coord_json(r.probe)}, {"phi1", r.phi1}, {"phi2", r.phi2}});
  }
  json j = {{"verdict", to_string(d.verdict)}, {"levels1", d.levels1}, {"levels2", d.levels2}, {"rows", rows}};
  j["witness"] = d.witness ? coord_json(*d.witness) : json(nullptr);
  return j;
}

json to_json_value(const RayCheck& r) {
  return {{"pass", r.pass},
          {"worst_violation", r.worst_violation},
          {"tail_start", r.tail_start},
          {"per_point", r.per_point}};
}

json to_json_value(const AxisRayReport& r) {
  json rays = json::array();
  for (const auto& ray : r.rays) {
    json hits = json::array();
    for (const auto& h : ray.hits) {
      hits.push_back({{"step", h.step}, {"level", h.hole.level}, {"A", coord_json(h.hole.A)}});
    }
    rays.push_back({{"k", ray.k},
                    {"start", ray.start},
                    {"length", ray.length},
                    {"max_hole_level", ray.max_hole_level},
                    {"recurring_steps", ray.recurring_steps},
                    {"hits", hits}});
  }
  return {{"direction", to_string(r.dir)},
          {"built_level", r.built_level},
          {"certificates", "level-limited"},
          {"busemann_ks", r.busemann_ks},
          {"nonbusemann_ks", r.nonbusemann_ks},
          {"undecided_ks", r.undecided_ks},
          {"rays", rays}};
}

json to_json_value(const MeasureResult& m) {
  return {{"samples", m.samples},
          {"prefix_len", m.prefix_len},
          {"seed", m.seed},
          {"fraction_all_letters", m.fraction_all_letters},
          {"histogram", m.histogram}};
}

}  // namespace carpet
