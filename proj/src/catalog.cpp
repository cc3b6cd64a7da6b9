#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "carpet/boundary.hpp"

namespace carpet {

std::string to_string(BoundaryLabel l) {
  switch (l) {
    case BoundaryLabel::zeta: return "zeta";
    case BoundaryLabel::beta: return "beta";
    case BoundaryLabel::xi: return "xi";
    case BoundaryLabel::eta: return "eta";
  }
  return "?";
}

std::string to_string(PointKind k) { return k == PointKind::Busemann ? "Busemann" : "non-Busemann"; }

std::string to_string(const IndexSet& s) {
  switch (s.kind) {
    case IndexSetKind::singleton: return "singleton";
    case IndexSetKind::all_of_Z: return "all-of-Z";
    case IndexSetKind::infinite_subset_of_Z: {
      std::string side = "bi";
      if (s.side == IndexSide::left) side = "left";
      if (s.side == IndexSide::right) side = "right";
      return "infinite-subset-of-Z(" + side + ")";
    }
  }
  return "?";
}

std::string BoundaryPointFamily::direction_name() const {
  return std::visit([](auto d) { return to_string(d); }, direction);
}

namespace {

int wrap8(int i) { return ((i % 8) + 8) % 8; }

auto family_key(const BoundaryPointFamily& f) {
  const int dir = f.direction.index() == 0 ? index(std::get<Direction>(f.direction))
                                           : slot(std::get<DiagonalDirection>(f.direction));
  return std::make_tuple(static_cast<int>(f.label), dir);
}

void sort_families(std::vector<BoundaryPointFamily>& fams) {
  std::sort(fams.begin(), fams.end(),
            [](const auto& a, const auto& b) { return family_key(a) < family_key(b); });
  fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
}

}  // namespace

BoundaryCatalog catalog(const WordSpec& w) {
  BoundaryCatalog c;
  c.word = w;
  c.profile = classify_directions(w);
  const LetterProfile n = letter_profile(w);

  std::set<int> odd_inf, even_inf;
  for (int i = 0; i < 8; ++i) {
    if (n.infinite(i)) ((i % 2) ? odd_inf : even_inf).insert(i);
  }

  auto beta = [&](int lo) {
    c.families.push_back({BoundaryLabel::beta,
                          diagonal_between(direction_from_index(lo), direction_from_index(wrap8(lo + 2))),
                          PointKind::Busemann,
                          {IndexSetKind::singleton, std::nullopt}});
  };

  for (int i : odd_inf) {
    c.families.push_back({BoundaryLabel::zeta, direction_from_index(i), PointKind::NonBusemann,
                          {IndexSetKind::all_of_Z, std::nullopt}});
    beta(wrap8(i - 2));
    beta(i);
  }
  if (odd_inf.empty()) {
    for (int j : even_inf) beta(wrap8(j - 1));
  }

  std::set<int> axis;
  for (int i : odd_inf) axis.insert({wrap8(i - 2), wrap8(i + 2)});
  for (int j : even_inf) axis.insert({wrap8(j - 1), wrap8(j + 1)});
  for (int i : odd_inf) axis.erase(i);
  for (int h : axis) {
    const Direction d = direction_from_index(h);
    // looking along d_h, the counterclockwise neighbour d_{h+2} is on the left
    const bool left = c.profile.grows(direction_from_index(wrap8(h + 2)));
    const bool right = c.profile.grows(direction_from_index(wrap8(h - 2)));
    const IndexSide side = left && right ? IndexSide::bi : (left ? IndexSide::left : IndexSide::right);
    const IndexSet set{IndexSetKind::infinite_subset_of_Z, side};
    c.families.push_back({BoundaryLabel::xi, d, PointKind::Busemann, set});
    c.families.push_back({BoundaryLabel::eta, d, PointKind::NonBusemann, set});
  }
  sort_families(c.families);
  return c;
}

namespace {

std::string family_name(const BoundaryPointFamily& f) {
  return to_string(f.label) + "(" + f.direction_name() + ")";
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

Evidence zeta_evidence(const Workspace& ws, const BoundaryPointFamily& fam) {
  const Direction dir = std::get<Direction>(fam.direction);
  Evidence e{family_name(fam), "antipodal equalities, witness pair, distinct from far corner", false,
             ws.level(), {}, {}};
  try {
    const SequenceRep z = antipodal_sequence(ws, dir);
    e.levels = z.levels();
    const bool balanced = antipodal_equalities_hold(ws, dir, z);
    const DirectionFrame f(dir);
    const std::vector<int> last(e.levels.end() - std::min<std::ptrdiff_t>(2, std::ssize(e.levels)),
                                e.levels.end());
    const bool witness = certify_witness(ws, z, f.across, Coord{} - f.across, last);
    std::string distinct = "skipped (fewer than 3 levels)";
    bool distinct_ok = true;
    if (z.points.size() >= 3) {
      const CornerSequences cs = corner_and_fg_sequences(ws, dir);
      const Distinction d = distinguish(ws, z, cs.C, 1, 3);
      distinct_ok = d.verdict == Verdict::Distinct;
      distinct = to_string(d.verdict);
    }
    e.pass = balanced && witness && distinct_ok;
    e.detail = std::string("equalities ") + (balanced ? "hold" : "fail") + "; witness " +
               to_string(f.across) + " / " + to_string(Coord{} - f.across) + " " +
               (witness ? "certified" : "rejected") + " at levels " + join(last) + "; vs far-plus corner: " +
               distinct;
  } catch (const std::exception& ex) {
    e.detail = std::string("not computable at this level: ") + ex.what();
  }
  return e;
}

Evidence beta_evidence(const Workspace& ws, const BoundaryPointFamily& fam) {
  const DiagonalDirection q = std::get<DiagonalDirection>(fam.direction);
  Evidence e{family_name(fam), "phi on ball(root,2) equals the quadrant linear form", false, ws.level(), {}, {}};
  try {
    const SequenceRep s = diagonal_sequence(ws, q);
    e.levels = s.levels();
    const std::vector<int> last = dominating_indices(s, 2);
    if (last.size() < 2) {
      e.detail = "fewer than 2 indices beyond the probe ball in the built level";
      return e;
    }
    const auto probes = ws.metric().ball(2);
    bool ok = true;
    for (const ProbeRow& row : phi_table(ws, s, probes, last)) {
      for (auto v : row.phi1) ok = ok && v == diagonal_phi_limit(q, row.probe);
    }
    e.pass = ok;
    e.detail = "indices " + join(last) + ": " + (ok ? "all probes match" : "mismatch");
  } catch (const std::exception& ex) {
    e.detail = std::string("not computable at this level: ") + ex.what();
  }
  return e;
}

Evidence axis_evidence(const Workspace& ws, const BoundaryPointFamily& fam) {
  const Direction dir = std::get<Direction>(fam.direction);
  Evidence e{family_name(fam), "straight rays traced (level-limited)", false, ws.level(), {}, {}};
  try {
    const AxisRayReport r = axis_ray_families(ws, dir, 20);
    const bool busemann = fam.label == BoundaryLabel::xi;
    e.pass = busemann ? !r.busemann_ks.empty() : !r.nonbusemann_ks.empty();
    e.detail = std::to_string(r.busemann_ks.size()) + " hole-free, " + std::to_string(r.nonbusemann_ks.size()) +
               " recurring, " + std::to_string(r.undecided_ks.size()) + " undecided offsets in |k| <= 20";
  } catch (const std::exception& ex) {
    e.detail = std::string("not computable: ") + ex.what();
  }
  return e;
}

}  // namespace

std::vector<Evidence> catalog_evidence(const Workspace& ws, const BoundaryCatalog& c) {
  std::vector<Evidence> out;
  for (const auto& fam : c.families) {
    switch (fam.label) {
      case BoundaryLabel::zeta: out.push_back(zeta_evidence(ws, fam)); break;
      case BoundaryLabel::beta: out.push_back(beta_evidence(ws, fam)); break;
      case BoundaryLabel::xi:
      case BoundaryLabel::eta: out.push_back(axis_evidence(ws, fam)); break;
    }
  }
  return out;
}

namespace {

bool reflects(const Symmetry& sigma) {
  // orientation of the odd cycle 1 -> 3 -> 5 -> 7
  return wrap8(sigma(3) - sigma(1)) != 2;
}

}  // namespace

BoundaryCatalog relabel(const BoundaryCatalog& c, const Symmetry& sigma) {
  auto dir = [&](Direction d) { return direction_from_index(sigma(index(d))); };
  auto quad = [&](DiagonalDirection q) {
    auto [lo, hi] = bounding_directions(q);
    return diagonal_between(dir(lo), dir(hi));
  };
  const bool flip = reflects(sigma);

  BoundaryCatalog out;
  out.word = apply_symmetry(sigma, c.word);
  for (Direction d : kDirections) {
    out.profile.growth[static_cast<std::size_t>(slot(dir(d)))] = c.profile.grows(d);
    out.profile.obstruction[static_cast<std::size_t>(slot(dir(d)))] = c.profile.obstructed(d);
  }
  for (DiagonalDirection q : kDiagonals) {
    out.profile.diagonal[static_cast<std::size_t>(slot(quad(q)))] = c.profile.grows(q);
  }
  for (BoundaryPointFamily f : c.families) {
    if (f.direction.index() == 0) {
      f.direction = dir(std::get<Direction>(f.direction));
    } else {
      f.direction = quad(std::get<DiagonalDirection>(f.direction));
    }
    if (flip && f.index_set.side && *f.index_set.side != IndexSide::bi) {
      f.index_set.side = *f.index_set.side == IndexSide::left ? IndexSide::right : IndexSide::left;
    }
    out.families.push_back(f);
  }
  sort_families(out.families);
  return out;
}

bool catalogs_isomorphic(const BoundaryCatalog& a, const BoundaryCatalog& b) {
  for (const Symmetry& sigma : group_elements()) {
    const BoundaryCatalog moved = relabel(a, sigma);
    if (moved.families == b.families && moved.profile == b.profile) return true;
  }
  return false;
}

}  // namespace carpet
