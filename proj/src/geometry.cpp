#include "carpet/geometry.hpp"

#include <charconv>
#include <stdexcept>

namespace carpet {

std::string to_string(Coord c) { return std::to_string(c.x) + "," + std::to_string(c.y); }

Coord parse_coord(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("expected coordinate \"x,y\", got \"" + std::string(text) + "\"");
  }
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("bad integer \"" + std::string(part) + "\" in coordinate");
    }
    return v;
  };
  return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

Direction direction_from_index(int odd) {
  switch (odd) {
    case 1: return Direction::d1;
    case 3: return Direction::d3;
    case 5: return Direction::d5;
    case 7: return Direction::d7;
    default: throw std::invalid_argument("not an axis direction index: " + std::to_string(odd));
  }
}

std::string to_string(Direction d) { return "d" + std::to_string(index(d)); }

std::string to_string(DiagonalDirection q) {
  switch (q) {
    case DiagonalDirection::d71: return "d71";
    case DiagonalDirection::d13: return "d13";
    case DiagonalDirection::d35: return "d35";
    case DiagonalDirection::d57: return "d57";
  }
  return "?";
}

Direction parse_direction(std::string_view text) {
  if (text.size() == 2 && text[0] == 'd') return direction_from_index(text[1] - '0');
  throw std::invalid_argument("unknown direction \"" + std::string(text) + "\" (d1|d3|d5|d7)");
}

DiagonalDirection parse_diagonal(std::string_view text) {
  for (auto q : kDiagonals) {
    if (to_string(q) == text) return q;
  }
  throw std::invalid_argument("unknown quadrant \"" + std::string(text) + "\" (d71|d13|d35|d57)");
}

Coord unit_vector(Direction d) {
  switch (d) {
    case Direction::d1: return {0, 1};
    case Direction::d3: return {-1, 0};
    case Direction::d5: return {0, -1};
    case Direction::d7: return {1, 0};
  }
  return {};
}

std::pair<Direction, Direction> bounding_directions(DiagonalDirection q) {
  switch (q) {
    case DiagonalDirection::d71: return {Direction::d7, Direction::d1};
    case DiagonalDirection::d13: return {Direction::d1, Direction::d3};
    case DiagonalDirection::d35: return {Direction::d3, Direction::d5};
    case DiagonalDirection::d57: return {Direction::d5, Direction::d7};
  }
  return {};
}

DiagonalDirection diagonal_between(Direction a, Direction b) {
  for (auto q : kDiagonals) {
    auto [lo, hi] = bounding_directions(q);
    if ((lo == a && hi == b) || (lo == b && hi == a)) return q;
  }
  throw std::invalid_argument("directions " + to_string(a) + " and " + to_string(b) +
                              " are not adjacent");
}

const std::array<LatticeSymmetry, 8>& lattice_symmetries() {
  static const std::array<LatticeSymmetry, 8> all{{
      {1, 0, 0, 1},    // identity
      {0, -1, 1, 0},   // rotate 90
      {-1, 0, 0, -1},  // rotate 180
      {0, 1, -1, 0},   // rotate 270
      {1, 0, 0, -1},   // mirror y
      {-1, 0, 0, 1},   // mirror x
      {0, 1, 1, 0},    // mirror diagonal
      {0, -1, -1, 0},  // mirror antidiagonal
  }};
  return all;
}

DirectionFrame::DirectionFrame(Direction d)
    : along(unit_vector(d)), across{-unit_vector(d).y, unit_vector(d).x} {}

}  // namespace carpet
