#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace carpet {

struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Coord operator-(Coord a, Coord b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Coord operator*(std::int64_t k, Coord a) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Coord, Coord) = default;
  // row-major: y first, then x
  friend constexpr auto operator<=>(Coord a, Coord b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

constexpr std::int64_t dot(Coord a, Coord b) { return a.x * b.x + a.y * b.y; }
constexpr std::int64_t l1(Coord a, Coord b) {
  return (a.x > b.x ? a.x - b.x : b.x - a.x) + (a.y > b.y ? a.y - b.y : b.y - a.y);
}
constexpr std::int64_t l1(Coord a) { return l1(a, Coord{}); }

inline std::ostream& operator<<(std::ostream& os, Coord c) {
  return os << '(' << c.x << ',' << c.y << ')';
}
std::string to_string(Coord c);
/// "x,y"
Coord parse_coord(std::string_view text);

struct CoordHash {
  std::size_t operator()(Coord c) const noexcept {
    return std::hash<std::int64_t>{}(c.x * 0x9E3779B97F4A7C15LL ^ c.y);
  }
};

constexpr std::array<Coord, 4> kLatticeSteps{Coord{1, 0}, Coord{0, 1}, Coord{-1, 0}, Coord{0, -1}};

/// Axis directions, named by the odd letter whose occurrence places a hole there.
enum class Direction : std::uint8_t { d1 = 1, d3 = 3, d5 = 5, d7 = 7 };
/// Open quadrants; d71 is x>0,y>0, then counterclockwise.
enum class DiagonalDirection : std::uint8_t { d71, d13, d35, d57 };

constexpr std::array<Direction, 4> kDirections{Direction::d1, Direction::d3, Direction::d5,
                                               Direction::d7};
constexpr std::array<DiagonalDirection, 4> kDiagonals{DiagonalDirection::d71, DiagonalDirection::d13,
                                                      DiagonalDirection::d35, DiagonalDirection::d57};

constexpr int index(Direction d) { return static_cast<int>(d); }
Direction direction_from_index(int odd);  // throws on non-odd / out of range

std::string to_string(Direction d);
std::string to_string(DiagonalDirection q);
Direction parse_direction(std::string_view text);
DiagonalDirection parse_diagonal(std::string_view text);

Coord unit_vector(Direction d);

/// Quadrant d_{i,i+2}: its two bounding axis directions (i, i+2 mod 8).
std::pair<Direction, Direction> bounding_directions(DiagonalDirection q);
DiagonalDirection diagonal_between(Direction a, Direction b);  // a,b adjacent

/// One of the 8 symmetries of the square lattice fixing the origin, as a 2x2
/// integer matrix [[a b],[c d]].
struct LatticeSymmetry {
  int a = 1, b = 0, c = 0, d = 1;

  constexpr Coord operator()(Coord p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  constexpr LatticeSymmetry compose(LatticeSymmetry r) const {
    return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
  }
  constexpr LatticeSymmetry inverse() const { return {a, c, b, d}; }  // orthogonal
  constexpr bool is_reflection() const { return a * d - b * c < 0; }
  friend constexpr bool operator==(LatticeSymmetry, LatticeSymmetry) = default;
};

const std::array<LatticeSymmetry, 8>& lattice_symmetries();

/// Coordinates adapted to a direction: `along` is the unit vector of the
/// direction, `across` its counterclockwise rotation. For d7 this is the
/// identity frame.
struct DirectionFrame {
  Coord along;
  Coord across;

  explicit DirectionFrame(Direction d);

  Coord to_world(std::int64_t p, std::int64_t q) const { return p * along + q * across; }
  std::int64_t along_of(Coord c) const { return dot(c, along); }
  std::int64_t across_of(Coord c) const { return dot(c, across); }
};

}  // namespace carpet
