#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace carpet {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A letter of the position alphabet {0,...,7}.
class Letter {
 public:
  constexpr Letter() = default;
  explicit Letter(int value);

  constexpr int value() const { return value_; }
  constexpr bool is_odd() const { return (value_ & 1) != 0; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  int value_ = 0;
};

/// Starting corner of the 4-cycle: a, b, c, d counterclockwise from bottom-left.
enum class RootLetter : std::uint8_t { a, b, c, d };

char to_char(RootLetter y);
std::optional<RootLetter> root_letter_from_char(char ch);

/// An eventually periodic word y x1 x2 ... = root · prefix · cycle^∞.
struct WordSpec {
  RootLetter root = RootLetter::a;
  std::vector<Letter> prefix;
  std::vector<Letter> cycle;  // never empty

  /// Letter x_i, 1-based.
  Letter letter(std::size_t i) const;

  /// The first n-1 letters x1..x_{n-1} (the part that determines the root of Γ^n).
  std::vector<Letter> letters_until_level(int n) const;

  /// Same infinite word with the shortest prefix and a primitive cycle.
  WordSpec normalized() const;

  friend bool operator==(const WordSpec&, const WordSpec&) = default;
};

/// Accepts `<y><digits>(<digits>)*`. With `terminal` set, a bare `<y><digits>`
/// is completed to `<y><digits>(<terminal>)*`.
WordSpec parse_word(std::string_view text, std::optional<Letter> terminal = std::nullopt);

/// Canonical form `y` + prefix digits + `(` cycle digits `)*`.
std::string to_string(const WordSpec& w);

/// N_i for one letter: either a finite count or infinitely many occurrences.
struct LetterCount {
  bool infinite = false;
  std::size_t finite = 0;  // meaningful only when !infinite

  static LetterCount Infinite() { return {true, 0}; }
  static LetterCount Finite(std::size_t n) { return {false, n}; }

  friend bool operator==(const LetterCount&, const LetterCount&) = default;
};

struct LetterProfile {
  std::array<LetterCount, 8> counts;

  const LetterCount& operator[](int i) const { return counts.at(static_cast<std::size_t>(i)); }
  bool infinite(int i) const { return (*this)[i].infinite; }

  friend bool operator==(const LetterProfile&, const LetterProfile&) = default;
};

LetterProfile letter_profile(const WordSpec& w);

/// A permutation of {0,...,7} belonging to the group generated by (1357) and (04)(13)(57).
class Symmetry {
 public:
  /// Identity.
  Symmetry();
  /// Throws std::invalid_argument when `images` is not a permutation.
  explicit Symmetry(const std::array<int, 8>& images);

  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  Letter operator()(Letter x) const { return Letter((*this)(x.value())); }

  /// (*this ∘ rhs)(i) = (*this)(rhs(i))
  Symmetry compose(const Symmetry& rhs) const;
  Symmetry inverse() const;
  bool is_identity() const;

  /// Cycle notation, e.g. "(04)(13)(57)"; identity prints as "()".
  std::string cycle_notation() const;

  const std::array<int, 8>& images() const { return images_; }

  friend bool operator==(const Symmetry&, const Symmetry&) = default;
  friend auto operator<=>(const Symmetry& a, const Symmetry& b) { return a.images_ <=> b.images_; }

 private:
  std::array<int, 8> images_;
};

/// Parses cycle notation such as "(1357)" or "(04)(13)(57)".
Symmetry parse_cycles(std::string_view text);

const Symmetry& rotation_generator();    // (1357)
const Symmetry& reflection_generator();  // (04)(13)(57)

/// All elements generated by the two generators, identity first, then in
/// breadth-first order of word length over (rotation, reflection).
const std::vector<Symmetry>& group_elements();

WordSpec apply_symmetry(const Symmetry& sigma, const WordSpec& w);

/// True iff the X-parts of u and v agree from some index on.
bool cofinal(const WordSpec& u, const WordSpec& v);

struct IsomorphismVerdict {
  bool isomorphic = false;
  std::optional<Symmetry> witness;
};

/// Unrooted isomorphism of Γ_u and Γ_v: some σ in the group makes σ(u) cofinal with v.
IsomorphismVerdict are_isomorphic(const WordSpec& u, const WordSpec& v);

}  // namespace carpet
