#include "carpet/word.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace carpet {

Letter::Letter(int value) : value_(value) {
  if (value < 0 || value > 7) {
    throw std::invalid_argument("letter out of range 0..7: " + std::to_string(value));
  }
}

char to_char(RootLetter y) { return static_cast<char>('a' + static_cast<int>(y)); }

std::optional<RootLetter> root_letter_from_char(char ch) {
  if (ch < 'a' || ch > 'd') return std::nullopt;
  return static_cast<RootLetter>(ch - 'a');
}

Letter WordSpec::letter(std::size_t i) const {
  if (i == 0) throw std::out_of_range("letters are indexed from 1");
  if (i <= prefix.size()) return prefix[i - 1];
  return cycle.at((i - 1 - prefix.size()) % cycle.size());
}

std::vector<Letter> WordSpec::letters_until_level(int n) const {
  std::vector<Letter> out;
  for (int i = 1; i < n; ++i) out.push_back(letter(static_cast<std::size_t>(i)));
  return out;
}

WordSpec WordSpec::normalized() const {
  WordSpec out = *this;
  // primitive cycle
  const std::size_t len = out.cycle.size();
  for (std::size_t p = 1; p <= len; ++p) {
    if (len % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < len && ok; ++i) ok = out.cycle[i] == out.cycle[i - p];
    if (ok) {
      out.cycle.resize(p);
      break;
    }
  }
  // absorb prefix tail into a rotated cycle
  while (!out.prefix.empty() && out.prefix.back() == out.cycle.back()) {
    std::rotate(out.cycle.rbegin(), out.cycle.rbegin() + 1, out.cycle.rend());
    out.prefix.pop_back();
  }
  return out;
}

namespace {

Letter parse_digit(char ch, std::string_view text) {
  if (ch < '0' || ch > '9') {
    throw ParseError("unexpected character '" + std::string(1, ch) + "' in word \"" +
                     std::string(text) + "\"");
  }
  if (ch > '7') {
    throw ParseError("letter " + std::string(1, ch) + " outside 0-7 in word \"" +
                     std::string(text) + "\"");
  }
  return Letter(ch - '0');
}

}  // namespace

WordSpec parse_word(std::string_view text, std::optional<Letter> terminal) {
  if (text.empty()) throw ParseError("empty word");
  WordSpec w;
  auto root = root_letter_from_char(text.front());
  if (!root) throw ParseError("word must start with a root letter a-d: \"" + std::string(text) + "\"");
  w.root = *root;

  std::size_t pos = 1;
  while (pos < text.size() && text[pos] != '(') {
    w.prefix.push_back(parse_digit(text[pos], text));
    ++pos;
  }
  if (pos == text.size()) {
    if (!terminal) {
      throw ParseError("word \"" + std::string(text) + "\" has no cycle part \"(...)*\"");
    }
    w.cycle.push_back(*terminal);
    return w;
  }
  ++pos;  // '('
  while (pos < text.size() && text[pos] != ')') {
    w.cycle.push_back(parse_digit(text[pos], text));
    ++pos;
  }
  if (pos == text.size()) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
  if (w.cycle.empty()) throw ParseError("empty cycle in \"" + std::string(text) + "\"");
  ++pos;  // ')'
  if (pos >= text.size() || text[pos] != '*') {
    throw ParseError("cycle must be followed by '*' in \"" + std::string(text) + "\"");
  }
  if (pos + 1 != text.size()) {
    throw ParseError("trailing characters after cycle in \"" + std::string(text) + "\"");
  }
  return w;
}

std::string to_string(const WordSpec& w) {
  std::string s(1, to_char(w.root));
  for (Letter x : w.prefix) s += static_cast<char>('0' + x.value());
  s += '(';
  for (Letter x : w.cycle) s += static_cast<char>('0' + x.value());
  s += ")*";
  return s;
}

LetterProfile letter_profile(const WordSpec& w) {
  LetterProfile p;
  for (auto& c : p.counts) c = LetterCount::Finite(0);
  for (Letter x : w.prefix) p.counts[static_cast<std::size_t>(x.value())].finite++;
  for (Letter x : w.cycle) p.counts[static_cast<std::size_t>(x.value())] = LetterCount::Infinite();
  return p;
}

// --- symmetries -----------------------------------------------------------

Symmetry::Symmetry() { std::iota(images_.begin(), images_.end(), 0); }

Symmetry::Symmetry(const std::array<int, 8>& images) : images_(images) {
  std::array<bool, 8> seen{};
  for (int v : images_) {
    if (v < 0 || v > 7 || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of {0..7}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Symmetry Symmetry::compose(const Symmetry& rhs) const {
  std::array<int, 8> out{};
  for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = (*this)(rhs(i));
  return Symmetry(out);
}

Symmetry Symmetry::inverse() const {
  std::array<int, 8> out{};
  for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>((*this)(i))] = i;
  return Symmetry(out);
}

bool Symmetry::is_identity() const { return *this == Symmetry(); }

std::string Symmetry::cycle_notation() const {
  std::string s;
  std::array<bool, 8> done{};
  for (int start = 0; start < 8; ++start) {
    if (done[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    s += '(';
    int i = start;
    while (!done[static_cast<std::size_t>(i)]) {
      done[static_cast<std::size_t>(i)] = true;
      s += static_cast<char>('0' + i);
      i = (*this)(i);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Symmetry parse_cycles(std::string_view text) {
  std::array<int, 8> images{};
  std::iota(images.begin(), images.end(), 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    while (pos < text.size() && text[pos] != ')') {
      cyc.push_back(parse_digit(text[pos], text).value());
      ++pos;
    }
    if (pos == text.size()) throw ParseError("unterminated cycle");
    ++pos;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      images[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Symmetry(images);
}

const Symmetry& rotation_generator() {
  static const Symmetry r = parse_cycles("(1357)");
  return r;
}

const Symmetry& reflection_generator() {
  static const Symmetry s = parse_cycles("(04)(13)(57)");
  return s;
}

const std::vector<Symmetry>& group_elements() {
  static const std::vector<Symmetry> elements = [] {
    const std::array<Symmetry, 2> gens{rotation_generator(), reflection_generator()};
    std::vector<Symmetry> out{Symmetry()};
    std::set<Symmetry> seen{Symmetry()};
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (const auto& g : gens) {
        Symmetry next = g.compose(out[head]);
        if (seen.insert(next).second) out.push_back(next);
      }
    }
    return out;
  }();
  return elements;
}

WordSpec apply_symmetry(const Symmetry& sigma, const WordSpec& w) {
  WordSpec out = w;
  for (auto& x : out.prefix) x = sigma(x);
  for (auto& x : out.cycle) x = sigma(x);
  return out;
}

bool cofinal(const WordSpec& u, const WordSpec& v) {
  // Past both prefixes the two words are periodic with period lcm of the
  // cycle lengths, so one full period decides equality of the tails.
  const std::size_t start = std::max(u.prefix.size(), v.prefix.size()) + 1;
  const std::size_t period = std::lcm(u.cycle.size(), v.cycle.size());
  for (std::size_t i = start; i < start + period; ++i) {
    if (u.letter(i) != v.letter(i)) return false;
  }
  return true;
}

IsomorphismVerdict are_isomorphic(const WordSpec& u, const WordSpec& v) {
  for (const auto& sigma : group_elements()) {
    if (cofinal(apply_symmetry(sigma, u), v)) return {true, sigma};
  }
  return {false, std::nullopt};
}

}  // namespace carpet
