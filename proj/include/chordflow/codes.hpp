#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chordflow/diagram.hpp"
#include "chordflow/error.hpp"

namespace chordflow {

/// A number in a diagram code, optionally followed by a dash (').
/// Ordered by number, then undashed before dashed.
struct CodeToken {
  int number = 0;
  bool dashed = false;

  friend constexpr auto operator<=>(const CodeToken&, const CodeToken&) = default;
};

enum class DiagramKind { Base, SN, SC };

constexpr std::string_view kind_name(DiagramKind k) noexcept {
  switch (k) {
    case DiagramKind::Base: return "base";
    case DiagramKind::SN: return "SN";
    case DiagramKind::SC: return "SC";
  }
  return "?";
}

struct DiagramCode {
  DiagramKind kind = DiagramKind::SN;
  std::vector<CodeToken> tokens;

  friend auto operator<=>(const DiagramCode&, const DiagramCode&) = default;
  friend bool operator==(const DiagramCode&, const DiagramCode&) = default;
};

enum class Direction { ccw, cw };

using AnyDiagram = std::variant<ChordDiagram, CDiagram, TDiagram>;

namespace detail {

/// Numbers chord ends by first encounter starting at `first_number`; a cross
/// chord gets its dash on the first occurrence.
class ChordNumberer {
 public:
  ChordNumberer(const std::vector<ChordColor>& colors, int first_number)
      : colors_(colors), next_(first_number) {}

  CodeToken operator()(int chord) {
    auto [it, inserted] = number_.emplace(chord, next_);
    if (inserted) {
      ++next_;
      return {it->second, colors_[chord] == ChordColor::cross};
    }
    return {it->second, false};
  }

 private:
  const std::vector<ChordColor>& colors_;
  std::map<int, int> number_;
  int next_;
};

inline DiagramCode emit_ccw(const CDiagram& d) {
  DiagramCode code{DiagramKind::SN, {}};
  ChordNumberer number(d.colors(), 1);
  const auto& sites = d.arrangement().sites();
  for (std::size_t i = 1; i < sites.size(); ++i) {
    if (sites[i].kind == SiteKind::ArcEnd) code.tokens.push_back({0, false});
    else code.tokens.push_back(number(sites[i].chord));
  }
  return code;
}

inline DiagramCode emit_ccw(const TDiagram& d) {
  DiagramCode code{DiagramKind::SC, {}};
  ChordNumberer number(d.colors(), 2);
  for (const Site& s : d.arrangement().sites()) {
    switch (s.kind) {
      case SiteKind::TLower: code.tokens.push_back({0, d.edges().lower == ChordColor::cross}); break;
      case SiteKind::TSideA: code.tokens.push_back({1, d.edges().side_a == ChordColor::cross}); break;
      case SiteKind::TSideB: code.tokens.push_back({1, d.edges().side_b == ChordColor::cross}); break;
      default: code.tokens.push_back(number(s.chord)); break;
    }
  }
  return code;
}

/// Bare chord diagrams have no base point; this reads from the gap just
/// before site `start`.
inline DiagramCode emit_from(const ChordDiagram& d, std::size_t start) {
  DiagramCode code{DiagramKind::Base, {}};
  ChordNumberer number(d.colors(), 1);
  const auto& sites = d.arrangement().sites();
  for (std::size_t k = 0; k < sites.size(); ++k)
    code.tokens.push_back(number(sites[(start + k) % sites.size()].chord));
  return code;
}

}  // namespace detail

/// SN: read from the first end of the marked arc in the given direction; the
/// other arc end is 0. SC: read from the lower end of T (0); side ends are 1.
inline DiagramCode emit_code(const CDiagram& d, Direction dir = Direction::ccw) {
  return dir == Direction::ccw ? detail::emit_ccw(d) : detail::emit_ccw(reflect(d));
}

inline DiagramCode emit_code(const TDiagram& d, Direction dir = Direction::ccw) {
  return dir == Direction::ccw ? detail::emit_ccw(d) : detail::emit_ccw(reflect(d));
}

inline DiagramCode emit_code(const ChordDiagram& d, Direction dir = Direction::ccw) {
  return dir == Direction::ccw ? detail::emit_from(d, 0) : detail::emit_from(reflect(d), 0);
}

inline DiagramCode emit_code(const AnyDiagram& d, Direction dir = Direction::ccw) {
  return std::visit([dir](const auto& x) { return emit_code(x, dir); }, d);
}

inline DiagramCode canonical_code(const CDiagram& d) {
  return std::min(emit_code(d, Direction::ccw), emit_code(d, Direction::cw));
}

inline DiagramCode canonical_code(const TDiagram& d) {
  return std::min(emit_code(d, Direction::ccw), emit_code(d, Direction::cw));
}

/// Minimum over every starting gap and both directions.
inline DiagramCode canonical_code(const ChordDiagram& d) {
  const ChordDiagram mirror = reflect(d);
  DiagramCode best = detail::emit_from(d, 0);
  for (std::size_t s = 0; s < d.arrangement().size(); ++s) {
    best = std::min(best, detail::emit_from(d, s));
    best = std::min(best, detail::emit_from(mirror, s));
  }
  return best;
}

inline DiagramCode canonical_code(const AnyDiagram& d) {
  return std::visit([](const auto& x) { return canonical_code(x); }, d);
}

namespace detail {

/// Checks the chord part of a code: every number >= first appears exactly
/// twice, first occurrences come in increasing order, dashes only on first
/// occurrences. Returns the color of each chord, indexed from `first`.
inline std::vector<ChordColor> check_chord_tokens(const std::vector<CodeToken>& tokens, int first) {
  std::map<int, int> count;
  int expected = first;
  std::vector<ChordColor> colors;
  for (const CodeToken& t : tokens) {
    if (t.number < first) continue;
    int& c = count[t.number];
    ++c;
    if (c == 1) {
      if (t.number != expected)
        throw Error(ErrorCode::BadFirstEncounterOrder,
                    "expected " + std::to_string(expected) + ", found " + std::to_string(t.number));
      ++expected;
      colors.push_back(t.dashed ? ChordColor::cross : ChordColor::plain);
    } else if (t.dashed) {
      throw Error(ErrorCode::MisplacedDash,
                  "dash on second occurrence of " + std::to_string(t.number));
    }
  }
  for (const auto& [n, c] : count)
    if (c != 2)
      throw Error(ErrorCode::BadMultiplicity,
                  std::to_string(n) + " appears " + std::to_string(c) + " times");
  return colors;
}

inline std::map<int, ChordColor> colors_from(const std::vector<ChordColor>& colors, int first) {
  std::map<int, ChordColor> m;
  for (std::size_t i = 0; i < colors.size(); ++i) m.emplace(first + static_cast<int>(i), colors[i]);
  return m;
}

}  // namespace detail

inline CDiagram parse_sn_code(const DiagramCode& code) {
  const auto& tokens = code.tokens;
  const auto zeros = std::count_if(tokens.begin(), tokens.end(), [](auto t) { return t.number == 0; });
  if (zeros != 1)
    throw Error(ErrorCode::BadMultiplicity, "SN code needs exactly one 0, found " + std::to_string(zeros));
  for (const CodeToken& t : tokens) {
    if (t.number < 0) throw Error(ErrorCode::SyntaxError, "negative number");
    if (t.number == 0 && t.dashed) throw Error(ErrorCode::DashOnArcEnd, "the marked arc has no color");
  }
  auto colors = detail::check_chord_tokens(tokens, 1);
  std::vector<Site> sites{kArcStart};
  for (const CodeToken& t : tokens)
    sites.push_back(t.number == 0 ? kArcEnd : Site::chord_end(t.number));
  return make_c_diagram(sites, detail::colors_from(colors, 1));
}

inline TDiagram parse_sc_code(const DiagramCode& code) {
  const auto& tokens = code.tokens;
  const auto zeros = std::count_if(tokens.begin(), tokens.end(), [](auto t) { return t.number == 0; });
  if (zeros != 1)
    throw Error(ErrorCode::BadMultiplicity, "SC code needs exactly one 0, found " + std::to_string(zeros));
  if (tokens.front().number != 0)
    throw Error(ErrorCode::BadFirstEncounterOrder, "SC code must begin with 0");
  const auto ones = std::count_if(tokens.begin(), tokens.end(), [](auto t) { return t.number == 1; });
  if (ones != 2)
    throw Error(ErrorCode::BadTCount, "SC code needs exactly two 1s, found " + std::to_string(ones));
  for (const CodeToken& t : tokens)
    if (t.number < 0) throw Error(ErrorCode::SyntaxError, "negative number");
  auto colors = detail::check_chord_tokens(tokens, 2);

  std::vector<Site> sites;
  TEdgeColors edges;
  bool first_side = true;
  for (const CodeToken& t : tokens) {
    const ChordColor c = t.dashed ? ChordColor::cross : ChordColor::plain;
    if (t.number == 0) {
      sites.push_back(kTLower);
      edges.lower = c;
    } else if (t.number == 1) {
      sites.push_back(first_side ? kTSideA : kTSideB);
      (first_side ? edges.side_a : edges.side_b) = c;
      first_side = false;
    } else {
      sites.push_back(Site::chord_end(t.number));
    }
  }
  return make_t_diagram(sites, detail::colors_from(colors, 2), edges);
}

inline ChordDiagram parse_base_code(const DiagramCode& code) {
  for (const CodeToken& t : code.tokens)
    if (t.number < 1) throw Error(ErrorCode::BadMultiplicity, "base code has only chord numbers >= 1");
  auto colors = detail::check_chord_tokens(code.tokens, 1);
  std::vector<Site> sites;
  for (const CodeToken& t : code.tokens) sites.push_back(Site::chord_end(t.number));
  return make_chord_diagram(sites, detail::colors_from(colors, 1));
}

/// Rebuilds the unique diagram whose counterclockwise emission is `code`.
inline AnyDiagram parse_code(const DiagramCode& code) {
  if (code.tokens.empty() && code.kind != DiagramKind::Base)
    throw Error(ErrorCode::BadMultiplicity, "empty code");
  switch (code.kind) {
    case DiagramKind::SN: return parse_sn_code(code);
    case DiagramKind::SC: return parse_sc_code(code);
    case DiagramKind::Base: return parse_base_code(code);
  }
  throw Error(ErrorCode::UnknownKind, "unknown code kind");
}

inline DiagramKind kind_of(const AnyDiagram& d) noexcept {
  switch (d.index()) {
    case 0: return DiagramKind::Base;
    case 1: return DiagramKind::SN;
    default: return DiagramKind::SC;
  }
}

/// Equal canonical codes; equivalence includes reflection of the circle.
inline bool is_isomorphic(const AnyDiagram& a, const AnyDiagram& b) {
  if (a.index() != b.index())
    throw Error(ErrorCode::KindMismatch, "cannot compare diagrams of different kinds");
  return canonical_code(a) == canonical_code(b);
}

// ---- text form -------------------------------------------------------------

/// Space-separated tokens, no trailing whitespace.
inline std::string format_code(const DiagramCode& code) {
  std::string out;
  for (std::size_t i = 0; i < code.tokens.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(code.tokens[i].number);
    if (code.tokens[i].dashed) out += '\'';
  }
  return out;
}

/// Concatenated form, only defined when every number is a single digit.
inline std::optional<std::string> format_compact(const DiagramCode& code) {
  std::string out;
  for (const CodeToken& t : code.tokens) {
    if (t.number > 9) return std::nullopt;
    out += static_cast<char>('0' + t.number);
    if (t.dashed) out += '\'';
  }
  return out;
}

/// Accepts the space-separated grammar or, when the text has no whitespace,
/// the compact one-digit-per-token form.
inline std::vector<CodeToken> read_tokens(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  const bool compact = std::none_of(text.begin(), text.end(), is_space);

  std::vector<CodeToken> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, text[i]) + "'");
    CodeToken t;
    if (compact) {
      t.number = text[i++] - '0';
    } else {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j - i > 6) throw Error(ErrorCode::SyntaxError, "number too long");
      t.number = std::stoi(std::string(text.substr(i, j - i)));
      i = j;
    }
    if (i < text.size() && text[i] == '\'') {
      t.dashed = true;
      ++i;
    }
    if (!compact && i < text.size() && !is_space(text[i]))
      throw Error(ErrorCode::SyntaxError, "tokens must be separated by spaces");
    tokens.push_back(t);
  }
  return tokens;
}

inline DiagramCode read_code(std::string_view text, DiagramKind kind) {
  return DiagramCode{kind, read_tokens(text)};
}

/// Reads a code and infers its kind: no 0 token means a base diagram; a code
/// valid as both SC and SN is taken as SC.
inline AnyDiagram read_diagram(std::string_view text, std::optional<DiagramKind> kind = std::nullopt) {
  const std::vector<CodeToken> tokens = read_tokens(text);
  if (kind) return parse_code(DiagramCode{*kind, tokens});
  const bool has_zero = std::any_of(tokens.begin(), tokens.end(), [](const CodeToken& t) { return t.number == 0; });
  if (!has_zero) return parse_base_code(DiagramCode{DiagramKind::Base, tokens});
  std::optional<Error> sc_error;
  try {
    return parse_sc_code(DiagramCode{DiagramKind::SC, tokens});
  } catch (const Error& e) {
    sc_error = e;
  }
  try {
    return parse_sn_code(DiagramCode{DiagramKind::SN, tokens});
  } catch (const Error& e) {
    const auto ones = std::count_if(tokens.begin(), tokens.end(), [](const CodeToken& t) { return t.number == 1; });
    if (tokens.front().number == 0 && ones == 2) throw *sc_error;
    throw;
  }
}

}  // namespace chordflow
