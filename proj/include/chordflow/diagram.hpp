#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordflow/error.hpp"

namespace chordflow {

enum class SiteKind : std::uint8_t { Chord, ArcStart, ArcEnd, TLower, TSideA, TSideB };

/// One labelled point on the unit circle.
struct Site {
  SiteKind kind = SiteKind::Chord;
  int chord = -1;  // chord id, only meaningful for SiteKind::Chord

  static constexpr Site chord_end(int id) noexcept { return Site{SiteKind::Chord, id}; }
  static constexpr Site of(SiteKind k) noexcept { return Site{k, -1}; }

  constexpr bool is_chord() const noexcept { return kind == SiteKind::Chord; }
  constexpr bool is_arc() const noexcept {
    return kind == SiteKind::ArcStart || kind == SiteKind::ArcEnd;
  }
  constexpr bool is_t() const noexcept {
    return kind == SiteKind::TLower || kind == SiteKind::TSideA || kind == SiteKind::TSideB;
  }

  friend constexpr bool operator==(const Site&, const Site&) = default;
};

inline constexpr Site kArcStart = Site::of(SiteKind::ArcStart);
inline constexpr Site kArcEnd = Site::of(SiteKind::ArcEnd);
inline constexpr Site kTLower = Site::of(SiteKind::TLower);
inline constexpr Site kTSideA = Site::of(SiteKind::TSideA);
inline constexpr Site kTSideB = Site::of(SiteKind::TSideB);

enum class ChordColor : std::uint8_t { plain, cross };

constexpr ChordColor toggled(ChordColor c) noexcept {
  return c == ChordColor::plain ? ChordColor::cross : ChordColor::plain;
}

enum class Polarity : std::uint8_t { node_is_source, node_is_sink };

constexpr Polarity toggled(Polarity p) noexcept {
  return p == Polarity::node_is_source ? Polarity::node_is_sink : Polarity::node_is_source;
}

/// Cyclic sequence of sites indexed counterclockwise. Chord ids are dense
/// (0..n-1) once a diagram factory has normalized them.
class CyclicArrangement {
 public:
  CyclicArrangement() = default;

  explicit CyclicArrangement(std::vector<Site> sites) : sites_(std::move(sites)) {
    validate_and_index();
  }

  const std::vector<Site>& sites() const noexcept { return sites_; }
  std::size_t size() const noexcept { return sites_.size(); }
  const Site& operator[](std::size_t i) const { return sites_[i]; }
  int chord_count() const noexcept { return static_cast<int>(ends_.size()); }

  std::size_t next(std::size_t i) const noexcept { return (i + 1) % sites_.size(); }
  std::size_t prev(std::size_t i) const noexcept { return (i + sites_.size() - 1) % sites_.size(); }

  /// The other end of the chord at site i.
  std::size_t partner(std::size_t i) const {
    const auto& e = ends_.at(sites_[i].chord);
    return e.first == i ? e.second : e.first;
  }

  std::pair<std::size_t, std::size_t> chord_ends(int id) const { return ends_.at(id); }

  std::optional<std::size_t> find(SiteKind kind) const noexcept {
    for (std::size_t i = 0; i < sites_.size(); ++i)
      if (sites_[i].kind == kind) return i;
    return std::nullopt;
  }

  bool has_arc() const noexcept { return find(SiteKind::ArcStart).has_value(); }
  bool has_t() const noexcept { return find(SiteKind::TLower).has_value(); }

  friend bool operator==(const CyclicArrangement& a, const CyclicArrangement& b) {
    return a.sites_ == b.sites_;
  }

 private:
  void validate_and_index() {
    std::map<int, std::vector<std::size_t>> seen;
    std::array<int, 6> kind_count{};
    for (std::size_t i = 0; i < sites_.size(); ++i) {
      const Site& s = sites_[i];
      ++kind_count[static_cast<std::size_t>(s.kind)];
      if (s.is_chord()) {
        if (s.chord < 0) throw Error(ErrorCode::ChordArityError, "negative chord id");
        seen[s.chord].push_back(i);
      }
    }
    for (const auto& [id, where] : seen)
      if (where.size() != 2)
        throw Error(ErrorCode::ChordArityError, "chord " + std::to_string(id) + " appears " +
                                                    std::to_string(where.size()) + " times");
    auto count = [&](SiteKind k) { return kind_count[static_cast<std::size_t>(k)]; };
    if (count(SiteKind::ArcStart) > 1 || count(SiteKind::ArcEnd) > 1)
      throw Error(ErrorCode::DuplicateArcToken, "arc end token repeated");
    if (count(SiteKind::ArcStart) != count(SiteKind::ArcEnd))
      throw Error(ErrorCode::MissingArcToken, "ArcStart and ArcEnd must come together");
    const int t_total = count(SiteKind::TLower) + count(SiteKind::TSideA) + count(SiteKind::TSideB);
    if (count(SiteKind::TLower) > 1 || count(SiteKind::TSideA) > 1 || count(SiteKind::TSideB) > 1 ||
        (t_total != 0 && t_total != 3))
      throw Error(ErrorCode::MissingTToken, "T tokens must appear exactly once each or not at all");
    if (t_total != 0 && count(SiteKind::ArcStart) != 0)
      throw Error(ErrorCode::MixedTokenKinds, "arc and T tokens in one arrangement");

    // Only dense ids are indexed; factories renumber before partner() is used.
    int expected = 0;
    for (const auto& [id, where] : seen) {
      if (id != expected++) {
        ends_.clear();
        return;
      }
      ends_.emplace_back(where[0], where[1]);
    }
  }

  std::vector<Site> sites_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
};

namespace detail {

/// Rotates `sites` to begin at `start` and renumbers chords by first
/// encounter. `colors` is keyed by the caller's ids; the result is indexed by
/// the new ids.
inline std::pair<std::vector<Site>, std::vector<ChordColor>> normalize(
    std::span<const Site> sites, std::size_t start, const std::map<int, ChordColor>& colors) {
  std::vector<Site> out;
  out.reserve(sites.size());
  std::map<int, int> renumber;
  std::vector<ChordColor> new_colors;
  for (std::size_t k = 0; k < sites.size(); ++k) {
    Site s = sites[(start + k) % sites.size()];
    if (s.is_chord()) {
      auto [it, inserted] = renumber.emplace(s.chord, static_cast<int>(renumber.size()));
      if (inserted) {
        auto c = colors.find(s.chord);
        new_colors.push_back(c == colors.end() ? ChordColor::plain : c->second);
      }
      s.chord = it->second;
    }
    out.push_back(s);
  }
  for (const auto& [id, color] : colors)
    if (!renumber.contains(id))
      throw Error(ErrorCode::ChordArityError,
                  "color given for chord " + std::to_string(id) + " which appears 0 times");
  return {std::move(out), std::move(new_colors)};
}

inline std::map<int, ChordColor> color_map(const std::vector<ChordColor>& colors) {
  std::map<int, ChordColor> m;
  for (std::size_t i = 0; i < colors.size(); ++i) m.emplace(static_cast<int>(i), colors[i]);
  return m;
}

inline void require_only(std::span<const Site> sites, bool allow_arc, bool allow_t) {
  for (const Site& s : sites) {
    if ((s.is_arc() && !allow_arc) || (s.is_t() && !allow_t))
      throw Error(ErrorCode::MixedTokenKinds, "token kind not allowed in this diagram");
  }
}

}  // namespace detail

/// Bare chord diagram with colored chords (the invariant of an optimal Morse flow).
class ChordDiagram {
 public:
  const CyclicArrangement& arrangement() const noexcept { return arrangement_; }
  const std::vector<ChordColor>& colors() const noexcept { return colors_; }
  int chord_count() const noexcept { return arrangement_.chord_count(); }

  friend ChordDiagram make_chord_diagram(std::span<const Site>, const std::map<int, ChordColor>&);
  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  CyclicArrangement arrangement_;
  std::vector<ChordColor> colors_;
};

inline ChordDiagram make_chord_diagram(std::span<const Site> sites,
                                       const std::map<int, ChordColor>& colors = {}) {
  detail::require_only(sites, false, false);
  CyclicArrangement check{std::vector<Site>(sites.begin(), sites.end())};
  auto [norm, cols] = detail::normalize(sites, 0, colors);
  ChordDiagram d;
  d.arrangement_ = CyclicArrangement(std::move(norm));
  d.colors_ = std::move(cols);
  return d;
}

/// Chord diagram with a marked arc running counterclockwise from ArcStart to
/// ArcEnd. Normalized so that ArcStart is site 0.
class CDiagram {
 public:
  const CyclicArrangement& arrangement() const noexcept { return arrangement_; }
  const std::vector<ChordColor>& colors() const noexcept { return colors_; }
  Polarity polarity() const noexcept { return polarity_; }
  int chord_count() const noexcept { return arrangement_.chord_count(); }
  std::size_t arc_end() const { return *arrangement_.find(SiteKind::ArcEnd); }

  friend CDiagram make_c_diagram(std::span<const Site>, const std::map<int, ChordColor>&, Polarity);
  friend bool operator==(const CDiagram&, const CDiagram&) = default;

 private:
  CyclicArrangement arrangement_;
  std::vector<ChordColor> colors_;
  Polarity polarity_ = Polarity::node_is_source;
};

inline CDiagram make_c_diagram(std::span<const Site> sites,
                               const std::map<int, ChordColor>& colors = {},
                               Polarity polarity = Polarity::node_is_source) {
  CyclicArrangement check{std::vector<Site>(sites.begin(), sites.end())};
  if (check.has_t()) throw Error(ErrorCode::MixedTokenKinds, "T tokens in a C-diagram");
  auto start = check.find(SiteKind::ArcStart);
  if (!start) throw Error(ErrorCode::MissingArcToken, "C-diagram needs ArcStart and ArcEnd");
  auto [norm, cols] = detail::normalize(sites, *start, colors);
  CDiagram d;
  d.arrangement_ = CyclicArrangement(std::move(norm));
  d.colors_ = std::move(cols);
  d.polarity_ = polarity;
  return d;
}

struct TEdgeColors {
  ChordColor lower = ChordColor::plain;
  ChordColor side_a = ChordColor::plain;
  ChordColor side_b = ChordColor::plain;

  friend constexpr bool operator==(const TEdgeColors&, const TEdgeColors&) = default;
};

/// Chord diagram with an inscribed T-graph. Normalized so that TLower is site
/// 0 and TSideA is the first side end counterclockwise from TLower.
class TDiagram {
 public:
  const CyclicArrangement& arrangement() const noexcept { return arrangement_; }
  const std::vector<ChordColor>& colors() const noexcept { return colors_; }
  const TEdgeColors& edges() const noexcept { return edges_; }
  int chord_count() const noexcept { return arrangement_.chord_count(); }

  std::size_t side_a() const { return *arrangement_.find(SiteKind::TSideA); }
  std::size_t side_b() const { return *arrangement_.find(SiteKind::TSideB); }

  friend TDiagram make_t_diagram(std::span<const Site>, const std::map<int, ChordColor>&, TEdgeColors);
  friend bool operator==(const TDiagram&, const TDiagram&) = default;

 private:
  CyclicArrangement arrangement_;
  std::vector<ChordColor> colors_;
  TEdgeColors edges_;
};

/// `edges.side_a` / `edges.side_b` refer to the tokens labelled TSideA /
/// TSideB in the input; labels are swapped if TSideB comes first.
inline TDiagram make_t_diagram(std::span<const Site> sites,
                               const std::map<int, ChordColor>& chord_colors,
                               TEdgeColors edges) {
  CyclicArrangement check{std::vector<Site>(sites.begin(), sites.end())};
  if (check.has_arc()) throw Error(ErrorCode::MixedTokenKinds, "arc tokens in a T-diagram");
  auto start = check.find(SiteKind::TLower);
  if (!start) throw Error(ErrorCode::MissingTToken, "T-diagram needs TLower, TSideA and TSideB");
  auto [norm, cols] = detail::normalize(sites, *start, chord_colors);
  auto first_side = std::find_if(norm.begin(), norm.end(), [](const Site& s) {
    return s.kind == SiteKind::TSideA || s.kind == SiteKind::TSideB;
  });
  if (first_side->kind == SiteKind::TSideB) {
    for (Site& s : norm) {
      if (s.kind == SiteKind::TSideA) s.kind = SiteKind::TSideB;
      else if (s.kind == SiteKind::TSideB) s.kind = SiteKind::TSideA;
    }
    std::swap(edges.side_a, edges.side_b);
  }
  TDiagram d;
  d.arrangement_ = CyclicArrangement(std::move(norm));
  d.colors_ = std::move(cols);
  d.edges_ = edges;
  return d;
}

/// Mirror image: the circle is read clockwise. For a C-diagram the marked arc
/// keeps its point set, so its ends trade roles.
inline CDiagram reflect(const CDiagram& d) {
  std::vector<Site> rev(d.arrangement().sites().rbegin(), d.arrangement().sites().rend());
  for (Site& s : rev) {
    if (s.kind == SiteKind::ArcStart) s.kind = SiteKind::ArcEnd;
    else if (s.kind == SiteKind::ArcEnd) s.kind = SiteKind::ArcStart;
  }
  return make_c_diagram(rev, detail::color_map(d.colors()), d.polarity());
}

inline TDiagram reflect(const TDiagram& d) {
  std::vector<Site> rev(d.arrangement().sites().rbegin(), d.arrangement().sites().rend());
  return make_t_diagram(rev, detail::color_map(d.colors()), d.edges());
}

inline ChordDiagram reflect(const ChordDiagram& d) {
  std::vector<Site> rev(d.arrangement().sites().rbegin(), d.arrangement().sites().rend());
  return make_chord_diagram(rev, detail::color_map(d.colors()));
}

/// The chord diagram left after erasing the marked arc.
inline ChordDiagram underlying_chords(const CDiagram& d) {
  std::vector<Site> chords;
  for (const Site& s : d.arrangement().sites())
    if (s.is_chord()) chords.push_back(s);
  return make_chord_diagram(chords, detail::color_map(d.colors()));
}

struct SurfaceClass {
  bool orientable = true;
  int genus = 0;

  int euler_characteristic() const noexcept { return orientable ? 2 - 2 * genus : 2 - genus; }

  static SurfaceClass from_euler(bool orientable, int chi) {
    const int g = orientable ? (2 - chi) / 2 : 2 - chi;
    if ((orientable && (2 - chi) % 2 != 0) || g < 0 || (!orientable && g < 1))
      throw Error(ErrorCode::UnreachableSurface, "no closed surface with chi=" + std::to_string(chi));
    return SurfaceClass{orientable, g};
  }

  std::string name() const {
    if (orientable) {
      if (genus == 0) return "sphere";
      if (genus == 1) return "torus";
      return "orientable genus " + std::to_string(genus);
    }
    if (genus == 1) return "projective plane";
    if (genus == 2) return "Klein bottle";
    return "nonorientable genus " + std::to_string(genus);
  }

  friend constexpr bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

}  // namespace chordflow
