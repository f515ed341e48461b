#pragma once

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "chordflow/codes.hpp"
#include "chordflow/diagram.hpp"

namespace chordflow {

struct SlotRef {
  int disc = 0;
  int slot = 0;

  friend constexpr bool operator==(const SlotRef&, const SlotRef&) = default;
};

enum class BandRole { Chord, Lower, SideA, SideB };

/// A 1-handle. Its core runs from `from` (t = 0) to `to` (t = 1); side +1 is
/// the side that leaves `from` on its counterclockwise-ahead corner.
struct Band {
  SlotRef from;
  SlotRef to;
  bool twisted = false;
  BandRole role = BandRole::Chord;
  int chord = -1;
};

/// A 0-handle. Slots are listed counterclockwise unless `clockwise` is set.
struct Disc {
  int slots = 0;
  bool clockwise = false;

  int ccw_next(int k) const noexcept { return clockwise ? (k + slots - 1) % slots : (k + 1) % slots; }
  int ccw_prev(int k) const noexcept { return clockwise ? (k + 1) % slots : (k + slots - 1) % slots; }
};

/// Source disc (disc 0, counterclockwise, one slot per chord or T end) plus a
/// band per chord; a T-diagram adds the central disc (disc 1, slots listed
/// clockwise as lower, sideA, sideB) and its three bands. All twists are
/// measured in one common frame.
struct RibbonComplex {
  std::vector<Disc> discs;
  std::vector<Band> bands;
  std::vector<std::size_t> base_sites;  // site index of each slot on disc 0
};

inline constexpr int kCentralLower = 0;
inline constexpr int kCentralSideA = 1;
inline constexpr int kCentralSideB = 2;

/// One piece of a boundary cycle. A disc arc joins `slot` to its
/// counterclockwise successor (slot -1: a disc with no slots, the whole
/// circle); `forward` means counterclockwise. A band side has `slot` = +1 or
/// -1; `forward` means from `from` to `to`.
struct Segment {
  enum class Kind { DiscArc, BandSide };
  Kind kind = Kind::DiscArc;
  int index = 0;  // disc or band
  int slot = 0;
  bool forward = true;

  friend constexpr bool operator==(const Segment&, const Segment&) = default;
};

using BoundaryCycle = std::vector<Segment>;

namespace detail {

inline RibbonComplex base_ribbon(const CyclicArrangement& arr, const std::vector<ChordColor>& colors,
                                 std::vector<int>& slot_of_site) {
  RibbonComplex rc;
  slot_of_site.assign(arr.size(), -1);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (arr[i].is_arc()) continue;
    slot_of_site[i] = static_cast<int>(rc.base_sites.size());
    rc.base_sites.push_back(i);
  }
  rc.discs.push_back(Disc{static_cast<int>(rc.base_sites.size()), false});
  for (int c = 0; c < arr.chord_count(); ++c) {
    auto [a, b] = arr.chord_ends(c);
    rc.bands.push_back(Band{{0, slot_of_site[a]}, {0, slot_of_site[b]}, colors[c] == ChordColor::cross,
                            BandRole::Chord, c});
  }
  return rc;
}

}  // namespace detail

inline RibbonComplex to_ribbon(const ChordDiagram& d) {
  std::vector<int> slots;
  return detail::base_ribbon(d.arrangement(), d.colors(), slots);
}

/// The marked arc does not change the surface, so arc sites get no slot.
inline RibbonComplex to_ribbon(const CDiagram& d) {
  std::vector<int> slots;
  return detail::base_ribbon(d.arrangement(), d.colors(), slots);
}

inline RibbonComplex to_ribbon(const TDiagram& d) {
  std::vector<int> slots;
  RibbonComplex rc = detail::base_ribbon(d.arrangement(), d.colors(), slots);
  rc.discs.push_back(Disc{3, true});
  const auto& arr = d.arrangement();
  auto t_band = [&](SiteKind kind, int central_slot, ChordColor color, BandRole role) {
    const int s = slots[*arr.find(kind)];
    rc.bands.push_back(Band{{0, s}, {1, central_slot}, color == ChordColor::cross, role, -1});
  };
  t_band(SiteKind::TLower, kCentralLower, d.edges().lower, BandRole::Lower);
  t_band(SiteKind::TSideA, kCentralSideA, d.edges().side_a, BandRole::SideA);
  t_band(SiteKind::TSideB, kCentralSideB, d.edges().side_b, BandRole::SideB);
  return rc;
}

inline RibbonComplex to_ribbon(const AnyDiagram& d) {
  return std::visit([](const auto& x) { return to_ribbon(x); }, d);
}

/// Band-decomposition boundary walk. Each slot is split into two corners
/// (counterclockwise-ahead "+" and behind "-"); disc arcs join a slot's "+"
/// corner to the next slot's "-" corner; a flat band joins + to - and - to +,
/// a twisted band + to + and - to -.
inline std::vector<BoundaryCycle> boundary_cycles(const RibbonComplex& rc) {
  std::vector<int> offset(rc.discs.size() + 1, 0);
  for (std::size_t d = 0; d < rc.discs.size(); ++d) offset[d + 1] = offset[d] + rc.discs[d].slots;
  auto corner = [&](SlotRef s, int side) { return 2 * (offset[s.disc] + s.slot) + (side > 0 ? 0 : 1); };

  struct SideLink {
    int band = -1;
    int side = 0;
    bool at_from = true;
    int other = -1;
  };
  std::vector<SideLink> link(2 * offset.back());
  for (int b = 0; b < static_cast<int>(rc.bands.size()); ++b) {
    const Band& band = rc.bands[b];
    for (int side : {+1, -1}) {
      const int far_side = band.twisted ? side : -side;
      const int p = corner(band.from, side);
      const int q = corner(band.to, far_side);
      link[p] = SideLink{b, side, true, q};
      link[q] = SideLink{b, side, false, p};
    }
  }

  std::vector<BoundaryCycle> cycles;
  std::vector<std::vector<bool>> arc_seen(rc.discs.size());
  for (std::size_t d = 0; d < rc.discs.size(); ++d) arc_seen[d].assign(rc.discs[d].slots, false);

  for (int d = 0; d < static_cast<int>(rc.discs.size()); ++d) {
    const Disc& disc = rc.discs[d];
    if (disc.slots == 0) {
      cycles.push_back({Segment{Segment::Kind::DiscArc, d, -1, true}});
      continue;
    }
    for (int k = 0; k < disc.slots; ++k) {
      if (arc_seen[d][k]) continue;
      BoundaryCycle cycle;
      // State: about to traverse arc (cd, ck) in direction fwd.
      int cd = d, ck = k;
      bool fwd = true;
      while (!arc_seen[cd][ck]) {
        arc_seen[cd][ck] = true;
        cycle.push_back(Segment{Segment::Kind::DiscArc, cd, ck, fwd});
        const Disc& cur = rc.discs[cd];
        // Corner reached at the end of the arc.
        const SlotRef at = fwd ? SlotRef{cd, cur.ccw_next(ck)} : SlotRef{cd, ck};
        const int at_side = fwd ? -1 : +1;
        const SideLink& l = link[corner(at, at_side)];
        cycle.push_back(Segment{Segment::Kind::BandSide, l.band, l.side, l.at_from});
        const int q = l.other;
        const int slot_global = q / 2;
        const bool plus = (q % 2) == 0;
        int nd = 0;
        while (offset[nd + 1] <= slot_global) ++nd;
        const int ns = slot_global - offset[nd];
        cd = nd;
        if (plus) {
          ck = ns;
          fwd = true;
        } else {
          ck = rc.discs[nd].ccw_prev(ns);
          fwd = false;
        }
      }
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

/// Literal chord-cycle traversal on the circle: move counterclockwise to the
/// next chord end, cross the chord, keep the direction after a plain chord
/// and reverse it after a marked one. Non-chord sites are ignored.
inline int chord_cycles(const CyclicArrangement& arr, const std::vector<ChordColor>& colors) {
  std::vector<std::size_t> ends;
  std::vector<int> index_of(arr.size(), -1);
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (arr[i].is_chord()) {
      index_of[i] = static_cast<int>(ends.size());
      ends.push_back(i);
    }
  const int m = static_cast<int>(ends.size());
  if (m == 0) return 1;
  // arc j lies between chord ends j and j+1
  std::vector<bool> seen(m, false);
  int cycles = 0;
  for (int start = 0; start < m; ++start) {
    if (seen[start]) continue;
    ++cycles;
    int arc = start;
    bool ccw = true;
    do {
      seen[arc] = true;
      const int reached = ccw ? (arc + 1) % m : arc;
      const std::size_t site = ends[reached];
      const int across = index_of[arr.partner(site)];
      if (colors[arr[site].chord] == ChordColor::cross) ccw = !ccw;
      arc = ccw ? across : (across + m - 1) % m;
    } while (arc != start);
  }
  return cycles;
}

inline int chord_cycles(const ChordDiagram& d) { return chord_cycles(d.arrangement(), d.colors()); }
inline int chord_cycles(const CDiagram& d) { return chord_cycles(d.arrangement(), d.colors()); }

/// Parity propagation over discs; a flat band forces equal bits.
inline bool is_orientable(const RibbonComplex& rc) {
  std::vector<int> bit(rc.discs.size(), -1);
  bool changed = true;
  if (!bit.empty()) bit[0] = 0;
  bool consistent = true;
  while (changed) {
    changed = false;
    for (const Band& b : rc.bands) {
      const int want = b.twisted ? 1 : 0;
      int& x = bit[b.from.disc];
      int& y = bit[b.to.disc];
      if (x >= 0 && y < 0) {
        y = x ^ want;
        changed = true;
      } else if (y >= 0 && x < 0) {
        x = y ^ want;
        changed = true;
      } else if (x >= 0 && y >= 0 && (x ^ y) != want) {
        consistent = false;
      }
    }
  }
  return consistent;
}

/// Color rule for T-diagrams: orientable iff every chord is plain and the
/// three T edges share one color.
inline bool orientable_by_colors(const TDiagram& d) {
  const bool plain_chords = std::all_of(d.colors().begin(), d.colors().end(),
                                        [](ChordColor c) { return c == ChordColor::plain; });
  const TEdgeColors& e = d.edges();
  return plain_chords && e.lower == e.side_a && e.side_a == e.side_b;
}

struct Classification {
  SurfaceClass surface;
  int cycles = 0;
};

/// chi = discs - bands + boundary cycles (one 2-handle per cycle).
inline Classification classify(const RibbonComplex& rc) {
  const int cycles = static_cast<int>(boundary_cycles(rc).size());
  const int chi = static_cast<int>(rc.discs.size()) - static_cast<int>(rc.bands.size()) + cycles;
  return Classification{SurfaceClass::from_euler(is_orientable(rc), chi), cycles};
}

inline SurfaceClass surface_class(const RibbonComplex& rc) { return classify(rc).surface; }

template <class D>
Classification classify(const D& d) {
  return classify(to_ribbon(d));
}

/// One source and one sink, i.e. a single boundary cycle; on the projective
/// plane an SC diagram has no chords and two cycles.
inline bool is_optimal_shape(const CDiagram& d) { return classify(d).cycles == 1; }
inline bool is_optimal_shape(const ChordDiagram& d) { return classify(d).cycles == 1; }

inline bool is_optimal_shape(const TDiagram& d) {
  const Classification c = classify(d);
  if (!c.surface.orientable && c.surface.genus == 1) return c.cycles == 2;
  return c.cycles == 1;
}

inline bool is_optimal_shape(const AnyDiagram& d) {
  return std::visit([](const auto& x) { return is_optimal_shape(x); }, d);
}

}  // namespace chordflow
