#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chordflow/codes.hpp"
#include "chordflow/diagram.hpp"
#include "chordflow/enumeration.hpp"
#include "chordflow/surface.hpp"

namespace chordflow {

/// Reversing an SN-flow keeps the diagram and swaps source and sink at the node.
inline CDiagram reverse_c(const CDiagram& d) {
  return make_c_diagram(d.arrangement().sites(), detail::color_map(d.colors()), toggled(d.polarity()));
}

/// A marked point on the single boundary cycle of a T-diagram's ribbon
/// complex; it becomes a site of the reverse diagram's circle.
struct CyclePosition {
  enum class Tag { ChordSide, LowerSide, CentralArc };
  Tag tag = Tag::ChordSide;
  int band = -1;       // chord or lower band
  int side = 0;        // +1 / -1 for band sides
  bool forward = true; // traversal direction along the band core, or ccw on the central disc
  std::size_t index = 0;
};

namespace detail {

inline std::vector<CyclePosition> cycle_positions(const RibbonComplex& rc, const BoundaryCycle& cycle) {
  std::vector<CyclePosition> out;
  for (const Segment& seg : cycle) {
    CyclePosition p;
    p.index = out.size();
    p.forward = seg.forward;
    if (seg.kind == Segment::Kind::BandSide) {
      const Band& b = rc.bands[seg.index];
      if (b.role == BandRole::Chord) p.tag = CyclePosition::Tag::ChordSide;
      else if (b.role == BandRole::Lower) p.tag = CyclePosition::Tag::LowerSide;
      else continue;
      p.band = seg.index;
      p.side = seg.slot;
    } else {
      // The central-disc arc between the two side attachments.
      if (seg.index != 1 || seg.slot != kCentralSideB) continue;
      p.tag = CyclePosition::Tag::CentralArc;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace detail

/// Reverse T-diagram. The single boundary cycle becomes the new circle; the
/// co-core of each chord band gives a new chord, the co-core of the lower band
/// gives the new side ends, and the unstable separatrix of the central saddle
/// (leaving the central disc between the side attachments) gives the new lower
/// end. Twists follow by transporting orientations along the new handles:
///  - new chord: plain iff the cycle runs along the band's two sides in
///    opposite core directions;
///  - new side band on side +1 (-1): flat iff the cycle runs along it forward
///    (backward);
///  - new lower band: runs from the lower band's centre through the central
///    disc, flat iff (lower band flat) == (cycle crosses the far central arc
///    clockwise).
/// The new central disc is then flipped if needed so that its rotation
/// matches the T-diagram convention, toggling all three edge colors.
inline TDiagram reverse_t(const TDiagram& d) {
  const RibbonComplex rc = to_ribbon(d);
  const auto cycles = boundary_cycles(rc);
  if (cycles.size() != 1)
    throw Error(ErrorCode::NotOneCycled,
                "reverse diagram needs one boundary cycle, found " + std::to_string(cycles.size()));
  const auto positions = detail::cycle_positions(rc, cycles.front());

  int lower_band = -1;
  for (int b = 0; b < static_cast<int>(rc.bands.size()); ++b)
    if (rc.bands[b].role == BandRole::Lower) lower_band = b;

  std::map<int, std::vector<bool>> chord_dirs;
  bool plus_forward = false, minus_forward = false, far_arc_ccw = false;
  std::size_t lower_at = 0;
  for (const CyclePosition& p : positions) {
    switch (p.tag) {
      case CyclePosition::Tag::ChordSide: chord_dirs[p.band].push_back(p.forward); break;
      case CyclePosition::Tag::LowerSide: (p.side > 0 ? plus_forward : minus_forward) = p.forward; break;
      case CyclePosition::Tag::CentralArc:
        far_arc_ccw = p.forward;
        lower_at = p.index;
        break;
    }
  }

  std::map<int, ChordColor> colors;
  for (const auto& [band, dirs] : chord_dirs)
    colors.emplace(band, dirs[0] != dirs[1] ? ChordColor::plain : ChordColor::cross);

  bool plus_twisted = !plus_forward;
  bool minus_twisted = minus_forward;
  const bool lower_flat = !rc.bands[lower_band].twisted;
  bool new_lower_twisted = lower_flat != !far_arc_ccw;

  // New circle read from the new lower end.
  std::vector<Site> sites;
  int first_side = 0;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const CyclePosition& p = positions[(lower_at + k) % positions.size()];
    switch (p.tag) {
      case CyclePosition::Tag::CentralArc: sites.push_back(kTLower); break;
      case CyclePosition::Tag::ChordSide: sites.push_back(Site::chord_end(p.band)); break;
      case CyclePosition::Tag::LowerSide:
        if (first_side == 0) first_side = p.side;
        sites.push_back(first_side == p.side ? kTSideA : kTSideB);
        break;
    }
  }
  // In the transported frame the new centre's rotation is (lower, +1, -1);
  // the convention needs (lower, sideB, sideA).
  if (first_side > 0) {
    plus_twisted = !plus_twisted;
    minus_twisted = !minus_twisted;
    new_lower_twisted = !new_lower_twisted;
  }
  auto color = [](bool twisted) { return twisted ? ChordColor::cross : ChordColor::plain; };
  const TEdgeColors edges{color(new_lower_twisted), color(first_side > 0 ? plus_twisted : minus_twisted),
                          color(first_side > 0 ? minus_twisted : plus_twisted)};
  return make_t_diagram(sites, colors, edges);
}

/// Canonical code of the reverse diagram of an SC code.
inline DiagramCode reverse_code(const DiagramCode& code) {
  if (code.kind != DiagramKind::SC)
    throw Error(ErrorCode::KindMismatch, "reverse codes are defined for SC codes");
  return canonical_code(reverse_t(parse_sc_code(code)));
}

/// Fills reverse partners for an SC catalog. Projective-plane catalogs are
/// two-cycled: their reverse flows have no T-diagram, so partners stay empty.
inline Catalog pair_catalog(Catalog catalog) {
  if (catalog.query.kind != QueryKind::SC) return catalog;
  if (!catalog.query.orientable && catalog.query.genus == 1) return catalog;
  std::map<DiagramCode, std::size_t> index;
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) index.emplace(catalog.entries[i].code, i);
  for (CatalogEntry& e : catalog.entries) {
    DiagramCode partner = reverse_code(e.code);
    if (!index.contains(partner))
      throw Error(ErrorCode::PartnerNotInCatalog, "reverse of " + format_code(e.code) + " is " +
                                                      format_code(partner) + ", not in the catalog");
    e.self_reverse = partner == e.code;
    e.reverse_partner = std::move(partner);
  }
  return catalog;
}

struct ReverseStructure {
  int self_reverse = 0;
  int pairs = 0;
};

inline ReverseStructure reverse_structure(const Catalog& c) {
  ReverseStructure r;
  int partnered = 0;
  for (const CatalogEntry& e : c.entries) {
    if (!e.reverse_partner) continue;
    if (e.self_reverse) ++r.self_reverse;
    else ++partnered;
  }
  r.pairs = partnered / 2;
  return r;
}

}  // namespace chordflow
