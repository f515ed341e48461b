#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "chordflow/chordflow.hpp"

namespace cft {

using namespace chordflow;

inline std::vector<Site> random_chords(std::mt19937& rng, int n) {
  std::vector<Site> s;
  for (int c = 0; c < n; ++c) s.insert(s.end(), 2, Site::chord_end(c));
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

inline std::map<int, ChordColor> random_colors(std::mt19937& rng, int n) {
  std::map<int, ChordColor> m;
  for (int c = 0; c < n; ++c) m.emplace(c, rng() & 1u ? ChordColor::cross : ChordColor::plain);
  return m;
}

inline ChordColor random_color(std::mt19937& rng) { return rng() & 1u ? ChordColor::cross : ChordColor::plain; }

inline void insert_random(std::mt19937& rng, std::vector<Site>& s, Site x) {
  std::uniform_int_distribution<std::size_t> pos(0, s.size());
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos(rng)), x);
}

inline ChordDiagram random_chord_diagram(std::mt19937& rng, int n) {
  return make_chord_diagram(random_chords(rng, n), random_colors(rng, n));
}

inline CDiagram random_c_diagram(std::mt19937& rng, int n) {
  auto s = random_chords(rng, n);
  insert_random(rng, s, kArcStart);
  insert_random(rng, s, kArcEnd);
  return make_c_diagram(s, random_colors(rng, n), rng() & 1u ? Polarity::node_is_sink : Polarity::node_is_source);
}

inline TDiagram random_t_diagram(std::mt19937& rng, int n) {
  auto s = random_chords(rng, n);
  insert_random(rng, s, kTLower);
  insert_random(rng, s, kTSideA);
  insert_random(rng, s, kTSideB);
  return make_t_diagram(s, random_colors(rng, n), TEdgeColors{random_color(rng), random_color(rng), random_color(rng)});
}

/// Same diagram written from another starting site, with shuffled chord ids.
inline std::pair<std::vector<Site>, std::map<int, ChordColor>> relabel(std::mt19937& rng, const CyclicArrangement& arr,
                                                                      const std::vector<ChordColor>& colors) {
  std::vector<int> perm(colors.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Site> s = arr.sites();
  for (Site& x : s)
    if (x.is_chord()) x.chord = perm[x.chord];
  std::uniform_int_distribution<std::size_t> rot(0, s.size() - 1);
  std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(rot(rng)), s.end());
  std::map<int, ChordColor> m;
  for (std::size_t c = 0; c < colors.size(); ++c) m.emplace(perm[c], colors[c]);
  return {s, m};
}

inline std::vector<std::vector<Site>> all_chord_layouts(int n) {
  std::vector<std::vector<Site>> out;
  for (const auto& partner : detail::perfect_matchings(2 * n)) {
    std::vector<Site> s;
    for (int l : detail::chord_labels(partner)) s.push_back(Site::chord_end(l));
    out.push_back(std::move(s));
  }
  return out;
}

inline void for_each_chord_diagram(int n, const std::function<void(const ChordDiagram&)>& f) {
  for (const auto& s : all_chord_layouts(n))
    for (unsigned mask = 0; mask < (1u << n); ++mask) f(make_chord_diagram(s, detail::coloring(n, mask)));
}

/// Every C-diagram with n chords: ArcStart first, ArcEnd at each later site.
inline void for_each_c_diagram(int n, const std::function<void(const CDiagram&)>& f) {
  for (const auto& chords : all_chord_layouts(n))
    for (std::size_t e = 0; e <= chords.size(); ++e) {
      std::vector<Site> s{kArcStart};
      s.insert(s.end(), chords.begin(), chords.end());
      s.insert(s.begin() + 1 + static_cast<std::ptrdiff_t>(e), kArcEnd);
      for (unsigned mask = 0; mask < (1u << n); ++mask) f(make_c_diagram(s, detail::coloring(n, mask)));
    }
}

/// Every T-diagram with n chords: TLower first, side ends at positions a < b.
inline void for_each_t_diagram(int n, const std::function<void(const TDiagram&)>& f) {
  const int m = 2 * n + 3;
  for (const auto& chords : all_chord_layouts(n))
    for (int a = 1; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        std::vector<Site> s(m);
        s[0] = kTLower;
        s[a] = kTSideA;
        s[b] = kTSideB;
        std::size_t next = 0;
        for (int i = 1; i < m; ++i)
          if (i != a && i != b) s[i] = chords[next++];
        for (unsigned mask = 0; mask < (1u << n); ++mask)
          for (unsigned e = 0; e < 8; ++e) {
            auto bit = [e](unsigned k) { return (e >> k) & 1u ? ChordColor::cross : ChordColor::plain; };
            f(make_t_diagram(s, detail::coloring(n, mask), TEdgeColors{bit(0), bit(1), bit(2)}));
          }
      }
}

inline DiagramCode sn(std::string_view text) { return read_code(text, DiagramKind::SN); }
inline DiagramCode sc(std::string_view text) { return read_code(text, DiagramKind::SC); }
inline std::string text(const DiagramCode& c) { return format_code(c); }

inline std::vector<EnumerationQuery> sc_one_cycled_queries() {
  return {{QueryKind::SC, true, 1}, {QueryKind::SC, true, 2}, {QueryKind::SC, false, 2}, {QueryKind::SC, false, 3}};
}

}  // namespace cft
