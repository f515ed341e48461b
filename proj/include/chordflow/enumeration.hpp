#pragma once

#include <algorithm>
#include <map>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "chordflow/codes.hpp"
#include "chordflow/diagram.hpp"
#include "chordflow/surface.hpp"

namespace chordflow {

enum class QueryKind { Base, SN, SC };

constexpr std::string_view query_kind_name(QueryKind k) noexcept {
  switch (k) {
    case QueryKind::Base: return "base";
    case QueryKind::SN: return "sn";
    case QueryKind::SC: return "sc";
  }
  return "?";
}

inline QueryKind parse_query_kind(std::string_view s) {
  if (s == "base") return QueryKind::Base;
  if (s == "sn" || s == "SN") return QueryKind::SN;
  if (s == "sc" || s == "SC") return QueryKind::SC;
  throw Error(ErrorCode::UnknownKind, "unknown kind '" + std::string(s) + "'");
}

constexpr DiagramKind diagram_kind(QueryKind k) noexcept {
  switch (k) {
    case QueryKind::Base: return DiagramKind::Base;
    case QueryKind::SN: return DiagramKind::SN;
    case QueryKind::SC: return DiagramKind::SC;
  }
  return DiagramKind::Base;
}

struct EnumerationQuery {
  QueryKind kind = QueryKind::SN;
  bool orientable = true;
  int genus = 0;

  SurfaceClass surface() const {
    if (genus < 0 || (!orientable && genus < 1))
      throw Error(ErrorCode::UnreachableSurface,
                  "no closed surface: orientable=" + std::to_string(orientable) +
                      " genus=" + std::to_string(genus));
    return SurfaceClass{orientable, genus};
  }

  friend bool operator==(const EnumerationQuery&, const EnumerationQuery&) = default;
};

struct CatalogEntry {
  DiagramCode code;
  SurfaceClass surface;
  int chords = 0;
  bool self_reverse = false;
  std::optional<DiagramCode> reverse_partner;

  DiagramKind kind() const noexcept { return code.kind; }

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

struct Catalog {
  EnumerationQuery query;
  std::optional<Polarity> polarity;  // SN catalogs only
  std::vector<CatalogEntry> entries;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// Optimal SC-flows on the sphere need several source circles, which a
/// single-circle T-diagram cannot express; their number is 4.
inline constexpr int kSphereScFlowCount = 4;

/// On the projective plane every SC diagram has a reverse flow with two
/// sources and no T-diagram, so each diagram stands for two flows.
inline int reported_flow_count(const Catalog& c) {
  const int n = static_cast<int>(c.entries.size());
  if (c.query.kind == QueryKind::SC && !c.query.orientable && c.query.genus == 1) return 2 * n;
  return n;
}

struct EnumerationOptions {
  unsigned workers = 0;  // 0: hardware concurrency
};

namespace detail {

/// All perfect matchings of 2n points, each as a partner array.
inline std::vector<std::vector<int>> perfect_matchings(int points) {
  std::vector<std::vector<int>> out;
  std::vector<int> partner(points, -1);
  auto rec = [&](auto&& self) -> void {
    int a = 0;
    while (a < points && partner[a] >= 0) ++a;
    if (a == points) {
      out.push_back(partner);
      return;
    }
    for (int b = a + 1; b < points; ++b) {
      if (partner[b] >= 0) continue;
      partner[a] = b;
      partner[b] = a;
      self(self);
      partner[a] = partner[b] = -1;
    }
  };
  rec(rec);
  return out;
}

/// Chord labels for a matching: chord k joins the k-th smallest unmatched point.
inline std::vector<int> chord_labels(const std::vector<int>& partner) {
  std::vector<int> label(partner.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < partner.size(); ++i)
    if (label[i] < 0) label[i] = label[partner[i]] = next++;
  return label;
}

inline std::map<int, ChordColor> coloring(int chords, unsigned mask) {
  std::map<int, ChordColor> m;
  for (int c = 0; c < chords; ++c) m.emplace(c, (mask >> c) & 1u ? ChordColor::cross : ChordColor::plain);
  return m;
}

inline unsigned worker_count(const EnumerationOptions& opt, std::size_t work) {
  unsigned w = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(w, work)));
}

/// Runs `body(item, sink)` over items [0, count) on several threads. Each
/// worker fills its own map; the merge is keyed by canonical code, so the
/// result does not depend on scheduling.
template <class Body>
std::map<DiagramCode, CatalogEntry> parallel_collect(std::size_t count, const EnumerationOptions& opt,
                                                     Body body) {
  const unsigned workers = worker_count(opt, count);
  std::vector<std::map<DiagramCode, CatalogEntry>> partial(workers);
  std::vector<std::exception_ptr> failure(workers);
  auto run = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < count; i += workers) body(i, partial[w]);
    } catch (...) {
      failure[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& f : failure)
    if (f) std::rethrow_exception(f);
  std::map<DiagramCode, CatalogEntry> merged;
  for (auto& p : partial) merged.merge(p);
  return merged;
}

inline std::vector<CatalogEntry> sorted_by_text(std::map<DiagramCode, CatalogEntry> found) {
  std::vector<CatalogEntry> out;
  for (auto& [code, e] : found) out.push_back(std::move(e));
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return format_code(a.code) < format_code(b.code);
  });
  return out;
}

inline void require_kind(const EnumerationQuery& q, QueryKind k) {
  if (q.kind != k) throw Error(ErrorCode::UnknownKind, "query kind does not match the enumerator");
}

}  // namespace detail

/// One-cycled colored chord diagrams of the queried surface, up to rotation
/// and reflection. Orientable surfaces admit only plain chords.
inline Catalog enumerate_base(const EnumerationQuery& q, EnumerationOptions opt = {}) {
  detail::require_kind(q, QueryKind::Base);
  const SurfaceClass target = q.surface();
  const int chords = 2 - target.euler_characteristic();
  const auto matchings = detail::perfect_matchings(2 * chords);
  const unsigned masks = q.orientable ? 1u : (1u << chords);

  auto found = detail::parallel_collect(matchings.size(), opt, [&](std::size_t i, auto& sink) {
    const auto label = detail::chord_labels(matchings[i]);
    std::vector<Site> sites;
    for (int l : label) sites.push_back(Site::chord_end(l));
    for (unsigned mask = 0; mask < masks; ++mask) {
      const ChordDiagram d = make_chord_diagram(sites, detail::coloring(chords, mask));
      const Classification c = classify(d);
      if (c.cycles != 1 || !(c.surface == target)) continue;
      DiagramCode code = canonical_code(d);
      if (!sink.contains(code)) sink.emplace(code, CatalogEntry{code, target, chords, false, std::nullopt});
    }
  });
  return Catalog{q, std::nullopt, detail::sorted_by_text(std::move(found))};
}

/// Every base diagram with the two ends of the marked arc placed in the gaps
/// between chord ends: ordered pairs of gaps, and both orders inside one gap.
inline Catalog enumerate_sn(const EnumerationQuery& q, EnumerationOptions opt = {}) {
  detail::require_kind(q, QueryKind::SN);
  const SurfaceClass target = q.surface();
  const Catalog base = enumerate_base(EnumerationQuery{QueryKind::Base, q.orientable, q.genus}, opt);

  struct Placement {
    std::size_t base;
    int start_gap;
    int end_gap;
    bool end_first;
  };
  std::vector<Placement> work;
  std::vector<ChordDiagram> diagrams;
  for (std::size_t b = 0; b < base.entries.size(); ++b) {
    diagrams.push_back(parse_base_code(base.entries[b].code));
    const int gaps = static_cast<int>(diagrams.back().arrangement().size());
    if (gaps == 0) work.push_back({b, -1, -1, false});
    for (int s = 0; s < gaps; ++s)
      for (int e = 0; e < gaps; ++e) {
        work.push_back({b, s, e, false});
        if (s == e) work.push_back({b, s, e, true});
      }
  }

  auto found = detail::parallel_collect(work.size(), opt, [&](std::size_t i, auto& sink) {
    const Placement& p = work[i];
    const ChordDiagram& d = diagrams[p.base];
    std::vector<Site> sites;
    if (p.start_gap < 0) sites = {kArcStart, kArcEnd};
    const auto& chords = d.arrangement().sites();
    for (int g = 0; g < static_cast<int>(chords.size()); ++g) {
      sites.push_back(chords[g]);
      if (g == p.start_gap && g == p.end_gap) {
        sites.push_back(p.end_first ? kArcEnd : kArcStart);
        sites.push_back(p.end_first ? kArcStart : kArcEnd);
      } else if (g == p.start_gap) {
        sites.push_back(kArcStart);
      } else if (g == p.end_gap) {
        sites.push_back(kArcEnd);
      }
    }
    const CDiagram c = make_c_diagram(sites, detail::color_map(d.colors()), Polarity::node_is_source);
    DiagramCode code = canonical_code(c);
    if (!sink.contains(code))
      sink.emplace(code, CatalogEntry{code, target, c.chord_count(), false, std::nullopt});
  });
  return Catalog{q, Polarity::node_is_source, detail::sorted_by_text(std::move(found))};
}

/// Number of boundary cycles an optimal SC diagram has on the surface.
inline int sc_target_cycles(const SurfaceClass& s) noexcept {
  return (!s.orientable && s.genus == 1) ? 2 : 1;
}

/// All placements of the three T ends and 2n chord ends, all chord pairings,
/// chord colorings and the 8 edge colorings; n follows from
/// chi = cycles - n - 1.
inline Catalog enumerate_sc(const EnumerationQuery& q, EnumerationOptions opt = {}) {
  detail::require_kind(q, QueryKind::SC);
  const SurfaceClass target = q.surface();
  if (target.orientable && target.genus == 0)
    throw Error(ErrorCode::SphereUnsupported,
                "sphere SC-flows use several source circles; their number is " +
                    std::to_string(kSphereScFlowCount));
  const int cycles = sc_target_cycles(target);
  const int chords = cycles - 1 - target.euler_characteristic();
  if (chords < 0) throw Error(ErrorCode::UnreachableSurface, "no T-diagram for " + target.name());
  const int m = 2 * chords + 3;
  const auto matchings = detail::perfect_matchings(2 * chords);

  struct Layout {
    int side_a;
    int side_b;
    std::size_t matching;
  };
  std::vector<Layout> work;
  for (int a = 1; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (std::size_t k = 0; k < matchings.size(); ++k) work.push_back({a, b, k});

  auto found = detail::parallel_collect(work.size(), opt, [&](std::size_t i, auto& sink) {
    const Layout& l = work[i];
    const auto label = detail::chord_labels(matchings[l.matching]);
    std::vector<Site> sites(m);
    sites[0] = kTLower;
    sites[l.side_a] = kTSideA;
    sites[l.side_b] = kTSideB;
    std::size_t next = 0;
    for (int s = 1; s < m; ++s)
      if (s != l.side_a && s != l.side_b) sites[s] = Site::chord_end(label[next++]);
    for (unsigned mask = 0; mask < (1u << chords); ++mask) {
      const auto colors = detail::coloring(chords, mask);
      for (unsigned e = 0; e < 8; ++e) {
        auto bit = [e](unsigned k) { return (e >> k) & 1u ? ChordColor::cross : ChordColor::plain; };
        const TDiagram d = make_t_diagram(sites, colors, TEdgeColors{bit(0), bit(1), bit(2)});
        const Classification c = classify(d);
        if (c.cycles != cycles || !(c.surface == target)) continue;
        DiagramCode code = canonical_code(d);
        if (!sink.contains(code)) sink.emplace(code, CatalogEntry{code, target, chords, false, std::nullopt});
      }
    }
  });
  return Catalog{q, std::nullopt, detail::sorted_by_text(std::move(found))};
}

inline Catalog enumerate(const EnumerationQuery& q, EnumerationOptions opt = {}) {
  switch (q.kind) {
    case QueryKind::Base: return enumerate_base(q, opt);
    case QueryKind::SN: return enumerate_sn(q, opt);
    case QueryKind::SC: return enumerate_sc(q, opt);
  }
  throw Error(ErrorCode::UnknownKind, "unknown query kind");
}

}  // namespace chordflow
