// Acceptance run: one PASS/FAIL line per criterion. Count mismatches print the
// full classified listing so the enumeration can be audited by hand.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace chordflow;

namespace {

struct Expect {
  QueryKind kind;
  bool orientable;
  int genus;
  std::size_t count;
};

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << "\n";
  if (!ok) ++failures;
}

std::string surface_text(const EnumerationQuery& q) { return q.surface().name(); }

void audit_sn(const Catalog& c) {
  std::map<DiagramCode, std::vector<DiagramCode>> by_base;
  for (const CatalogEntry& e : c.entries)
    by_base[canonical_code(underlying_chords(parse_sn_code(e.code)))].push_back(e.code);
  std::cout << "  audit: " << c.entries.size() << " SN diagrams on " << surface_text(c.query) << "\n";
  for (const auto& [base, codes] : by_base) {
    std::cout << "    base " << format_code(base) << ": " << codes.size() << "\n";
    for (const DiagramCode& code : codes) std::cout << "      " << format_code(code) << "\n";
  }
}

void audit_sc(const Catalog& c) {
  std::cout << "  audit: " << c.entries.size() << " SC diagrams on " << surface_text(c.query) << "\n";
  for (const CatalogEntry& e : c.entries) {
    const TDiagram d = parse_sc_code(e.code);
    std::cout << "    " << format_code(e.code) << "  cycles=" << classify(d).cycles;
    if (e.reverse_partner) std::cout << "  reverse=" << format_code(*e.reverse_partner);
    std::cout << "\n";
  }
}

std::string counts_line(const std::vector<Expect>& want, const std::vector<std::size_t>& got) {
  std::ostringstream s;
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (i) s << ", ";
    s << surface_text(EnumerationQuery{want[i].kind, want[i].orientable, want[i].genus}) << " " << got[i];
    if (got[i] != want[i].count) s << " (expected " << want[i].count << ")";
  }
  return s.str();
}

void count_criterion(int id, const std::vector<Expect>& want, bool audit) {
  std::vector<std::size_t> got;
  std::vector<Catalog> wrong;
  for (const Expect& e : want) {
    Catalog c = enumerate(EnumerationQuery{e.kind, e.orientable, e.genus});
    got.push_back(c.entries.size());
    if (c.entries.size() != e.count) wrong.push_back(pair_catalog(std::move(c)));
  }
  report(id, wrong.empty(), counts_line(want, got));
  if (!audit) return;
  for (const Catalog& c : wrong) c.query.kind == QueryKind::SN ? audit_sn(c) : audit_sc(c);
}

void criterion3() {
  const std::vector<Expect> want{{QueryKind::SC, true, 1, 1},
                                 {QueryKind::SC, true, 2, 12},
                                 {QueryKind::SC, false, 2, 2},
                                 {QueryKind::SC, false, 1, 2},
                                 {QueryKind::SC, false, 3, 20}};
  std::vector<std::size_t> got;
  std::vector<Catalog> wrong;
  bool flows_ok = true;
  for (const Expect& e : want) {
    Catalog c = pair_catalog(enumerate(EnumerationQuery{e.kind, e.orientable, e.genus}));
    got.push_back(c.entries.size());
    if (!e.orientable && e.genus == 1) flows_ok = reported_flow_count(c) == 4;
    if (c.entries.size() != e.count) wrong.push_back(std::move(c));
  }
  report(3, wrong.empty() && flows_ok,
         counts_line(want, got) + "; projective plane flow count " + (flows_ok ? "4" : "wrong"));
  for (const Catalog& c : wrong) audit_sc(c);
}

void criterion4() {
  const Catalog c = pair_catalog(enumerate(EnumerationQuery{QueryKind::SC, false, 3}));
  const ReverseStructure r = reverse_structure(c);
  report(4, r.self_reverse == 6 && r.pairs == 7,
         "N3 SC reversal: " + std::to_string(r.self_reverse) + " self-reverse, " + std::to_string(r.pairs) + " pairs");
}

void criterion5() {
  std::vector<std::string> bad;
  try {
    const AnyDiagram d = read_diagram("1'210323");
    const auto* c = std::get_if<CDiagram>(&d);
    if (!c) bad.push_back("1'210323 is not read as SN");
    else {
      if (!(classify(*c).surface == SurfaceClass{false, 3})) bad.push_back("1'210323 surface " + classify(*c).surface.name());
      const std::string ccw = format_code(emit_code(*c, Direction::ccw));
      const std::string cw = format_code(emit_code(*c, Direction::cw));
      if (ccw != cw || format_code(canonical_code(*c)) != "1' 2 1 0 3 2 3")
        bad.push_back("1'210323 reads " + ccw + " / " + cw);
    }
    const DiagramCode a = canonical_code(read_diagram("01'212"));
    const DiagramCode b = canonical_code(read_diagram("02121'"));
    if (a != b) bad.push_back("01'212 and 02121' differ");
    if (format_code(a) != "0 1' 2 1 2") bad.push_back("canonical 01'212 = " + format_code(a));
    const std::string rev = format_code(reverse_code(read_code("0 1' 2 1 2", DiagramKind::SC)));
    if (rev != "0 1' 2 1 2") bad.push_back("reverse of 0 1' 2 1 2 = " + rev);
  } catch (const Error& e) {
    bad.push_back(e.what());
  }
  std::string what = "reference codes: 1'210323 symmetric on N3, 01'212 ~ 02121', 01'212 self-reverse";
  for (const auto& b : bad) what += "; " + b;
  report(5, bad.empty(), what);
}

// ---- criterion 6 -----------------------------------------------------------

struct Suite {
  explicit Suite(std::string n) : name(std::move(n)) {}

  std::string name;
  long cases = 0;
  long failed = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failed++ == 0) first_failure = what;
  }
};

constexpr int kRandom = 1000;

int random_n(std::mt19937& rng) { return 4 + static_cast<int>(rng() % 3); }

Suite round_trip() {
  Suite s("parse . emit identity");
  auto c_check = [&](const CDiagram& d) {
    const CDiagram back = parse_sn_code(emit_code(d));
    s.check(back.arrangement() == d.arrangement() && back.colors() == d.colors(), format_code(emit_code(d)));
  };
  auto t_check = [&](const TDiagram& d) {
    s.check(parse_sc_code(emit_code(d)) == d && parse_sc_code(emit_code(d, Direction::cw)) == reflect(d),
            format_code(emit_code(d)));
  };
  for (int k = 0; k <= 3; ++k) {
    cft::for_each_c_diagram(k, c_check);
    cft::for_each_t_diagram(k, t_check);
  }
  std::mt19937 rng(1);
  for (int i = 0; i < kRandom; ++i) {
    c_check(cft::random_c_diagram(rng, random_n(rng)));
    t_check(cft::random_t_diagram(rng, random_n(rng)));
  }
  return s;
}

Suite reflection() {
  Suite s("canonical code reflection invariance");
  auto c_check = [&](const CDiagram& d) { s.check(canonical_code(d) == canonical_code(reflect(d)), format_code(emit_code(d))); };
  auto t_check = [&](const TDiagram& d) { s.check(canonical_code(d) == canonical_code(reflect(d)), format_code(emit_code(d))); };
  for (int k = 0; k <= 3; ++k) {
    cft::for_each_c_diagram(k, c_check);
    cft::for_each_t_diagram(k, t_check);
  }
  std::mt19937 rng(2);
  for (int i = 0; i < kRandom; ++i) {
    c_check(cft::random_c_diagram(rng, random_n(rng)));
    t_check(cft::random_t_diagram(rng, random_n(rng)));
  }
  return s;
}

Suite oracle() {
  Suite s("chord_cycles = boundary cycles");
  auto check = [&](const ChordDiagram& d) {
    s.check(chord_cycles(d) == static_cast<int>(boundary_cycles(to_ribbon(d)).size()), format_code(emit_code(d)));
  };
  for (int k = 0; k <= 5; ++k) cft::for_each_chord_diagram(k, check);
  std::mt19937 rng(3);
  for (int i = 0; i < kRandom; ++i) check(cft::random_chord_diagram(rng, random_n(rng)));
  return s;
}

Suite euler() {
  Suite s("chi = 2 - n for one-cycled chord diagrams");
  auto check = [&](const ChordDiagram& d) {
    const Classification c = classify(d);
    if (c.cycles != 1) return false;
    s.check(c.surface.euler_characteristic() == 2 - d.chord_count() &&
                (!c.surface.orientable || d.chord_count() % 2 == 0),
            format_code(emit_code(d)));
    return true;
  };
  for (int k = 0; k <= 3; ++k) cft::for_each_chord_diagram(k, [&](const ChordDiagram& d) { check(d); });
  std::mt19937 rng(4);
  for (int hits = 0; hits < kRandom;) hits += check(cft::random_chord_diagram(rng, random_n(rng)));
  return s;
}

Suite color_rule() {
  Suite s("T-diagram color rule = parity propagation");
  auto check = [&](const TDiagram& d) {
    s.check(is_orientable(to_ribbon(d)) == orientable_by_colors(d), format_code(emit_code(d)));
  };
  for (auto [o, g] : {std::pair{true, 1}, {true, 2}, {false, 1}, {false, 2}, {false, 3}})
    for (const CatalogEntry& e : enumerate(EnumerationQuery{QueryKind::SC, o, g}).entries) check(parse_sc_code(e.code));
  for (int k = 0; k <= 3; ++k) cft::for_each_t_diagram(k, check);
  std::mt19937 rng(5);
  for (int i = 0; i < kRandom; ++i) check(cft::random_t_diagram(rng, random_n(rng)));
  return s;
}

Suite reversal() {
  Suite s("reverse_t involution and surface preservation");
  auto check = [&](const TDiagram& d) {
    if (classify(d).cycles != 1) return false;
    const TDiagram r = reverse_t(d);
    s.check(classify(r).surface == classify(d).surface && classify(r).cycles == 1 && is_isomorphic(reverse_t(r), d),
            format_code(emit_code(d)));
    return true;
  };
  for (const EnumerationQuery& q : cft::sc_one_cycled_queries())
    for (const CatalogEntry& e : enumerate(q).entries) check(parse_sc_code(e.code));
  for (int k = 0; k <= 3; ++k) cft::for_each_t_diagram(k, [&](const TDiagram& d) { check(d); });
  std::mt19937 rng(6);
  for (int hits = 0; hits < kRandom;) hits += check(cft::random_t_diagram(rng, random_n(rng)));
  return s;
}

void criterion6() {
  std::string what = "properties:";
  bool ok = true;
  for (const Suite& s : {round_trip(), reflection(), oracle(), euler(), color_rule(), reversal()}) {
    what += " [" + s.name + ": " + std::to_string(s.cases) + " cases, " + std::to_string(s.failed) + " failed]";
    if (s.failed || s.cases < kRandom) {
      ok = false;
      what += " first failure " + s.first_failure;
    }
  }
  report(6, ok, what);
}

void criterion7() {
  std::vector<EnumerationQuery> all;
  for (QueryKind k : {QueryKind::Base, QueryKind::SN}) {
    for (int g = 0; g <= 2; ++g) all.push_back({k, true, g});
    for (int g = 1; g <= 3; ++g) all.push_back({k, false, g});
  }
  for (int g = 1; g <= 2; ++g) all.push_back({QueryKind::SC, true, g});
  for (int g = 1; g <= 3; ++g) all.push_back({QueryKind::SC, false, g});
  int same = 0;
  std::string differing;
  for (const EnumerationQuery& q : all) {
    const Catalog a = pair_catalog(enumerate(q, {1}));
    const Catalog b = pair_catalog(enumerate(q, {4}));
    const bool eq = write_catalog(a, CatalogFormat::json) == write_catalog(b, CatalogFormat::json) &&
                    write_catalog(a, CatalogFormat::table) == write_catalog(b, CatalogFormat::table);
    if (eq) ++same;
    else differing += " " + std::string(query_kind_name(q.kind)) + "/" + surface_text(q);
  }
  report(7, same == static_cast<int>(all.size()),
         "byte-identical catalogs with 1 and 4 workers for " + std::to_string(same) + "/" +
             std::to_string(all.size()) + " queries" + differing);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  count_criterion(1,
                  {{QueryKind::SN, true, 0, 1},
                   {QueryKind::SN, true, 1, 5},
                   {QueryKind::SN, true, 2, 81},
                   {QueryKind::SN, false, 1, 3},
                   {QueryKind::SN, false, 2, 13},
                   {QueryKind::SN, false, 3, 123}},
                  true);
  count_criterion(2,
                  {{QueryKind::Base, true, 1, 1},
                   {QueryKind::Base, true, 2, 4},
                   {QueryKind::Base, false, 1, 1},
                   {QueryKind::Base, false, 2, 2},
                   {QueryKind::Base, false, 3, 8}},
                  false);
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d criteria failed (%.2f s)\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
