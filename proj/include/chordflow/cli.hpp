#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chordflow/catalog_io.hpp"
#include "chordflow/codes.hpp"
#include "chordflow/enumeration.hpp"
#include "chordflow/render.hpp"
#include "chordflow/reversal.hpp"
#include "chordflow/surface.hpp"

namespace chordflow {

namespace detail {

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::UnreachableSurface:
    case ErrorCode::SphereUnsupported: return 3;
    default: return 2;
  }
}

inline std::optional<DiagramKind> kind_option(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return diagram_kind(parse_query_kind(s));
}

/// Both codes read as one kind: the forced one, else SC, SN, base in turn.
inline std::pair<AnyDiagram, AnyDiagram> read_pair(const std::string& a, const std::string& b,
                                                   std::optional<DiagramKind> kind) {
  if (kind) return {read_diagram(a, kind), read_diagram(b, kind)};
  for (DiagramKind k : {DiagramKind::SC, DiagramKind::SN, DiagramKind::Base}) {
    try {
      return {read_diagram(a, k), read_diagram(b, k)};
    } catch (const Error&) {
    }
  }
  AnyDiagram x = read_diagram(a), y = read_diagram(b);
  if (kind_of(x) != kind_of(y))
    throw Error(ErrorCode::KindMismatch, std::string("codes read as ") + std::string(kind_name(kind_of(x))) +
                                             " and " + std::string(kind_name(kind_of(y))));
  return {std::move(x), std::move(y)};
}

inline void print_classification(const AnyDiagram& d, std::ostream& out) {
  const Classification c = std::visit([](const auto& x) { return classify(x); }, d);
  out << "kind: " << kind_name(kind_of(d)) << "\n"
      << "code: " << format_code(canonical_code(d)) << "\n"
      << "surface: " << c.surface.name() << "\n"
      << "orientable: " << (c.surface.orientable ? "true" : "false") << "\n"
      << "genus: " << c.surface.genus << "\n"
      << "euler: " << c.surface.euler_characteristic() << "\n"
      << "cycles: " << c.cycles << "\n"
      << "optimal: " << (is_optimal_shape(d) ? "true" : "false") << "\n";
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << bytes)) throw std::runtime_error("cannot write " + path);
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Chord-diagram invariants of optimal flows on closed surfaces", "chordflow"};
  app.require_subcommand(1);

  std::string kind, format = "table", output;
  bool orientable = false, nonorientable = false;
  int genus = 0;
  unsigned workers = 0;
  std::string code, code2, code_kind;

  auto* en = app.add_subcommand("enumerate", "list optimal diagrams of one surface");
  en->add_option("--kind", kind, "sn, sc or base")->required()->check(CLI::IsMember({"sn", "sc", "base"}));
  auto* o1 = en->add_flag("--orientable", orientable);
  auto* o2 = en->add_flag("--nonorientable", nonorientable);
  o1->excludes(o2);
  en->add_option("--genus", genus)->required();
  en->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  en->add_option("--workers", workers, "threads (0: all cores)");
  en->add_option("-o,--output", output, "write to a file instead of stdout");

  auto add_code = [&](CLI::App* sub) {
    sub->add_option("CODE", code)->required();
    sub->add_option("--kind", code_kind, "read CODE as sn, sc or base")->check(CLI::IsMember({"sn", "sc", "base"}));
  };
  auto* cl = app.add_subcommand("classify", "surface, cycle count and optimality of a code");
  add_code(cl);
  auto* ca = app.add_subcommand("canon", "canonical code");
  add_code(ca);
  auto* rv = app.add_subcommand("reverse", "code of the reverse flow");
  add_code(rv);
  auto* is = app.add_subcommand("iso", "exit 0 iff the two codes are isomorphic");
  add_code(is);
  is->add_option("CODE2", code2)->required();
  auto* rd = app.add_subcommand("render", "draw a diagram as SVG");
  add_code(rd);
  rd->add_option("-o,--output", output)->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? 0 : 2;
  }

  try {
    const auto forced = detail::kind_option(code_kind);
    if (*en) {
      if (!orientable && !nonorientable) {
        err << "error: one of --orientable, --nonorientable is required\n";
        return 2;
      }
      EnumerationQuery q{parse_query_kind(kind), orientable, genus};
      Catalog c = pair_catalog(enumerate(q, EnumerationOptions{workers}));
      const std::string bytes = write_catalog(c, format == "json" ? CatalogFormat::json : CatalogFormat::table);
      if (output.empty()) out << bytes;
      else detail::write_file(output, bytes);
    } else if (*cl) {
      detail::print_classification(read_diagram(code, forced), out);
    } else if (*ca) {
      out << format_code(canonical_code(read_diagram(code, forced))) << "\n";
    } else if (*rv) {
      const AnyDiagram d = read_diagram(code, forced);
      if (const auto* t = std::get_if<TDiagram>(&d)) {
        out << format_code(canonical_code(reverse_t(*t))) << "\n";
      } else if (const auto* c = std::get_if<CDiagram>(&d)) {
        // Same diagram; only the node's polarity changes.
        out << format_code(canonical_code(reverse_c(*c))) << "\n";
      } else {
        throw Error(ErrorCode::KindMismatch, "reverse needs an SN or SC code");
      }
    } else if (*is) {
      auto [a, b] = detail::read_pair(code, code2, forced);
      const bool same = is_isomorphic(a, b);
      out << (same ? "isomorphic" : "not isomorphic") << "\n";
      return same ? 0 : 1;
    } else if (*rd) {
      detail::write_file(output, render_svg(read_diagram(code, forced)));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace chordflow
