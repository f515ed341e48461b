#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "chordflow/codes.hpp"
#include "chordflow/enumeration.hpp"

namespace chordflow {

inline constexpr std::string_view kCatalogFormat = "sfa-1";

enum class CatalogFormat { json, table };

namespace detail {

inline DiagramKind parse_diagram_kind(std::string_view s) {
  if (s == "SN") return DiagramKind::SN;
  if (s == "SC") return DiagramKind::SC;
  if (s == "base") return DiagramKind::Base;
  throw Error(ErrorCode::MalformedRecord, "unknown record kind '" + std::string(s) + "'");
}

inline bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw Error(ErrorCode::MalformedRecord, "expected true/false, got '" + std::string(s) + "'");
}

inline int parse_int(std::string_view s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedRecord, "expected an integer, got '" + std::string(s) + "'");
  }
}

/// Codes in a file must be canonical and well formed.
inline DiagramCode parse_record_code(DiagramKind kind, std::string_view text) {
  DiagramCode code;
  try {
    code = read_code(text == "-" ? std::string_view{} : text, kind);
    if (canonical_code(parse_code(code)) != code)
      throw Error(ErrorCode::MalformedRecord, "code '" + std::string(text) + "' is not canonical");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedRecord) throw;
    throw Error(ErrorCode::MalformedRecord, std::string(e.what()));
  }
  return code;
}

inline std::string polarity_name(const std::optional<Polarity>& p) {
  if (!p) return "-";
  return *p == Polarity::node_is_source ? "source" : "sink";
}

inline std::optional<Polarity> parse_polarity(std::string_view s) {
  if (s == "-") return std::nullopt;
  if (s == "source") return Polarity::node_is_source;
  if (s == "sink") return Polarity::node_is_sink;
  throw Error(ErrorCode::MalformedRecord, "unknown polarity '" + std::string(s) + "'");
}

inline std::string code_cell(const DiagramCode& c) {
  return c.tokens.empty() ? "-" : format_code(c);
}

inline std::string write_json(const Catalog& c) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["format"] = kCatalogFormat;
  doc["query"] = {{"kind", query_kind_name(c.query.kind)},
                  {"orientable", c.query.orientable},
                  {"genus", c.query.genus}};
  doc["polarity"] = c.polarity ? ordered_json(polarity_name(c.polarity)) : ordered_json(nullptr);
  doc["count"] = c.entries.size();
  doc["flow_count"] = reported_flow_count(c);
  ordered_json entries = ordered_json::array();
  for (const CatalogEntry& e : c.entries) {
    ordered_json r;
    r["kind"] = kind_name(e.kind());
    r["orientable"] = e.surface.orientable;
    r["genus"] = e.surface.genus;
    r["euler"] = e.surface.euler_characteristic();
    r["code"] = format_code(e.code);
    r["chords"] = e.chords;
    r["self_reverse"] = e.self_reverse;
    r["reverse_partner"] =
        e.reverse_partner ? ordered_json(format_code(*e.reverse_partner)) : ordered_json(nullptr);
    entries.push_back(std::move(r));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

inline std::string write_table(const Catalog& c) {
  std::ostringstream out;
  out << "# " << kCatalogFormat << " kind=" << query_kind_name(c.query.kind)
      << " orientable=" << (c.query.orientable ? "true" : "false") << " genus=" << c.query.genus
      << " polarity=" << polarity_name(c.polarity) << " entries=" << c.entries.size()
      << " flows=" << reported_flow_count(c) << "\n";
  out << "kind\torientable\tgenus\tcode\tchords\tself_reverse\treverse_partner\n";
  for (const CatalogEntry& e : c.entries) {
    out << kind_name(e.kind()) << '\t' << (e.surface.orientable ? "true" : "false") << '\t'
        << e.surface.genus << '\t' << code_cell(e.code) << '\t' << e.chords << '\t'
        << (e.self_reverse ? "true" : "false") << '\t'
        << (e.reverse_partner ? code_cell(*e.reverse_partner) : "-") << "\n";
  }
  return out.str();
}

inline std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = line.find(sep, start);
    out.emplace_back(line.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

inline Catalog read_table(std::string_view bytes) {
  std::vector<std::string> lines;
  for (auto& l : split(bytes, '\n'))
    if (!l.empty()) lines.push_back(l);
  if (lines.empty() || lines[0].rfind("# ", 0) != 0)
    throw Error(ErrorCode::MalformedRecord, "missing catalog header");
  auto header = split(std::string_view(lines[0]).substr(2), ' ');
  if (header.empty() || header[0] != kCatalogFormat)
    throw Error(ErrorCode::FormatVersionMismatch, "expected " + std::string(kCatalogFormat) + ", got '" +
                                                       (header.empty() ? "" : header[0]) + "'");
  Catalog c;
  std::map<std::string, std::string> kv;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const auto eq = header[i].find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::MalformedRecord, "bad header field " + header[i]);
    kv[header[i].substr(0, eq)] = header[i].substr(eq + 1);
  }
  try {
    c.query.kind = parse_query_kind(kv.at("kind"));
    c.query.orientable = parse_bool(kv.at("orientable"));
    c.query.genus = parse_int(kv.at("genus"));
    c.polarity = parse_polarity(kv.at("polarity"));
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::MalformedRecord, "incomplete catalog header");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownKind) throw Error(ErrorCode::MalformedRecord, e.what());
    throw;
  }
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto f = split(lines[i], '\t');
    if (f.size() != 7) throw Error(ErrorCode::MalformedRecord, "record " + std::to_string(i) + " has " +
                                                                   std::to_string(f.size()) + " fields");
    CatalogEntry e;
    const DiagramKind kind = parse_diagram_kind(f[0]);
    e.surface = SurfaceClass{parse_bool(f[1]), parse_int(f[2])};
    e.code = parse_record_code(kind, f[3]);
    e.chords = parse_int(f[4]);
    e.self_reverse = parse_bool(f[5]);
    if (f[6] != "-") e.reverse_partner = parse_record_code(kind, f[6]);
    c.entries.push_back(std::move(e));
  }
  return c;
}

inline Catalog read_json(std::string_view bytes) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != kCatalogFormat)
      throw Error(ErrorCode::FormatVersionMismatch,
                  "expected " + std::string(kCatalogFormat) + ", got '" + doc.at("format").get<std::string>() + "'");
    Catalog c;
    const json& q = doc.at("query");
    c.query.kind = parse_query_kind(q.at("kind").get<std::string>());
    c.query.orientable = q.at("orientable").get<bool>();
    c.query.genus = q.at("genus").get<int>();
    if (!doc.at("polarity").is_null()) c.polarity = parse_polarity(doc.at("polarity").get<std::string>());
    for (const json& r : doc.at("entries")) {
      CatalogEntry e;
      const DiagramKind kind = parse_diagram_kind(r.at("kind").get<std::string>());
      e.surface = SurfaceClass{r.at("orientable").get<bool>(), r.at("genus").get<int>()};
      e.code = parse_record_code(kind, r.at("code").get<std::string>());
      e.chords = r.at("chords").get<int>();
      e.self_reverse = r.at("self_reverse").get<bool>();
      if (!r.at("reverse_partner").is_null())
        e.reverse_partner = parse_record_code(kind, r.at("reverse_partner").get<std::string>());
      c.entries.push_back(std::move(e));
    }
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownKind) throw Error(ErrorCode::MalformedRecord, e.what());
    throw;
  }
}

}  // namespace detail

/// Byte-deterministic serialization; records keep the catalog's order
/// (sorted by code text when produced by the enumerators).
inline std::string write_catalog(const Catalog& c, CatalogFormat format = CatalogFormat::json) {
  return format == CatalogFormat::json ? detail::write_json(c) : detail::write_table(c);
}

/// Reads either format, detected from the first non-blank character.
inline Catalog read_catalog(std::string_view bytes) {
  const auto first = bytes.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && bytes[first] == '{') return detail::read_json(bytes);
  return detail::read_table(bytes);
}

}  // namespace chordflow
