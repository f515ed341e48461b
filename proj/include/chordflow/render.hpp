#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <variant>

#include "chordflow/codes.hpp"
#include "chordflow/diagram.hpp"

namespace chordflow {

struct RenderOptions {
  double size = 360.0;
  double radius = 130.0;
};

namespace detail {

class SvgWriter {
 public:
  explicit SvgWriter(const RenderOptions& o) : opt_(o), cx_(o.size / 2), cy_(o.size / 2 + 12) {}

  // Site i of m sits at 90 degrees plus i/m of a turn, counterclockwise.
  double angle(std::size_t i, std::size_t m) const {
    return std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
  }
  double x(double a, double r) const { return cx_ + r * std::cos(a); }
  double y(double a, double r) const { return cy_ - r * std::sin(a); }

  void line(double x1, double y1, double x2, double y2, double width) {
    body_ += fmt("<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"black\" stroke-width=\"%.1f\"/>\n",
                 x1, y1, x2, y2, width);
  }

  void text(double tx, double ty, const std::string& s, int font = 13) {
    body_ += fmt("<text x=\"%.3f\" y=\"%.3f\" font-family=\"monospace\" font-size=\"%d\" "
                 "text-anchor=\"middle\" dominant-baseline=\"middle\">",
                 tx, ty, font) +
             s + "</text>\n";
  }

  void cross_mark(double x1, double y1, double x2, double y2) {
    body_ += fmt("<text x=\"%.3f\" y=\"%.3f\" font-family=\"sans-serif\" font-size=\"14\" fill=\"red\" "
                 "text-anchor=\"middle\" dominant-baseline=\"middle\">X</text>\n",
                 (x1 + x2) / 2, (y1 + y2) / 2);
  }

  void site_to_site(std::size_t i, std::size_t j, std::size_t m, bool cross) {
    const double a = angle(i, m), b = angle(j, m);
    line(x(a, r()), y(a, r()), x(b, r()), y(b, r()), 1.5);
    if (cross) cross_mark(x(a, r()), y(a, r()), x(b, r()), y(b, r()));
  }

  void marked_arc(std::size_t from, std::size_t to, std::size_t m) {
    const double a = angle(from, m), b = angle(to, m);
    const std::size_t span = (to + m - from) % m;
    const int large = 2 * span > m ? 1 : 0;
    // Counterclockwise on screen is the negative sweep direction in SVG.
    body_ += fmt("<path d=\"M %.3f %.3f A %.3f %.3f 0 %d 0 %.3f %.3f\" fill=\"none\" stroke=\"black\" "
                 "stroke-width=\"5.0\"/>\n",
                 x(a, r()), y(a, r()), r(), r(), large, x(b, r()), y(b, r()));
  }

  void label(std::size_t i, std::size_t m, const std::string& s) {
    const double a = angle(i, m);
    text(x(a, r() + 18), y(a, r() + 18), s);
  }

  std::string finish(const std::string& title) const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" height=\"%.0f\" "
               "viewBox=\"0 0 %.0f %.0f\">\n",
               opt_.size, opt_.size + 24, opt_.size, opt_.size + 24);
    out += "<title>" + title + "</title>\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += fmt("<text x=\"%.3f\" y=\"20.000\" font-family=\"monospace\" font-size=\"15\" text-anchor=\"middle\">",
               opt_.size / 2) +
           title + "</text>\n";
    out += fmt("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
               cx_, cy_, opt_.radius);
    return out + body_ + "</svg>\n";
  }

  double r() const { return opt_.radius; }

  template <class... A>
  static std::string fmt(const char* f, A... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
  }

 private:
  RenderOptions opt_;
  double cx_, cy_;
  std::string body_;
};

inline std::string title_for(const DiagramCode& code) {
  if (auto compact = format_compact(code)) return *compact;
  return format_code(code);
}

inline std::string token_text(const CodeToken& t) {
  return std::to_string(t.number) + (t.dashed ? "'" : "");
}

inline void draw_chords(SvgWriter& w, const CyclicArrangement& arr, const std::vector<ChordColor>& colors) {
  for (int c = 0; c < arr.chord_count(); ++c) {
    auto [a, b] = arr.chord_ends(c);
    w.site_to_site(a, b, arr.size(), colors[c] == ChordColor::cross);
  }
}

/// Site labels from the counterclockwise code; the code starts at site 0 for
/// C-diagrams after the unlabelled ArcStart.
inline void draw_labels(SvgWriter& w, const CyclicArrangement& arr, const DiagramCode& ccw, std::size_t skip) {
  std::size_t t = 0;
  for (std::size_t i = skip; i < arr.size() && t < ccw.tokens.size(); ++i) w.label(i, arr.size(), token_text(ccw.tokens[t++]));
}

}  // namespace detail

inline std::string render_svg(const ChordDiagram& d, const RenderOptions& opt = {}) {
  detail::SvgWriter w(opt);
  detail::draw_chords(w, d.arrangement(), d.colors());
  detail::draw_labels(w, d.arrangement(), emit_code(d), 0);
  return w.finish(detail::title_for(canonical_code(d)));
}

inline std::string render_svg(const CDiagram& d, const RenderOptions& opt = {}) {
  detail::SvgWriter w(opt);
  const auto& arr = d.arrangement();
  w.marked_arc(0, d.arc_end(), arr.size());
  detail::draw_chords(w, arr, d.colors());
  detail::draw_labels(w, arr, emit_code(d), 1);
  return w.finish(detail::title_for(canonical_code(d)));
}

/// The T is drawn as the segment joining the side ends plus a stem from its
/// midpoint to the lower end.
inline std::string render_svg(const TDiagram& d, const RenderOptions& opt = {}) {
  detail::SvgWriter w(opt);
  const auto& arr = d.arrangement();
  const std::size_t m = arr.size();
  const double r = w.r();
  const double a = w.angle(d.side_a(), m), b = w.angle(d.side_b(), m), l = w.angle(0, m);
  const double mx = (w.x(a, r) + w.x(b, r)) / 2, my = (w.y(a, r) + w.y(b, r)) / 2;
  const TEdgeColors& e = d.edges();
  w.line(w.x(a, r), w.y(a, r), mx, my, 2.5);
  w.line(mx, my, w.x(b, r), w.y(b, r), 2.5);
  w.line(mx, my, w.x(l, r), w.y(l, r), 2.5);
  if (e.side_a == ChordColor::cross) w.cross_mark(w.x(a, r), w.y(a, r), mx, my);
  if (e.side_b == ChordColor::cross) w.cross_mark(mx, my, w.x(b, r), w.y(b, r));
  if (e.lower == ChordColor::cross) w.cross_mark(mx, my, w.x(l, r), w.y(l, r));
  detail::draw_chords(w, arr, d.colors());
  detail::draw_labels(w, arr, emit_code(d), 0);
  return w.finish(detail::title_for(canonical_code(d)));
}

inline std::string render_svg(const AnyDiagram& d, const RenderOptions& opt = {}) {
  return std::visit([&](const auto& x) { return render_svg(x, opt); }, d);
}

}  // namespace chordflow
