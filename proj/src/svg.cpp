#include "meander/svg.hpp"

#include <fstream>
#include <sstream>

#include "meander/graph.hpp"

namespace meander {

namespace {

constexpr int kSpacing = 40;
constexpr int kMargin = 40;
constexpr int kDotRadius = 3;

int max_radius(const std::vector<Edge>& edges) {
  int r = 0;
  for (const Edge& e : edges) r = std::max(r, (e.second - e.first) * kSpacing / 2);
  return r;
}

void emit_arcs(std::ostream& out, const std::vector<Edge>& edges, int baseline,
               bool above) {
  for (const Edge& e : edges) {
    const int x1 = kMargin + (e.first - 1) * kSpacing;
    const int x2 = kMargin + (e.second - 1) * kSpacing;
    const int r = (x2 - x1) / 2;
    // sweep=1 bows the arc upward in SVG's y-down coordinates
    out << "  <path d=\"M " << x1 << ' ' << baseline << " A " << r << ' ' << r
        << " 0 0 " << (above ? 1 : 0) << ' ' << x2 << ' ' << baseline << "\"/>\n";
  }
}

}  // namespace

std::string render_svg(const MeanderType& t) {
  const MeanderGraph g = build_meander(t);
  const int top_room = std::max(max_radius(g.top_edges), kDotRadius);
  const int bottom_room = std::max(max_radius(g.bottom_edges), kDotRadius);
  const int baseline = kMargin + top_room;
  const int width = 2 * kMargin + (g.n - 1) * kSpacing;
  const int height = baseline + bottom_room + kMargin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <title>" << format_type(t) << "</title>\n";
  out << "  <g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
  std::ostringstream arcs;
  emit_arcs(arcs, g.top_edges, baseline, true);
  emit_arcs(arcs, g.bottom_edges, baseline, false);
  out << arcs.str();
  out << "  </g>\n";
  for (int v = 1; v <= g.n; ++v) {
    const int x = kMargin + (v - 1) * kSpacing;
    out << "  <circle cx=\"" << x << "\" cy=\"" << baseline << "\" r=\"" << kDotRadius
        << "\"/>\n";
  }
  for (int v = 1; v <= g.n; ++v) {
    const int x = kMargin + (v - 1) * kSpacing;
    out << "  <text x=\"" << x << "\" y=\"" << baseline + 16
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << v
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg_file(const MeanderType& t, const std::string& path) {
  const std::string svg = render_svg(t);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << svg;
  if (!out.flush()) throw std::runtime_error("failed writing \"" + path + "\"");
}

}  // namespace meander
