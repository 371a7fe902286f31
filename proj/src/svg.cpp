#include "hawkdove/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hawkdove {
namespace {

constexpr double kMargin = 50.0;
constexpr double kPlot = 500.0;

double sx(double p1) { return kMargin + kPlot * p1; }
double sy(double p2) { return kMargin + kPlot * (1.0 - p2); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void polyline(std::ostringstream& out, const std::vector<State>& pts, const char* style) {
  out << "<polyline fill=\"none\" " << style << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << " ";
    out << fmt(sx(pts[i][0])) << "," << fmt(sy(pts[i][1]));
  }
  out << "\"/>\n";
}

}  // namespace

std::string render_phase_portrait_svg(const PhasePortrait& portrait, const StationarySet& states,
                                      const std::string& title) {
  std::ostringstream out;
  const double w = 2.0 * kMargin + kPlot;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
      << fmt(w) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(w) << "\">\n";
  out << "<rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\"" << fmt(kPlot)
      << "\" height=\"" << fmt(kPlot) << "\" fill=\"white\" stroke=\"black\"/>\n";
  out << "<text x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin - 14.0)
      << "\" font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
  out << "<text x=\"" << fmt(kMargin + kPlot / 2.0 - 8.0) << "\" y=\"" << fmt(w - 10.0)
      << "\" font-family=\"sans-serif\" font-size=\"13\">p1</text>\n";
  out << "<text x=\"" << fmt(12.0) << "\" y=\"" << fmt(kMargin + kPlot / 2.0)
      << "\" font-family=\"sans-serif\" font-size=\"13\">p2</text>\n";

  // velocity glyphs: short segments from each grid point along the field
  for (std::size_t i = 0; i < portrait.grid_points.size(); ++i) {
    const State& p = portrait.grid_points[i];
    const State& v = portrait.grid_velocities[i];
    const double norm = std::hypot(v[0], v[1]);
    if (norm < 1e-12) continue;
    const double scale = 0.028 / norm;
    const double x0 = sx(p[0]), y0 = sy(p[1]);
    const double x1 = sx(p[0] + scale * v[0]), y1 = sy(p[1] + scale * v[1]);
    out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1)
        << "\" y2=\"" << fmt(y1) << "\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";
    out << "<circle cx=\"" << fmt(x1) << "\" cy=\"" << fmt(y1)
        << "\" r=\"1.5\" fill=\"#b0b0b0\"/>\n";
  }

  polyline(out, portrait.p2_nullcline, "stroke=\"#2e8b57\" stroke-width=\"2\"");
  polyline(out, portrait.p1_nullcline,
           "stroke=\"#e08020\" stroke-width=\"2\" stroke-dasharray=\"6,4\"");

  for (const auto& s : states.states) {
    const bool solid = s.label == StabilityLabel::AsymptoticallyStable;
    if (s.label == StabilityLabel::Continuum) continue;  // the whole curve is stationary
    out << "<circle cx=\"" << fmt(sx(s.location[0])) << "\" cy=\"" << fmt(sy(s.location[1]))
        << "\" r=\"6\" fill=\"" << (solid ? "black" : "white")
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hawkdove
