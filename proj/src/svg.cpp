#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "polyphase/cli.hpp"
#include "write_atomic.hpp"

namespace polyphase {

namespace {

constexpr int kW = 640, kH = 480;
constexpr int kMargin = 50;

double sx(double delta) { return kMargin + delta * (kW - 2 * kMargin); }
double sy(double rho) { return kH - kMargin - rho * (kH - 2 * kMargin); }

const char* curve_color(const PhaseCurve& c) {
  const bool weak = c.kind == TransitionKind::Weak;
  if (c.family == Family::Simplex) return weak ? "#1f4fd8" : "#d82b1f";
  return weak ? "#1fa0d8" : "#d88a1f";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string svg_string(const std::vector<PhaseCurve>& curves, const GridResult* grid) {
  if (curves.empty()) throw std::invalid_argument("emit_svg_phase_diagram: no curves");
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\""
     << kH << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
  os << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";

  if (grid && !grid->cells.empty()) {
    const double N = grid->config.N;
    for (const auto& cell : grid->cells) {
      if (cell.trials <= 0 || cell.n <= 0) continue;
      const double frac = static_cast<double>(cell.successes) / cell.trials;
      const double d = cell.n / N;
      const double r = static_cast<double>(cell.k) / cell.n;
      const int shade = static_cast<int>(255.0 * (1.0 - frac));
      os << "<rect x=\"" << fmt(sx(d) - 4) << "\" y=\"" << fmt(sy(r) - 4)
         << "\" width=\"8\" height=\"8\" fill=\"rgb(" << shade << ',' << 255 - shade
         << ",128)\"/>\n";
    }
  }

  // axes
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kH - kMargin << "\" x2=\"" << kW - kMargin
     << "\" y2=\"" << kH - kMargin << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kH - kMargin << "\" x2=\"" << kMargin
     << "\" y2=\"" << kMargin << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 12 << "\">delta = n/N</text>\n";
  os << "<text x=\"12\" y=\"" << kH / 2 << "\" transform=\"rotate(-90 12 " << kH / 2
     << ")\">rho = k/n</text>\n";

  for (const auto& c : curves) {
    os << "<polyline fill=\"none\" stroke=\"" << curve_color(c) << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < c.samples.size(); ++i) {
      if (i) os << ' ';
      os << fmt(sx(c.samples[i].delta)) << ',' << fmt(sy(c.samples[i].rho));
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void emit_svg_phase_diagram(const std::vector<PhaseCurve>& curves, const GridResult* grid,
                            const std::string& path) {
  detail::write_atomic(path, svg_string(curves, grid));
}

}  // namespace polyphase
