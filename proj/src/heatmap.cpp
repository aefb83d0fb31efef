#include "excimech/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace excimech {

namespace {

struct Rgb {
  double r, g, b;
};

// Perceptually uniform dark-to-bright map (viridis control points).
constexpr Rgb kStops[] = {
    {0.267004, 0.004874, 0.329415}, {0.282623, 0.140926, 0.457517},
    {0.253935, 0.265254, 0.529983}, {0.206756, 0.371758, 0.553117},
    {0.163625, 0.471133, 0.558148}, {0.127568, 0.566949, 0.550556},
    {0.134692, 0.658636, 0.517649}, {0.266941, 0.748751, 0.440573},
    {0.477504, 0.821444, 0.318195}, {0.741388, 0.873449, 0.149561},
    {0.993248, 0.906157, 0.143936}};

std::string color_at(double t) {
  t = std::clamp(t, 0.0, 1.0);
  constexpr int n = static_cast<int>(std::size(kStops)) - 1;
  const double pos = t * n;
  const int i = std::min(static_cast<int>(pos), n - 1);
  const double f = pos - i;
  auto channel = [&](double a, double b) {
    return static_cast<int>(std::lround(255.0 * (a + (b - a) * f)));
  };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                channel(kStops[i].r, kStops[i + 1].r),
                channel(kStops[i].g, kStops[i + 1].g),
                channel(kStops[i].b, kStops[i + 1].b));
  return buf;
}

std::string num(double x, const char* fmt = "%.2f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

struct DisplayUnit {
  std::string suffix;
  double divisor;
};

DisplayUnit display_unit(const AxisSpec& ax) {
  if (ax.parameter == "temperature") return {"K", 1.0};
  if (ax.parameter == "power") {
    return std::max(std::abs(ax.min), std::abs(ax.max)) < 1.0
               ? DisplayUnit{"mW", 1e-3}
               : DisplayUnit{"W", 1.0};
  }
  const double span = std::max(std::abs(ax.min), std::abs(ax.max));
  if (span >= 1e9) return {"GHz", 1e9};
  if (span >= 1e6) return {"MHz", 1e6};
  return {"Hz", 1.0};
}

std::string axis_label(const AxisSpec& ax) {
  return ax.parameter + " (" + display_unit(ax).suffix + ")";
}

}  // namespace

std::string render_heatmap(const GridResult& grid, const std::string& column) {
  if (grid.config.axes.size() != 2) {
    throw UsageError(
        "render_heatmap: needs a 2D grid; for 1D sweeps plot the CSV "
        "column directly");
  }
  // Column selector.
  int e_index = -1;
  enum class Col { kE, kNuMin, kNeff, kMaxRe } col;
  if (column == "nu_min") {
    col = Col::kNuMin;
  } else if (column == "n_eff") {
    col = Col::kNeff;
  } else if (column == "max_re") {
    col = Col::kMaxRe;
  } else {
    col = Col::kE;
    for (size_t k = 0; k < grid.e_labels.size(); ++k) {
      if (grid.e_labels[k] == column) e_index = static_cast<int>(k);
    }
    if (e_index < 0) {
      std::ostringstream os;
      os << "render_heatmap: unknown column '" << column << "'; available:";
      for (const std::string& label : grid.e_labels) os << " " << label;
      os << " nu_min n_eff max_re";
      throw UsageError(os.str());
    }
  }
  auto value_of = [&](const GridRow& row) -> double {
    switch (col) {
      case Col::kE: return row.e_n[static_cast<size_t>(e_index)];
      case Col::kNuMin: return row.nu_min;
      case Col::kNeff: return row.n_eff;
      case Col::kMaxRe: return row.max_re;
    }
    return std::numeric_limits<double>::quiet_NaN();
  };

  const int n1 = grid.config.axes[0].points;
  const int n2 = grid.config.axes[1].points;
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  for (const GridRow& row : grid.rows) {
    const double v = value_of(row);
    if (std::isfinite(v)) {
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
  }
  const bool any_finite = std::isfinite(vmin);
  const bool degenerate = !any_finite || vmin == vmax;

  constexpr double kLeft = 72, kTop = 46, kPlotW = 560, kPlotH = 560;
  constexpr double kRight = 120, kBottom = 64;
  const double width = kLeft + kPlotW + kRight;
  const double height = kTop + kPlotH + kBottom;
  const double cw = kPlotW / n1;
  const double ch = kPlotH / n2;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
      << " " << num(height) << "\">\n";
  svg << "<desc>column=" << column;
  if (!grid.inherited_phases.empty()) {
    svg << "; coupling phases inherited from base steady state (rad): G_1="
        << format_number(grid.inherited_phases[0])
        << ", G_2=" << format_number(grid.inherited_phases[1]);
  }
  svg << "</desc>\n";
  svg << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" "
         "patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">"
         "<rect width=\"6\" height=\"6\" fill=\"#dcdcdc\"/>"
         "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#969696\" "
         "stroke-width=\"2\"/></pattern></defs>\n";
  svg << "<rect width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"#ffffff\"/>\n";
  svg << "<text x=\"" << num(kLeft + kPlotW / 2) << "\" y=\"24\" "
         "font-family=\"monospace\" font-size=\"15\" text-anchor=\"middle\">"
      << column << "</text>\n";

  // Cells; row-major rows, axis 1 outer; axis 2 grows upward.
  for (int i1 = 0; i1 < n1; ++i1) {
    for (int i2 = 0; i2 < n2; ++i2) {
      const GridRow& row =
          grid.rows[static_cast<size_t>(i1) * n2 + static_cast<size_t>(i2)];
      const double v = value_of(row);
      std::string fill;
      if (!std::isfinite(v) || row.status != "ok") {
        fill = "url(#hatch)";
      } else if (degenerate) {
        fill = color_at(0.5);
      } else {
        fill = color_at((v - vmin) / (vmax - vmin));
      }
      svg << "<rect x=\"" << num(kLeft + i1 * cw) << "\" y=\""
          << num(kTop + (n2 - 1 - i2) * ch) << "\" width=\"" << num(cw)
          << "\" height=\"" << num(ch) << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  svg << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\""
      << num(kPlotW) << "\" height=\"" << num(kPlotH)
      << "\" fill=\"none\" stroke=\"#000000\"/>\n";

  // Ticks: 5 per axis, in display units.
  const DisplayUnit u1 = display_unit(grid.config.axes[0]);
  const DisplayUnit u2 = display_unit(grid.config.axes[1]);
  for (int t = 0; t <= 4; ++t) {
    const double f = t / 4.0;
    const AxisSpec& ax1 = grid.config.axes[0];
    const AxisSpec& ax2 = grid.config.axes[1];
    const double x = kLeft + f * kPlotW;
    const double y = kTop + kPlotH - f * kPlotH;
    svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(kTop + kPlotH)
        << "\" x2=\"" << num(x) << "\" y2=\"" << num(kTop + kPlotH + 5)
        << "\" stroke=\"#000000\"/>\n";
    svg << "<text x=\"" << num(x) << "\" y=\"" << num(kTop + kPlotH + 20)
        << "\" font-family=\"monospace\" font-size=\"12\" "
           "text-anchor=\"middle\">"
        << num((ax1.min + f * (ax1.max - ax1.min)) / u1.divisor, "%.4g")
        << "</text>\n";
    svg << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(y)
        << "\" x2=\"" << num(kLeft) << "\" y2=\"" << num(y)
        << "\" stroke=\"#000000\"/>\n";
    svg << "<text x=\"" << num(kLeft - 9) << "\" y=\"" << num(y + 4)
        << "\" font-family=\"monospace\" font-size=\"12\" "
           "text-anchor=\"end\">"
        << num((ax2.min + f * (ax2.max - ax2.min)) / u2.divisor, "%.4g")
        << "</text>\n";
  }
  svg << "<text x=\"" << num(kLeft + kPlotW / 2) << "\" y=\""
      << num(height - 18)
      << "\" font-family=\"monospace\" font-size=\"13\" "
         "text-anchor=\"middle\">"
      << axis_label(grid.config.axes[0]) << "</text>\n";
  svg << "<text x=\"20\" y=\"" << num(kTop + kPlotH / 2)
      << "\" font-family=\"monospace\" font-size=\"13\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << num(kTop + kPlotH / 2) << ")\">" << axis_label(grid.config.axes[1])
      << "</text>\n";

  // Color legend.
  const double bx = kLeft + kPlotW + 26;
  const double bh = kPlotH * 0.7;
  const double by = kTop + (kPlotH - bh) / 2;
  constexpr int kPatches = 48;
  for (int t = 0; t < kPatches; ++t) {
    const double f = (t + 0.5) / kPatches;
    svg << "<rect x=\"" << num(bx) << "\" y=\""
        << num(by + bh - (t + 1) * bh / kPatches) << "\" width=\"16\" "
        << "height=\"" << num(bh / kPatches + 0.5) << "\" fill=\""
        << (degenerate ? color_at(0.5) : color_at(f)) << "\"/>\n";
  }
  svg << "<rect x=\"" << num(bx) << "\" y=\"" << num(by)
      << "\" width=\"16\" height=\"" << num(bh)
      << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  if (!any_finite) {
    svg << "<text x=\"" << num(bx + 22) << "\" y=\"" << num(by + bh / 2)
        << "\" font-family=\"monospace\" font-size=\"12\">all "
           "unstable</text>\n";
  } else if (degenerate) {
    svg << "<text x=\"" << num(bx + 22) << "\" y=\"" << num(by + bh / 2)
        << "\" font-family=\"monospace\" font-size=\"12\">"
        << num(vmin, "%.6g") << " (uniform)</text>\n";
  } else {
    svg << "<text x=\"" << num(bx + 22) << "\" y=\"" << num(by + 4)
        << "\" font-family=\"monospace\" font-size=\"12\">"
        << num(vmax, "%.6g") << "</text>\n";
    svg << "<text x=\"" << num(bx + 22) << "\" y=\"" << num(by + bh + 4)
        << "\" font-family=\"monospace\" font-size=\"12\">"
        << num(vmin, "%.6g") << "</text>\n";
  }
  // Hatch key.
  svg << "<rect x=\"" << num(bx) << "\" y=\"" << num(by + bh + 24)
      << "\" width=\"16\" height=\"16\" fill=\"url(#hatch)\" "
         "stroke=\"#000000\"/>\n";
  svg << "<text x=\"" << num(bx + 22) << "\" y=\"" << num(by + bh + 36)
      << "\" font-family=\"monospace\" font-size=\"12\">unstable</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_heatmap_file(const GridResult& grid, const std::string& column,
                        const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw UsageError("cannot open '" + path + "' for writing");
  }
  os << render_heatmap(grid, column);
}

}  // namespace excimech
