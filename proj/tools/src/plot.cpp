#include "runfall/cli/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "runfall/error.hpp"
#include "runfall/numfmt.hpp"

namespace runfall::cli {

namespace {

constexpr std::array<std::string_view, 8> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                     "#9467bd", "#8c564b", "#e377c2", "#17becf"};

constexpr double kLeft = 80.0;
constexpr double kRight = 620.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 540.0;

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string px(double v) { return format_fixed(v, 2); }

// Axis mapping, either log10 or linear over [lo, hi].
struct Axis {
  double lo;
  double hi;
  bool log;
  double from;
  double to;

  double map(double v) const {
    const double a = log ? std::log10(lo) : lo;
    const double b = log ? std::log10(hi) : hi;
    const double t = ((log ? std::log10(v) : v) - a) / (b - a);
    return from + t * (to - from);
  }
};

// Decade-aligned log range containing [lo, hi].
std::pair<double, double> decade_range(double lo, double hi) {
  double a = std::floor(std::log10(lo));
  double b = std::ceil(std::log10(hi));
  if (b <= a) b = a + 1;
  return {std::pow(10.0, a), std::pow(10.0, b)};
}

std::string decade_label(double v) {
  const long e = std::lround(std::log10(v));
  return "1e" + std::to_string(e);
}

std::string open_svg(const PlotSpec& spec) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + std::to_string(kSvgWidth) + " " +
         std::to_string(kSvgHeight) + "\" width=\"" + std::to_string(kSvgWidth) + "\" height=\"" +
         std::to_string(kSvgHeight) + "\">\n";
  out += "<metadata>";
  for (std::size_t i = 0; i < spec.metadata.size(); ++i) {
    if (i) out += "; ";
    out += escape_xml(spec.metadata[i].first) + "=" + escape_xml(spec.metadata[i].second);
  }
  out += "</metadata>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(kSvgWidth) + "\" height=\"" +
         std::to_string(kSvgHeight) + "\" fill=\"white\"/>\n";
  if (!spec.title.empty()) {
    out += "<text x=\"" + px((kLeft + kRight) / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
           escape_xml(spec.title) + "</text>\n";
  }
  return out;
}

void draw_frame(std::string& out, const Axis& x, const Axis& y, std::string_view x_label,
                std::string_view y_label, bool y_fraction) {
  out += "<rect class=\"frame\" x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" + px(kRight - kLeft) +
         "\" height=\"" + px(kBottom - kTop) + "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<g class=\"x-ticks\" font-size=\"12\" text-anchor=\"middle\">\n";
  if (x.log) {
    for (double v = x.lo; v <= x.hi * 1.0000001; v *= 10.0) {
      const double p = x.map(v);
      out += "<line x1=\"" + px(p) + "\" y1=\"" + px(kBottom) + "\" x2=\"" + px(p) + "\" y2=\"" + px(kBottom + 6) +
             "\" stroke=\"black\"/><text x=\"" + px(p) + "\" y=\"" + px(kBottom + 20) + "\">" + decade_label(v) +
             "</text>\n";
    }
  } else {
    for (int i = 0; i <= 5; ++i) {
      const double v = x.lo + (x.hi - x.lo) * i / 5.0;
      const double p = x.map(v);
      out += "<line x1=\"" + px(p) + "\" y1=\"" + px(kBottom) + "\" x2=\"" + px(p) + "\" y2=\"" + px(kBottom + 6) +
             "\" stroke=\"black\"/><text x=\"" + px(p) + "\" y=\"" + px(kBottom + 20) + "\">" +
             format_double(std::round(v * 100) / 100) + "</text>\n";
    }
  }
  out += "</g>\n<g class=\"y-ticks\" font-size=\"12\" text-anchor=\"end\">\n";
  if (y_fraction || !y.log) {
    for (int i = 0; i <= 5; ++i) {
      const double v = y.lo + (y.hi - y.lo) * i / 5.0;
      const double p = y.map(v);
      out += "<line x1=\"" + px(kLeft - 6) + "\" y1=\"" + px(p) + "\" x2=\"" + px(kLeft) + "\" y2=\"" + px(p) +
             "\" stroke=\"black\"/><text x=\"" + px(kLeft - 10) + "\" y=\"" + px(p + 4) + "\">" +
             format_double(std::round(v * 100) / 100) + "</text>\n";
    }
  } else {
    for (double v = y.lo; v <= y.hi * 1.0000001; v *= 10.0) {
      const double p = y.map(v);
      out += "<line x1=\"" + px(kLeft - 6) + "\" y1=\"" + px(p) + "\" x2=\"" + px(kLeft) + "\" y2=\"" + px(p) +
             "\" stroke=\"black\"/><text x=\"" + px(kLeft - 10) + "\" y=\"" + px(p + 4) + "\">" + decade_label(v) +
             "</text>\n";
    }
  }
  out += "</g>\n";
  out += "<text x=\"" + px((kLeft + kRight) / 2) + "\" y=\"" + px(kBottom + 45) +
         "\" text-anchor=\"middle\" font-size=\"14\">" + escape_xml(x_label) + "</text>\n";
  out += "<text x=\"20\" y=\"" + px((kTop + kBottom) / 2) + "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 " +
         px((kTop + kBottom) / 2) + ")\">" + escape_xml(y_label) + "</text>\n";
}

void draw_legend(std::string& out, std::size_t index, std::string_view label) {
  const double y = kTop + 10 + 22.0 * static_cast<double>(index);
  const std::string_view color = kColors[index % kColors.size()];
  out += "<g class=\"legend\"><line x1=\"" + px(kRight + 15) + "\" y1=\"" + px(y) + "\" x2=\"" + px(kRight + 40) +
         "\" y2=\"" + px(y) + "\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\"/><text x=\"" +
         px(kRight + 46) + "\" y=\"" + px(y + 4) + "\" font-size=\"12\">" + escape_xml(label) + "</text></g>\n";
}

// Pixel polyline without repeated points or collinear vertical runs.
std::string polyline_points(const std::vector<std::pair<double, double>>& raw) {
  std::vector<std::pair<std::string, std::string>> pts;
  for (const auto& [x, y] : raw) {
    std::pair<std::string, std::string> p{px(x), px(y)};
    if (!pts.empty() && pts.back() == p) continue;
    if (pts.size() >= 2 && pts.back().first == p.first && pts[pts.size() - 2].first == p.first) {
      pts.back() = p;
      continue;
    }
    pts.push_back(std::move(p));
  }
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += pts[i].first + "," + pts[i].second;
  }
  return out;
}

}  // namespace

std::string render_ecdf_svg(std::span<const LabeledCurve> curves, const PlotSpec& spec) {
  if (curves.empty()) throw InvalidArgument("render_ecdf_svg: no curves");

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& c : curves) {
    const auto r = c.curve.runtimes();
    if (!r.empty()) {
      lo = std::min(lo, r.front());
      hi = std::max(hi, 2.0 * r.back());
    }
    if (c.curve.cross_x()) {
      lo = std::min(lo, *c.curve.cross_x());
      hi = std::max(hi, *c.curve.cross_x());
    }
  }
  if (!std::isfinite(lo)) {
    lo = 1.0;
    hi = 10.0;
  }
  Axis x{0, 0, spec.log_x, kLeft, kRight};
  if (spec.log_x) {
    std::tie(x.lo, x.hi) = decade_range(std::max(lo, 1e-300), std::max(hi, lo));
  } else {
    x.lo = 0.0;
    x.hi = hi > 0.0 ? hi * 1.05 : 1.0;
  }
  const Axis y{0.0, 1.0, false, kBottom, kTop};

  std::string out = open_svg(spec);
  const std::string x_label = spec.x_unit == XUnit::evals_per_dimension ? "function evaluations / dimension"
                                                                         : "function evaluations";
  draw_frame(out, x, y, x_label, "fraction of function-target pairs", true);

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const EcdfCurve& curve = curves[i].curve;
    const std::string color(kColors[i % kColors.size()]);
    std::vector<std::pair<double, double>> raw;
    raw.emplace_back(x.map(x.lo), y.map(0.0));
    double previous = 0.0;
    for (const EcdfPoint& p : curve.steps()) {
      raw.emplace_back(x.map(p.x), y.map(previous));
      raw.emplace_back(x.map(p.x), y.map(p.fraction));
      previous = p.fraction;
    }
    if (curve.runtimes().empty()) raw.emplace_back(x.map(x.hi), y.map(0.0));
    out += "<polyline class=\"ecdf\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\" points=\"" +
           polyline_points(raw) + "\"/>\n";

    if (curve.cross_x()) {
      const double cx = x.map(*curve.cross_x());
      const double cy = y.map(curve(*curve.cross_x()));
      out += "<path class=\"cross\" stroke=\"" + color + "\" stroke-width=\"2\" d=\"M" + px(cx - 6) + "," +
             px(cy - 6) + " L" + px(cx + 6) + "," + px(cy + 6) + " M" + px(cx - 6) + "," + px(cy + 6) + " L" +
             px(cx + 6) + "," + px(cy - 6) + "\"/>\n";
    }
    const double dot_x = curve.runtimes().empty() ? x.hi : 2.0 * curve.runtimes().back();
    out += "<circle class=\"solved-dot\" cx=\"" + px(x.map(dot_x)) + "\" cy=\"" +
           px(y.map(curve.solved_fraction())) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
    draw_legend(out, i, curves[i].label);
  }
  out += "</svg>\n";
  return out;
}

std::string render_scaling_svg(std::span<const ScalingSeries> series, const PlotSpec& spec) {
  if (series.empty()) throw InvalidArgument("render_scaling_svg: no series");

  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = 0.0;
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = 0.0;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      x_lo = std::min(x_lo, static_cast<double>(p.dimension));
      x_hi = std::max(x_hi, static_cast<double>(p.dimension));
      if (p.art_per_dimension) {
        y_lo = std::min(y_lo, *p.art_per_dimension);
        y_hi = std::max(y_hi, *p.art_per_dimension);
      }
    }
  }
  if (!std::isfinite(x_lo)) throw InvalidArgument("render_scaling_svg: series without points");
  if (!std::isfinite(y_lo)) {
    y_lo = 1.0;
    y_hi = 10.0;
  }

  Axis x{0, 0, spec.log_x, kLeft, kRight};
  if (spec.log_x) {
    std::tie(x.lo, x.hi) = decade_range(x_lo, x_hi);
  } else {
    x.lo = 0.0;
    x.hi = x_hi * 1.05;
  }
  Axis y{0, 0, spec.log_y, kBottom, kTop};
  if (spec.log_y) {
    std::tie(y.lo, y.hi) = decade_range(y_lo, y_hi * 1.0000001);
  } else {
    y.lo = 0.0;
    y.hi = y_hi > 0.0 ? y_hi * 1.05 : 1.0;
  }

  std::string out = open_svg(spec);
  draw_frame(out, x, y, "dimension", "aRT / dimension", false);

  for (std::size_t i = 0; i < series.size(); ++i) {
    const std::string color(kColors[i % kColors.size()]);
    std::vector<ScalingPoint> points = series[i].points;
    std::sort(points.begin(), points.end(),
              [](const ScalingPoint& a, const ScalingPoint& b) { return a.dimension < b.dimension; });

    std::vector<std::pair<double, double>> line;
    for (const auto& p : points) {
      if (p.art_per_dimension) line.emplace_back(x.map(p.dimension), y.map(*p.art_per_dimension));
    }
    if (line.size() >= 2) {
      out += "<polyline class=\"scaling\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\" points=\"" +
             polyline_points(line) + "\"/>\n";
    }
    for (const auto& p : points) {
      const double cx = x.map(p.dimension);
      if (p.art_per_dimension) {
        out += "<circle class=\"marker\" cx=\"" + px(cx) + "\" cy=\"" + px(y.map(*p.art_per_dimension)) +
               "\" r=\"5\" fill=\"" + color + "\"/>\n";
      } else {
        const double top = kTop;
        out += "<path class=\"missing-arrow\" stroke=\"" + color + "\" stroke-width=\"2\" fill=\"none\" d=\"M" +
               px(cx) + "," + px(top + 30) + " L" + px(cx) + "," + px(top + 6) + " M" + px(cx - 6) + "," +
               px(top + 14) + " L" + px(cx) + "," + px(top + 6) + " L" + px(cx + 6) + "," + px(top + 14) + "\"/>\n";
      }
    }
    draw_legend(out, i, series[i].label);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace runfall::cli
