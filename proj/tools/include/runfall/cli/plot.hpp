#pragma once

// Self-contained SVG emitters. Output bytes depend only on the input.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "runfall/ecdf.hpp"
#include "runfall/runtime.hpp"

namespace runfall::cli {

enum class PlotKind { ecdf, scaling };

struct PlotSpec {
  PlotKind kind = PlotKind::ecdf;
  bool log_x = true;
  /// Scaling plots only; ECDF plots always span [0, 1] linearly.
  bool log_y = true;
  XUnit x_unit = XUnit::evals;
  std::string title;
  /// Written into the <metadata> element, in order.
  std::vector<std::pair<std::string, std::string>> metadata;
};

struct LabeledCurve {
  std::string label;
  EcdfCurve curve;
};

struct ScalingSeries {
  std::string label;
  std::vector<ScalingPoint> points;
};

inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgHeight = 600;

/// Step plot, one <polyline> per curve, a cross glyph at (cross_x, F(cross_x))
/// when the curve has one and a dot at twice the largest finite runtime with
/// height solved_fraction. Throws InvalidArgument on an empty list.
std::string render_ecdf_svg(std::span<const LabeledCurve> curves, const PlotSpec& spec);

/// aRT / n against n. Missing points become an upward arrow at the top edge.
/// Throws InvalidArgument on an empty list.
std::string render_scaling_svg(std::span<const ScalingSeries> series, const PlotSpec& spec);

}  // namespace runfall::cli
