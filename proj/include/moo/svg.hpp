#pragma once

#include <string>
#include <utility>
#include <vector>

namespace moo::svg {

struct Point {
    double x = 0.0;
    double y = 0.0;
    int series = 0;  ///< color index
};

/// Line segment in data coordinates (used for the preference rays).
struct Segment {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
};

/// Writes a self-contained objective-space scatter plot: axes, the Pareto
/// front polyline, one dotted path per ray, one circle per point. Floats are
/// written with fixed 6-decimal formatting, so identical inputs give
/// byte-identical files.
void emit_svg(const std::vector<Point>& points,
              const std::vector<std::pair<double, double>>& pf_curve,
              const std::vector<Segment>& rays, const std::string& path);

/// The document itself (exposed for tests).
std::string render(const std::vector<Point>& points,
                   const std::vector<std::pair<double, double>>& pf_curve,
                   const std::vector<Segment>& rays);

}  // namespace moo::svg
