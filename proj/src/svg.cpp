#include "moo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "moo/csv.hpp"
#include "moo/errors.hpp"

namespace moo::svg {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr int kMargin = 48;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fixed(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

struct Frame {
    double min_x, max_x, min_y, max_y;

    double px(double x) const {
        return kMargin + (x - min_x) / (max_x - min_x) * (kWidth - 2 * kMargin);
    }
    double py(double y) const {
        return kHeight - kMargin - (y - min_y) / (max_y - min_y) * (kHeight - 2 * kMargin);
    }
};

}  // namespace

std::string render(const std::vector<Point>& points,
                   const std::vector<std::pair<double, double>>& pf_curve,
                   const std::vector<Segment>& rays) {
    double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
    bool seeded = false;
    const auto grow = [&](double x, double y) {
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ValidationError("emit_svg: non-finite coordinate");
        if (!seeded) {
            min_x = max_x = x;
            min_y = max_y = y;
            seeded = true;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    };
    for (const Point& p : points) grow(p.x, p.y);
    for (const auto& [x, y] : pf_curve) grow(x, y);
    for (const Segment& s : rays) {
        grow(s.x0, s.y0);
        grow(s.x1, s.y1);
    }
    // Pad so markers on the hull stay inside the frame.
    const double pad_x = (max_x - min_x) * 0.05 + 1e-12;
    const double pad_y = (max_y - min_y) * 0.05 + 1e-12;
    const Frame frame{min_x - pad_x, max_x + pad_x, min_y - pad_y, max_y + pad_y};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    // Axes.
    out << "<line class=\"axis\" x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin
        << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
        << "\" stroke=\"black\"/>\n";
    out << "<line class=\"axis\" x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\""
        << kMargin << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";

    if (!pf_curve.empty()) {
        out << "<path class=\"pf\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\" d=\"";
        for (std::size_t i = 0; i < pf_curve.size(); ++i) {
            out << (i == 0 ? 'M' : 'L') << fixed(frame.px(pf_curve[i].first)) << ' '
                << fixed(frame.py(pf_curve[i].second));
        }
        out << "\"/>\n";
    }
    for (const Segment& s : rays) {
        out << "<path class=\"ray\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 3\" d=\"M"
            << fixed(frame.px(s.x0)) << ' ' << fixed(frame.py(s.y0)) << 'L'
            << fixed(frame.px(s.x1)) << ' ' << fixed(frame.py(s.y1)) << "\"/>\n";
    }
    for (const Point& p : points) {
        const char* color = kPalette[static_cast<std::size_t>(p.series) %
                                     (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<circle cx=\"" << fixed(frame.px(p.x)) << "\" cy=\"" << fixed(frame.py(p.y))
            << "\" r=\"3.5\" fill=\"" << color << "\" fill-opacity=\"0.85\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void emit_svg(const std::vector<Point>& points,
              const std::vector<std::pair<double, double>>& pf_curve,
              const std::vector<Segment>& rays, const std::string& path) {
    csv::write_file(path, render(points, pf_curve, rays));
}

}  // namespace moo::svg
