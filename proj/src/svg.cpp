#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "innerlab/experiments.hpp"

namespace innerlab {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string emit_plot(const ExperimentReport& report, const std::string& kind) {
    const ReportSeries& series = report.find_series(kind);
    if (series.xs.empty()) throw std::invalid_argument("emit_plot: empty series " + kind);

    const double width = 640, height = 420;
    const double ml = 70, mr = 20, mt = 40, mb = 50;

    double x_lo = *std::min_element(series.xs.begin(), series.xs.end());
    double x_hi = *std::max_element(series.xs.begin(), series.xs.end());
    double y_lo = *std::min_element(series.ys.begin(), series.ys.end());
    double y_hi = *std::max_element(series.ys.begin(), series.ys.end());

    // Tolerance bands from entries whose expectation sits inside the range.
    std::vector<std::pair<double, double>> bands;
    for (const auto& e : report.entries) {
        if (e.tolerance <= 0.0) continue;
        bands.push_back({e.expected - e.tolerance, e.expected + e.tolerance});
        y_lo = std::min(y_lo, e.expected);
        y_hi = std::max(y_hi, e.expected);
    }
    std::sort(bands.begin(), bands.end());
    bands.erase(std::unique(bands.begin(), bands.end()), bands.end());

    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    if (y_hi == y_lo) y_hi = y_lo + 1.0;
    double pad = 0.08 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    auto sx = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (width - ml - mr); };
    auto sy = [&](double y) { return height - mb - (y - y_lo) / (y_hi - y_lo) * (height - mt - mb); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"16\">" << report.name << " : " << kind << "</text>\n";

    for (const auto& [lo, hi] : bands) {
        double top = sy(std::min(hi, y_hi)), bottom = sy(std::max(lo, y_lo));
        if (bottom <= top) continue;
        svg << "<rect x=\"" << fmt(ml) << "\" y=\"" << fmt(top) << "\" width=\""
            << fmt(width - ml - mr) << "\" height=\"" << fmt(bottom - top)
            << "\" fill=\"#cfe8cf\" opacity=\"0.6\"/>\n";
    }

    // Axes with four ticks per direction.
    svg << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(height - mb) << "\" x2=\""
        << fmt(width - mr) << "\" y2=\"" << fmt(height - mb) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(mt) << "\" x2=\"" << fmt(ml)
        << "\" y2=\"" << fmt(height - mb) << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        double xv = x_lo + (x_hi - x_lo) * t / 4.0;
        double yv = y_lo + (y_hi - y_lo) * t / 4.0;
        svg << "<line x1=\"" << fmt(sx(xv)) << "\" y1=\"" << fmt(height - mb) << "\" x2=\""
            << fmt(sx(xv)) << "\" y2=\"" << fmt(height - mb + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(sx(xv)) << "\" y=\"" << fmt(height - mb + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(xv)
            << "</text>\n";
        svg << "<line x1=\"" << fmt(ml - 5) << "\" y1=\"" << fmt(sy(yv)) << "\" x2=\"" << fmt(ml)
            << "\" y2=\"" << fmt(sy(yv)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(ml - 8) << "\" y=\"" << fmt(sy(yv) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(yv)
            << "</text>\n";
    }

    svg << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series.xs.size(); ++i) {
        if (i) svg << ' ';
        svg << fmt(sx(series.xs[i])) << ',' << fmt(sy(series.ys[i]));
    }
    svg << "\"/>\n";
    for (std::size_t i = 0; i < series.xs.size(); ++i)
        svg << "<circle cx=\"" << fmt(sx(series.xs[i])) << "\" cy=\"" << fmt(sy(series.ys[i]))
            << "\" r=\"3\" fill=\"#1f6fb2\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace innerlab
