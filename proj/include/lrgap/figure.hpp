#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lrgap/scan.hpp"

namespace lrgap {

/// Scatter of certified bound (x) against exact gap (y) with the three
/// series from the scan: improved lower bounds as blue dots, plain lower
/// bounds as yellow triangles, upper bounds as green squares. Square
/// 640x640 canvas, data range [0, 0.55]^2 mapped linearly, diagonal x=y
/// and a vertical reference line (1/6 by default for n=6 scans).
inline void write_figure_svg(const std::vector<ScanRow>& rows,
                             std::ostream& os, double vline = 1.0 / 6.0) {
    constexpr double W = 640.0, range = 0.55;
    auto px = [&](double v) { return v / range * W; };
    auto py = [&](double v) { return W - v / range * W; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
          "height=\"640\" viewBox=\"0 0 640 640\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\" "
          "stroke=\"black\"/>\n";
    // Reference lines.
    os << "<line x1=\"" << px(0.0) << "\" y1=\"" << py(0.0) << "\" x2=\""
       << px(range) << "\" y2=\"" << py(range)
       << "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << px(vline) << "\" y1=\"0\" x2=\"" << px(vline)
       << "\" y2=\"640\" stroke=\"gray\" stroke-width=\"1\"/>\n";

    const char* certified = "certified";
    for (const ScanRow& r : rows) {
        const double y = r.gap_value.to_double();
        if (r.status_minus_q == certified) {
            os << "<circle class=\"lower-q\" cx=\"" << px(r.lambda_minus_q_cert)
               << "\" cy=\"" << py(y) << "\" r=\"2.5\" fill=\"blue\"/>\n";
        }
        if (r.status_minus == certified) {
            const double cx = px(r.lambda_minus_cert), cy = py(y);
            os << "<polygon class=\"lower\" points=\"" << cx << ',' << cy - 3.5
               << ' ' << cx - 3.0 << ',' << cy + 2.5 << ' ' << cx + 3.0 << ','
               << cy + 2.5 << "\" fill=\"gold\"/>\n";
        }
        if (r.status_plus == certified) {
            os << "<rect class=\"upper\" x=\"" << px(r.lambda_plus_cert) - 2.5
               << "\" y=\"" << py(y) - 2.5
               << "\" width=\"5\" height=\"5\" fill=\"green\"/>\n";
        }
    }

    // Axes labels and legend.
    os << "<text x=\"320\" y=\"634\" font-size=\"14\" "
          "text-anchor=\"middle\">certified bound</text>\n";
    os << "<text x=\"14\" y=\"320\" font-size=\"14\" text-anchor=\"middle\" "
          "transform=\"rotate(-90 14 320)\">gap(v)</text>\n";
    os << "<g font-size=\"13\">\n"
          "<circle cx=\"480\" cy=\"590\" r=\"2.5\" fill=\"blue\"/>"
          "<text x=\"490\" y=\"594\">lower bound (q)</text>\n"
          "<polygon points=\"480,586.5 477,593.5 483,593.5\" fill=\"gold\" "
          "transform=\"translate(0,24)\"/>"
          "<text x=\"490\" y=\"618\">lower bound</text>\n"
          "<rect x=\"477.5\" y=\"631.5\" width=\"5\" height=\"5\" "
          "fill=\"green\"/><text x=\"490\" y=\"638\">upper bound</text>\n"
          "</g>\n";
    os << "</svg>\n";
}

}  // namespace lrgap
