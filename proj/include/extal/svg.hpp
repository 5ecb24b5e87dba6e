#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "extal/extremal.hpp"
#include "extal/stats.hpp"

namespace extal {

struct PlotOptions {
    int width = 640;
    int height = 640;
    int margin = 48;
    bool mark_stretch = true;
    std::string title;
};

namespace detail {

inline std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace detail

/// Standalone SVG of the two-dimensional representation: X index rightward,
/// Y index upward, highest and lowest alignments as polylines through their
/// match points, uniqueness points as filled dots, and an asterisk at the
/// end of the maximal non-uniqueness stretch. Byte output is deterministic
/// for fixed inputs and options.
inline std::string render_svg(const ExtremalPair& pair, int n, int m,
                              const PlotOptions& options = {}) {
    const double w = options.width, h = options.height, mg = options.margin;
    const double span_x = w - 2 * mg, span_y = h - 2 * mg;
    const double nx = n > 0 ? n : 1, my = m > 0 ? m : 1;
    auto px = [&](double i) { return mg + i / nx * span_x; };
    auto py = [&](double j) { return h - mg - j / my * span_y; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.width) +
           "\" height=\"" + std::to_string(options.height) + "\" viewBox=\"0 0 " +
           std::to_string(options.width) + " " + std::to_string(options.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes with corner labels
    svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
    svg += "<line x1=\"" + detail::fmt2(px(0)) + "\" y1=\"" + detail::fmt2(py(0)) + "\" x2=\"" +
           detail::fmt2(px(nx)) + "\" y2=\"" + detail::fmt2(py(0)) + "\"/>\n";
    svg += "<line x1=\"" + detail::fmt2(px(0)) + "\" y1=\"" + detail::fmt2(py(0)) + "\" x2=\"" +
           detail::fmt2(px(0)) + "\" y2=\"" + detail::fmt2(py(my)) + "\"/>\n";
    svg += "</g>\n";
    svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    svg += "<text x=\"" + detail::fmt2(px(0) - 4) + "\" y=\"" + detail::fmt2(py(0) + 14) +
           "\" text-anchor=\"end\">0</text>\n";
    svg += "<text x=\"" + detail::fmt2(px(nx)) + "\" y=\"" + detail::fmt2(py(0) + 14) +
           "\" text-anchor=\"middle\">" + std::to_string(n) + "</text>\n";
    svg += "<text x=\"" + detail::fmt2(px(0) - 6) + "\" y=\"" + detail::fmt2(py(my) + 4) +
           "\" text-anchor=\"end\">" + std::to_string(m) + "</text>\n";
    if (!options.title.empty()) {
        svg += "<text x=\"" + detail::fmt2(w / 2) + "\" y=\"" + detail::fmt2(mg / 2) +
               "\" text-anchor=\"middle\">" + options.title + "</text>\n";
    }
    svg += "</g>\n";

    auto polyline = [&](const Alignment& a, const char* color) {
        if (a.empty()) return std::string();
        std::string pts;
        for (const auto& p : a.pairs) {
            if (!pts.empty()) pts += ' ';
            pts += detail::fmt2(px(p.i)) + "," + detail::fmt2(py(p.j));
        }
        return "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    };
    svg += polyline(pair.highest, "#cc3333");
    svg += polyline(pair.lowest, "#3366cc");

    const std::vector<MatchPair> shared = uniqueness_pairs(pair);
    for (const auto& p : shared) {
        svg += "<circle cx=\"" + detail::fmt2(px(p.i)) + "\" cy=\"" + detail::fmt2(py(p.j)) +
               "\" r=\"2\" fill=\"black\"/>\n";
    }

    if (options.mark_stretch && n > 0) {
        // first interval of X positions attaining the maximal stretch; the
        // marker sits at its right end
        std::vector<int> xs;
        for (const auto& p : shared) xs.push_back(p.i);
        xs.push_back(n + 1);
        int best = -1, end = n + 1, prev = 0;
        for (int c : xs) {
            if (c - prev - 1 > best) {
                best = c - prev - 1;
                end = c;
            }
            prev = c;
        }
        if (best > 0) {
            const int mark_x = std::min(end, n);
            const StepCurve high = StepCurve::over_x(pair.highest, n);
            svg += "<text x=\"" + detail::fmt2(px(mark_x)) + "\" y=\"" +
                   detail::fmt2(py(high.value(mark_x)) - 4) +
                   "\" font-family=\"sans-serif\" font-size=\"18\" fill=\"black\" "
                   "text-anchor=\"middle\">*</text>\n";
        }
    }

    svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<text x=\"" + detail::fmt2(w - mg) + "\" y=\"" + detail::fmt2(mg / 2) +
           "\" text-anchor=\"end\" fill=\"#cc3333\">highest</text>\n";
    svg += "<text x=\"" + detail::fmt2(w - mg) + "\" y=\"" + detail::fmt2(mg / 2 + 14) +
           "\" text-anchor=\"end\" fill=\"#3366cc\">lowest</text>\n";
    svg += "</g>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace extal
