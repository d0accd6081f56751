#include "statgeo/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "statgeo/errors.hpp"

namespace statgeo::scenario {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#ff7f0e", "#9467bd", "#8c564b"};

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

}  // namespace

void write_svg_plot(const std::string& path,
                    const std::vector<PlotSeries>& series,
                    const PlotOptions& options) {
    const double left = 62, right = 16, top = 34, bottom = 46;
    const double plot_w = options.width - left - right;
    const double plot_h = options.height - top - bottom;

    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            double y = s.y[i];
            if (!std::isfinite(s.x[i]) || !std::isfinite(y)) continue;
            if (options.log_y) {
                if (y <= 0) continue;
                y = std::log10(y);
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!std::isfinite(xmin)) {  // nothing plottable, draw an empty frame
        xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) {
        ymax += 0.5;
        ymin -= 0.5;
    }
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) {
        return left + (x - xmin) / (xmax - xmin) * plot_w;
    };
    auto py = [&](double yv) {
        double y = options.log_y ? std::log10(yv) : yv;
        return top + (ymax - y) / (ymax - ymin) * plot_h;
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << options.width << "\" height=\"" << options.height
        << "\" viewBox=\"0 0 " << options.width << " " << options.height
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << options.width / 2.0
        << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">"
        << options.title << "</text>\n";

    // grid and ticks
    const int n_ticks = 5;
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= n_ticks; ++i) {
        double fx = xmin + (xmax - xmin) * i / n_ticks;
        double gx = px(fx);
        out << "<line x1=\"" << gx << "\" y1=\"" << top << "\" x2=\"" << gx
            << "\" y2=\"" << top + plot_h
            << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << gx << "\" y=\"" << top + plot_h + 16
            << "\" text-anchor=\"middle\">" << short_num(fx) << "</text>\n";
        double fy = ymin + (ymax - ymin) * i / n_ticks;
        double gy = top + (ymax - fy) / (ymax - ymin) * plot_h;
        out << "<line x1=\"" << left << "\" y1=\"" << gy << "\" x2=\""
            << left + plot_w << "\" y2=\"" << gy
            << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        double label = options.log_y ? std::pow(10.0, fy) : fy;
        out << "<text x=\"" << left - 6 << "\" y=\"" << gy + 4
            << "\" text-anchor=\"end\">" << short_num(label) << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\""
        << options.height - 8 << "\" text-anchor=\"middle\">"
        << options.x_label << "</text>\n";
    out << "<text x=\"14\" y=\"" << top + plot_h / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << top + plot_h / 2 << ")\">" << options.y_label
        << (options.log_y ? " (log scale)" : "") << "</text>\n";
    out << "</g>\n";

    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";

    int color_i = 0;
    for (const auto& s : series) {
        std::string color = s.color.empty()
                                ? kPalette[color_i % 6]
                                : s.color;
        ++color_i;
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (options.log_y && s.y[i] <= 0) continue;
            if (!first) out << ' ';
            out << short_num(px(s.x[i])) << ',' << short_num(py(s.y[i]));
            first = false;
        }
        out << "\"/>\n";
    }

    // legend
    double ly = top + 14;
    color_i = 0;
    for (const auto& s : series) {
        std::string color = s.color.empty()
                                ? kPalette[color_i % 6]
                                : s.color;
        ++color_i;
        if (s.label.empty()) continue;
        out << "<line x1=\"" << left + plot_w - 130 << "\" y1=\"" << ly
            << "\" x2=\"" << left + plot_w - 108 << "\" y2=\"" << ly
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << left + plot_w - 102 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label
            << "</text>\n";
        ly += 16;
    }

    out << "</svg>\n";
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace statgeo::scenario
