#pragma once

#include <string>
#include <vector>

namespace statgeo::scenario {

struct PlotSeries {
    std::vector<double> x, y;
    std::string label;
    std::string color;  // empty picks from a fixed palette
};

struct PlotOptions {
    std::string title;
    std::string x_label = "x";
    std::string y_label = "y";
    bool log_y = false;  // nonpositive samples are dropped
    int width = 720;
    int height = 480;
};

void write_svg_plot(const std::string& path,
                    const std::vector<PlotSeries>& series,
                    const PlotOptions& options);

}  // namespace statgeo::scenario
