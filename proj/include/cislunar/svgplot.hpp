#pragma once

#include <string>
#include <vector>

namespace cislunar::svg {

struct Series {
    std::vector<double> x;
    std::vector<double> y;
    std::string label;
    std::string color = "#1f77b4";
    bool points_only = false;  // scatter instead of polyline
};

struct PlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
    bool equal_axes = false;   // same scale on both axes (orbit views)
    bool unit_circle = false;  // overlay the unit circle (eigenvalue plots)
    int width = 720;
    int height = 480;
};

/// Render line/scatter series into a standalone SVG file.
void write_plot(const std::string& path, const std::vector<Series>& series,
                const PlotOptions& options);

}  // namespace cislunar::svg
