#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zipflaw/powerlaw.hpp"

namespace zipflaw {

/// Power-law curve y = exp(intercept) * x^slope drawn over [x_min, x_max]
/// (a straight segment on log-log axes).
struct FigureLine {
    double slope = 0.0;
    double intercept = 0.0;  // natural-log scale
    double x_min = 0.0;
    double x_max = 0.0;
};

struct Figure {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = true;
    bool log_y = true;
    std::vector<Point> points;
    std::vector<FigureLine> lines;
    std::optional<double> marker_x;  // dashed vertical marker
};

/// Pure function of the figure: fixed canvas, fixed element order, all
/// coordinates printed with two decimals, so equal figures give equal
/// bytes. Log axes require the corresponding coordinates to be positive.
std::string render_svg(const Figure& figure);

}  // namespace zipflaw
