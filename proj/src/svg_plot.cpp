#include "zipflaw/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "zipflaw/errors.hpp"

namespace zipflaw {

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 616, kTop = 36, kBottom = 426;

struct Axis {
    bool log = true;
    double t_min = 0, t_max = 1;  // transformed (log10 or identity) domain

    double transform(double v, const char* what) const {
        if (!log) return v;
        if (!(v > 0.0))
            throw DomainError(std::string("log-scale ") + what +
                              " axis needs positive values");
        return std::log10(v);
    }
    void include(double t) {
        t_min = std::min(t_min, t);
        t_max = std::max(t_max, t);
    }
    void finish() {
        if (t_max - t_min < 1e-12) {
            t_min -= 0.5;
            t_max += 0.5;
        } else {
            const double m = 0.04 * (t_max - t_min);
            t_min -= m;
            t_max += m;
        }
    }
    double fraction(double t) const { return (t - t_min) / (t_max - t_min); }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double line_y(const FigureLine& line, double x) {
    return std::exp(line.intercept + line.slope * std::log(x));
}

void tick_labels(std::string& svg, const Axis& axis, bool horizontal,
                 double to_px(const Axis&, double)) {
    char label[32];
    auto emit = [&](double t, const std::string& text) {
        const double px = to_px(axis, t);
        if (horizontal) {
            svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
                   num(px) + "\" y2=\"" + num(kBottom + 5) +
                   "\" stroke=\"#333333\"/>\n";
            svg += "<text x=\"" + num(px) + "\" y=\"" + num(kBottom + 19) +
                   "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#333333\">" + text +
                   "</text>\n";
        } else {
            svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(px) + "\" x2=\"" +
                   num(kLeft) + "\" y2=\"" + num(px) + "\" stroke=\"#333333\"/>\n";
            svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(px + 4) +
                   "\" font-size=\"11\" text-anchor=\"end\" fill=\"#333333\">" + text +
                   "</text>\n";
        }
    };
    if (axis.log) {
        const int lo = static_cast<int>(std::ceil(axis.t_min));
        const int hi = static_cast<int>(std::floor(axis.t_max));
        for (int d = lo; d <= hi; ++d) {
            std::snprintf(label, sizeof label, "1e%d", d);
            emit(static_cast<double>(d), label);
        }
    } else {
        for (int i = 0; i <= 4; ++i) {
            const double t = axis.t_min + (axis.t_max - axis.t_min) * i / 4.0;
            std::snprintf(label, sizeof label, "%.3g", t);
            emit(t, label);
        }
    }
}

double x_to_px(const Axis& axis, double t) {
    return kLeft + axis.fraction(t) * (kRight - kLeft);
}

double y_to_px(const Axis& axis, double t) {
    return kBottom - axis.fraction(t) * (kBottom - kTop);
}

}  // namespace

std::string render_svg(const Figure& figure) {
    Axis xa, ya;
    xa.log = figure.log_x;
    ya.log = figure.log_y;

    bool seeded = false;
    auto include = [&](double x, double y) {
        const double tx = xa.transform(x, "x");
        const double ty = ya.transform(y, "y");
        if (!seeded) {
            xa.t_min = xa.t_max = tx;
            ya.t_min = ya.t_max = ty;
            seeded = true;
        } else {
            xa.include(tx);
            ya.include(ty);
        }
    };
    for (const auto& p : figure.points) include(p.x, p.y);
    for (const auto& line : figure.lines) {
        include(line.x_min, line_y(line, line.x_min));
        include(line.x_max, line_y(line, line.x_max));
    }
    if (figure.marker_x) {
        const double tx = xa.transform(*figure.marker_x, "x");
        if (!seeded) throw DomainError("figure has nothing to draw");
        xa.include(tx);
    }
    if (!seeded) throw DomainError("figure has nothing to draw");
    xa.finish();
    ya.finish();

    std::string svg;
    svg.reserve(4096 + figure.points.size() * 64);
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg += "<rect width=\"640\" height=\"480\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"" + num((kLeft + kRight) / 2) +
           "\" y=\"22\" font-size=\"14\" text-anchor=\"middle\" fill=\"#111111\">" +
           figure.title + "</text>\n";
    svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
           num(kRight - kLeft) + "\" height=\"" + num(kBottom - kTop) +
           "\" fill=\"none\" stroke=\"#333333\"/>\n";

    tick_labels(svg, xa, true, x_to_px);
    tick_labels(svg, ya, false, y_to_px);

    svg += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" + num(kHeight - 14) +
           "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#111111\">" +
           figure.x_label + "</text>\n";
    svg += "<text transform=\"translate(16," + num((kTop + kBottom) / 2) +
           ") rotate(-90)\" font-size=\"12\" text-anchor=\"middle\" fill=\"#111111\">" +
           figure.y_label + "</text>\n";

    if (figure.marker_x) {
        const double px = x_to_px(xa, xa.transform(*figure.marker_x, "x"));
        svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(px) +
               "\" y2=\"" + num(kBottom) +
               "\" stroke=\"#888888\" stroke-dasharray=\"6,4\"/>\n";
    }

    for (const auto& p : figure.points) {
        const double px = x_to_px(xa, xa.transform(p.x, "x"));
        const double py = y_to_px(ya, ya.transform(p.y, "y"));
        svg += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) +
               "\" r=\"2.5\" fill=\"#2c3e50\" fill-opacity=\"0.75\"/>\n";
    }

    static const char* kLineColors[] = {"#c0392b", "#2471a3"};
    std::size_t color = 0;
    for (const auto& line : figure.lines) {
        const double x1 = x_to_px(xa, xa.transform(line.x_min, "x"));
        const double y1 = y_to_px(ya, ya.transform(line_y(line, line.x_min), "y"));
        const double x2 = x_to_px(xa, xa.transform(line.x_max, "x"));
        const double y2 = y_to_px(ya, ya.transform(line_y(line, line.x_max), "y"));
        svg += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
               "\" y2=\"" + num(y2) + "\" stroke=\"" + kLineColors[color % 2] +
               "\" stroke-width=\"1.8\"/>\n";
        ++color;
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace zipflaw
