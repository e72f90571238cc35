#include "prd/svg_plot.hpp"

#include <cstdio>
#include <string>

namespace prd {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 50.0;

double sx(double x) { return kMargin + x * kSize; }
double sy(double y) { return kMargin + (1.0 - y) * kSize; }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string open_canvas() {
    const double full = kSize + 2 * kMargin;
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(full) + "\" height=\"" +
         num(full) + "\" viewBox=\"0 0 " + num(full) + " " + num(full) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + num(full) + "\" height=\"" + num(full) +
         "\" fill=\"white\"/>\n";
    return s;
}

std::string axes(const std::string& x_label, const std::string& y_label) {
    std::string s;
    s += "<rect x=\"" + num(sx(0)) + "\" y=\"" + num(sy(1)) + "\" width=\"" + num(kSize) +
         "\" height=\"" + num(kSize) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 10; t += 2) {
        const double v = t / 10.0;
        s += "<text x=\"" + num(sx(v)) + "\" y=\"" + num(sy(0) + 16) +
             "\" font-size=\"11\" text-anchor=\"middle\">" + num(v).substr(0, 3) + "</text>\n";
        s += "<text x=\"" + num(sx(0) - 6) + "\" y=\"" + num(sy(v) + 4) +
             "\" font-size=\"11\" text-anchor=\"end\">" + num(v).substr(0, 3) + "</text>\n";
    }
    s += "<text x=\"" + num(sx(0.5)) + "\" y=\"" + num(sy(0) + 36) +
         "\" font-size=\"13\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
    s += "<text x=\"" + num(sx(0) - 36) + "\" y=\"" + num(sy(0.5)) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 " + num(sx(0) - 36) +
         " " + num(sy(0.5)) + ")\">" + escape(y_label) + "</text>\n";
    return s;
}

}  // namespace

std::string render_prd_svg(std::span<const PrdPoint> polygon, const std::string& title) {
    std::string s = open_canvas();
    s += "<text x=\"" + num(sx(0.5)) + "\" y=\"" + num(kMargin - 16) +
         "\" font-size=\"14\" text-anchor=\"middle\">" + escape(title) + "</text>\n";
    if (polygon.size() >= 3) {
        s += "<polygon fill=\"#4c72b0\" fill-opacity=\"0.35\" stroke=\"#4c72b0\" "
             "stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < polygon.size(); ++i) {
            if (i > 0) {
                s += ' ';
            }
            s += num(sx(polygon[i].recall)) + "," + num(sy(polygon[i].precision));
        }
        s += "\"/>\n";
    }
    s += axes("recall", "precision");
    s += "</svg>\n";
    return s;
}

std::string render_scatter_svg(std::span<const ScatterPoint> points, const std::string& x_label,
                               const std::string& y_label) {
    std::string s = open_canvas();
    s += "<line x1=\"" + num(sx(0)) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" + num(sx(1)) +
         "\" y2=\"" + num(sy(1)) + "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    for (const ScatterPoint& p : points) {
        s += "<circle cx=\"" + num(sx(p.x)) + "\" cy=\"" + num(sy(p.y)) +
             "\" r=\"4\" fill=\"#c44e52\"><title>" + escape(p.id) + "</title></circle>\n";
    }
    s += axes(x_label, y_label);
    s += "</svg>\n";
    return s;
}

}  // namespace prd
