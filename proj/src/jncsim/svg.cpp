#include "jncsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "jncsim/errors.hpp"

namespace jncsim {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 700.0;   // legend lives right of this
constexpr double kTop = 50.0;
constexpr double kBottom = 480.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf"};

std::string esc(const std::string& s) {
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

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
    double scale(double v, double out_lo, double out_hi) const {
        if (hi == lo) return (out_lo + out_hi) / 2.0;
        return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
    }
};

std::vector<double> ticks(const Range& r, int count) {
    std::vector<double> out;
    for (int i = 0; i <= count; ++i) out.push_back(r.lo + (r.hi - r.lo) * i / count);
    return out;
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series) {
    Range xr, yr;
    bool first = true;
    for (const Series& s : series) {
        for (const SeriesPoint& p : s.points) {
            const double ylo = p.y - p.ci;
            const double yhi = p.y + p.ci;
            if (first) {
                xr = {p.x, p.x};
                yr = {std::min(0.0, ylo), yhi};
                first = false;
            } else {
                xr.lo = std::min(xr.lo, p.x);
                xr.hi = std::max(xr.hi, p.x);
                yr.lo = std::min(yr.lo, ylo);
                yr.hi = std::max(yr.hi, yhi);
            }
        }
    }
    if (first) {
        xr = {0.0, 1.0};
        yr = {0.0, 1.0};
    }
    if (yr.hi == yr.lo) yr.hi = yr.lo + 1.0;
    yr.hi += (yr.hi - yr.lo) * 0.05;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
           num(kHeight) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"white\"/>\n";
    out += "<text x=\"" + num((kLeft + kRight) / 2) +
           "\" y=\"28\" text-anchor=\"middle\" font-size=\"18\" font-family=\"sans-serif\">" +
           esc(title) + "</text>\n";

    // Axes.
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(kRight) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
    for (double tx : ticks(xr, 5)) {
        const double px = xr.scale(tx, kLeft, kRight);
        out += "<line x1=\"" + num(px) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(px) +
               "\" y2=\"" + num(kBottom + 6) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + num(px) + "\" y=\"" + num(kBottom + 22) +
               "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" +
               num(tx) + "</text>\n";
    }
    for (double ty : ticks(yr, 5)) {
        const double py = yr.scale(ty, kBottom, kTop);
        out += "<line x1=\"" + num(kLeft - 6) + "\" y1=\"" + num(py) + "\" x2=\"" + num(kLeft) +
               "\" y2=\"" + num(py) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + num(kLeft - 10) + "\" y=\"" + num(py + 4) +
               "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">" + num(ty) +
               "</text>\n";
    }
    out += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" + num(kBottom + 44) +
           "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\">" +
           esc(x_label) + "</text>\n";
    out += "<text x=\"22\" y=\"" + num((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 22 " +
           num((kTop + kBottom) / 2) + ")\">" + esc(y_label) + "</text>\n";

    // Series: whiskers and markers first, one polyline each on top.
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        std::string pts;
        for (const SeriesPoint& p : series[i].points) {
            const double px = xr.scale(p.x, kLeft, kRight);
            const double py = yr.scale(p.y, kBottom, kTop);
            if (!pts.empty()) pts += " ";
            pts += num(px) + "," + num(py);
            if (p.ci > 0.0) {
                const double y1 = yr.scale(p.y - p.ci, kBottom, kTop);
                const double y2 = yr.scale(p.y + p.ci, kBottom, kTop);
                out += "<line x1=\"" + num(px) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(px) +
                       "\" y2=\"" + num(y2) + "\" stroke=\"" + color + "\"/>\n";
                out += "<line x1=\"" + num(px - 4) + "\" y1=\"" + num(y1) + "\" x2=\"" +
                       num(px + 4) + "\" y2=\"" + num(y1) + "\" stroke=\"" + color + "\"/>\n";
                out += "<line x1=\"" + num(px - 4) + "\" y1=\"" + num(y2) + "\" x2=\"" +
                       num(px + 4) + "\" y2=\"" + num(y2) + "\" stroke=\"" + color + "\"/>\n";
            }
            out += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"3\" fill=\"" +
                   color + "\"/>\n";
        }
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
        // Legend entry.
        const double ly = kTop + 20.0 * static_cast<double>(i);
        out += "<line x1=\"" + num(kRight + 14) + "\" y1=\"" + num(ly) + "\" x2=\"" +
               num(kRight + 44) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + num(kRight + 50) + "\" y=\"" + num(ly + 4) +
               "\" font-size=\"13\" font-family=\"sans-serif\">" + esc(series[i].name) +
               "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_line_chart(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<Series>& series) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open for writing: " + path);
    f << render_line_chart(title, x_label, y_label, series);
}

}  // namespace jncsim
