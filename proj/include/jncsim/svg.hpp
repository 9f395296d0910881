// Minimal SVG line charts: one polyline per series, 95% CI whiskers,
// axes with ticks and a legend. No plotting dependency.
#pragma once

#include <string>
#include <vector>

namespace jncsim {

struct SeriesPoint {
    double x = 0.0;
    double y = 0.0;
    double ci = 0.0;  // half-width of the whisker, 0 for none
};

struct Series {
    std::string name;
    std::vector<SeriesPoint> points;
};

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series);

void write_line_chart(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<Series>& series);

}  // namespace jncsim
