#pragma once

#include <string>
#include <vector>

#include "plc/groups.hpp"

namespace plc {

struct Curve {
    std::string label;
    std::vector<Node> points; // polyline vertices, x increasing
};

struct Plot {
    std::string kind;
    std::string note; // provenance of the plotted map, e.g. the sampling grid
    std::vector<Curve> curves;
    Rat x_min, x_max, y_min, y_max;
};

/// PL interpolant of x ↦ x^power through the nodes i/grid, i = 0..grid.
IntervalHomeo power_interpolant(unsigned power, unsigned grid);

/// One curve per r: the graph of F(f, r) on [0,1].
Plot homotopy_plot(const IntervalHomeo& f, const std::vector<Rat>& rs, std::string note = {});

/// Two curves: f on [0,1] and its Z-equivariant extension on [lo, hi].
/// Raises OutOfRange unless lo < hi.
Plot hat_plot(const IntervalHomeo& f, const Rat& lo, const Rat& hi, std::string note = {});

/// curve,label,x,y,x_approx,y_approx with exact rationals and decimals.
std::string to_csv(const Plot& plot);
/// Locale-independent SVG with decimal coordinates.
std::string to_svg(const Plot& plot);

} // namespace plc
