#include "plc/plot.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "plc/coarse.hpp"
#include "plc/error.hpp"

namespace plc {

IntervalHomeo power_interpolant(unsigned power, unsigned grid) {
    if (power == 0 || grid == 0) throw Error(ErrorKind::BadSpec, "power and grid must be positive");
    std::vector<Node> nodes;
    nodes.reserve(grid + 1);
    for (unsigned i = 0; i <= grid; ++i) {
        const Rat x(static_cast<long>(i), static_cast<long>(grid));
        Rat y(1);
        for (unsigned p = 0; p < power; ++p) y *= x;
        nodes.push_back({x, y});
    }
    return IntervalHomeo(interpolate(std::move(nodes), Carrier::Interval));
}

Plot homotopy_plot(const IntervalHomeo& f, const std::vector<Rat>& rs, std::string note) {
    Plot plot{"homotopy", std::move(note), {}, Rat(0), Rat(1), Rat(0), Rat(1)};
    for (const auto& r : rs) {
        const auto g = homotopy_F(f, r);
        plot.curves.push_back({"r=" + r.str(), {g.map().nodes().begin(), g.map().nodes().end()}});
    }
    return plot;
}

Plot hat_plot(const IntervalHomeo& f, const Rat& lo, const Rat& hi, std::string note) {
    if (!(lo < hi)) throw Error(ErrorKind::OutOfRange, "window must satisfy lo < hi");
    const LineHomeoZ ext = hat(f);
    Plot plot{"hat", std::move(note), {}, min(lo, Rat(0)), max(hi, Rat(1)), Rat(0), Rat(0)};
    plot.curves.push_back({"f", {f.map().nodes().begin(), f.map().nodes().end()}});

    Curve line{"hat(f)", {}};
    line.points.push_back({lo, ext(lo)});
    for (Rat n = lo.floor(); n <= hi; n += 1)
        for (const auto& node : f.map().nodes()) {
            const Rat x = node.x + n;
            if (x > lo && x < hi && !(x == line.points.back().x)) line.points.push_back({x, node.y + n});
        }
    line.points.push_back({hi, ext(hi)});
    plot.curves.push_back(std::move(line));
    plot.y_min = min(ext(plot.x_min), Rat(0));
    plot.y_max = max(ext(plot.x_max), Rat(1));
    return plot;
}

namespace {

std::string decimal(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 6);
    return std::string(buf.data(), res.ptr);
}

} // namespace

std::string to_csv(const Plot& plot) {
    std::ostringstream out;
    out << "# kind: " << plot.kind << "\n";
    if (!plot.note.empty()) out << "# source: " << plot.note << "\n";
    out << "curve,label,x,y,x_approx,y_approx\n";
    for (std::size_t c = 0; c < plot.curves.size(); ++c)
        for (const auto& p : plot.curves[c].points)
            out << c << "," << plot.curves[c].label << "," << p.x.str() << "," << p.y.str() << ","
                << decimal(p.x.to_double()) << "," << decimal(p.y.to_double()) << "\n";
    return out.str();
}

std::string to_svg(const Plot& plot) {
    constexpr double size = 400.0;
    constexpr double margin = 20.0;
    const double x0 = plot.x_min.to_double();
    const double y0 = plot.y_min.to_double();
    const double sx = (size - 2 * margin) / (plot.x_max.to_double() - x0);
    const double sy = (size - 2 * margin) / (plot.y_max.to_double() - y0);
    const double scale = sx < sy ? sx : sy;
    auto px = [&](const Rat& x) { return decimal(margin + (x.to_double() - x0) * scale); };
    auto py = [&](const Rat& y) { return decimal(size - margin - (y.to_double() - y0) * scale); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"white\"/>\n";
    out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"" << px(plot.x_min) << ","
        << py(Rat(0)) << " " << px(plot.x_max) << "," << py(Rat(0)) << "\"/>\n";
    out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"" << px(Rat(0)) << ","
        << py(plot.y_min) << " " << px(Rat(0)) << "," << py(plot.y_max) << "\"/>\n";
    for (std::size_t c = 0; c < plot.curves.size(); ++c) {
        // First and last curves in black, intermediate ones in gray.
        const bool outer = c == 0 || c + 1 == plot.curves.size();
        out << "  <polyline fill=\"none\" stroke=\"" << (outer ? "black" : "gray")
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < plot.curves[c].points.size(); ++i) {
            const auto& p = plot.curves[c].points[i];
            out << (i ? " " : "") << px(p.x) << "," << py(p.y);
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace plc
