#include "plc/metrics.hpp"

#include <algorithm>
#include <string>

#include "plc/error.hpp"

namespace plc {

namespace {

void require_same_carrier(const PLMap& f, const PLMap& g) {
    if (f.carrier() != g.carrier())
        throw Error(ErrorKind::CarrierMismatch, std::string(to_string(f.carrier())) + " vs " +
                                                    std::string(to_string(g.carrier())));
}

std::vector<Rat> common_grid(const PLMap& f, const PLMap& g) {
    std::vector<Rat> grid;
    grid.reserve(f.size() + g.size());
    for (const auto& n : f.nodes()) grid.push_back(n.x);
    for (const auto& n : g.nodes()) grid.push_back(n.x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

// h = f̃ - g̃ is linear between grid points; x ↦ dist(h(x), Z) is linear
// between consecutive crossings of the levels Z/2, so its max over a
// segment is attained at an endpoint or at one of those crossings.
Rat circle_sup(const PLMap& f, const PLMap& g) {
    const auto grid = common_grid(f, g);
    std::vector<Rat> h;
    h.reserve(grid.size());
    for (const auto& x : grid) h.push_back(f(x) - g(x));

    Rat best;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        best = max(best, dist_to_integer(h[i]));
        if (i + 1 == grid.size()) break;
        const Rat& h0 = h[i];
        const Rat& h1 = h[i + 1];
        if (h0 == h1) continue;
        // Integer crossings only contribute 0; a crossing of an odd multiple
        // of 1/2 (odd k strictly between 2·h0 and 2·h1) contributes 1/2.
        const Rat lo = min(h0, h1) * 2;
        const Rat hi = max(h0, h1) * 2;
        Rat k = lo.floor() + 1;
        if (mpz_even_p(k.gmp().get_num_mpz_t())) k += 1;
        if (k < hi) best = Rat(1, 2);
    }
    return best;
}

} // namespace

Rat dist_to_integer(const Rat& r) {
    const Rat f = r.frac();
    return min(f, Rat(1) - f);
}

Rat d_circle_point(const CirclePoint& p, const CirclePoint& q) {
    return dist_to_integer(p.value() - q.value());
}

Rat d_inf(const PLMap& f, const PLMap& g) {
    require_same_carrier(f, g);
    if (f.carrier() == Carrier::CircleLift) return circle_sup(f, g);
    Rat best;
    for (const auto& x : common_grid(f, g)) best = max(best, (f(x) - g(x)).abs());
    return best;
}

Rat d_star(const PLMap& f, const PLMap& g) {
    const auto [df, dg] = refine(f, g);
    Rat total;
    for (std::size_t i = 0; i < df.values.size(); ++i)
        total += (df.values[i] - dg.values[i]).abs() * (df.breakpoints[i + 1] - df.breakpoints[i]);
    return total;
}

Rat d_product(const PLMap& f, const PLMap& g) {
    require_same_carrier(f, g);
    const Rat f0 = f(Rat(0));
    const Rat g0 = g(Rat(0));
    switch (f.carrier()) {
    case Carrier::LineZ: return (f0 - g0).abs() + d_star(f, g);
    case Carrier::CircleLift: return d_circle_point(CirclePoint(f0), CirclePoint(g0)) + d_star(f, g);
    case Carrier::Interval: break;
    }
    throw Error(ErrorKind::CarrierMismatch, "d_product is defined on line and circle maps only");
}

Rat d_sum(const PLMap& f, const PLMap& g) { return d_inf(f, g) + d_star(f, g); }

} // namespace plc
