#include "plc/pl_map.hpp"

#include <algorithm>
#include <string>

#include "plc/error.hpp"

namespace plc {

std::string_view to_string(Carrier c) noexcept {
    switch (c) {
    case Carrier::Interval: return "interval";
    case Carrier::LineZ: return "line";
    case Carrier::CircleLift: return "circle";
    }
    return "interval";
}

Carrier carrier_from_string(std::string_view name) {
    if (name == "interval") return Carrier::Interval;
    if (name == "line") return Carrier::LineZ;
    if (name == "circle") return Carrier::CircleLift;
    throw Error(ErrorKind::ParseError, "unknown carrier '" + std::string(name) + "'");
}

Rat StepFn::integral() const {
    Rat total;
    for (std::size_t i = 0; i < values.size(); ++i)
        total += values[i] * (breakpoints[i + 1] - breakpoints[i]);
    return total;
}

namespace {

bool collinear(const Node& a, const Node& b, const Node& c) {
    return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

std::vector<Node> merge_collinear(std::vector<Node> nodes) {
    std::vector<Node> out;
    out.reserve(nodes.size());
    for (auto& n : nodes) {
        while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), n)) out.pop_back();
        out.push_back(std::move(n));
    }
    return out;
}

void check_carrier(const std::vector<Node>& nodes, Carrier carrier) {
    const Node& first = nodes.front();
    const Node& last = nodes.back();
    if (first.x != Rat(0) || last.x != Rat(1))
        throw Error(ErrorKind::CarrierViolation, "nodes must span x in [0,1]");
    switch (carrier) {
    case Carrier::Interval:
        if (first.y != Rat(0) || last.y != Rat(1))
            throw Error(ErrorKind::CarrierViolation, "interval map must fix 0 and 1");
        break;
    case Carrier::CircleLift:
        if (first.y.sign() < 0 || first.y >= Rat(1))
            throw Error(ErrorKind::CarrierViolation, "circle lift must satisfy f(0) in [0,1)");
        [[fallthrough]];
    case Carrier::LineZ:
        if (last.y != first.y + 1)
            throw Error(ErrorKind::CarrierViolation, "line map must satisfy f(1) = f(0) + 1");
        break;
    }
}

// Linear interpolation on the segment of nodes containing t, searching by key.
template <class Key, class Val>
Rat interpolate_sorted(std::span<const Node> nodes, const Rat& t, Key key, Val val) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), t,
                               [&](const Rat& v, const Node& n) { return v < key(n); });
    if (it == nodes.end()) --it;
    if (it == nodes.begin()) ++it;
    const Node& b = *it;
    const Node& a = *(it - 1);
    return val(a) + (val(b) - val(a)) * (t - key(a)) / (key(b) - key(a));
}

} // namespace

PLMap PLMap::make(std::vector<Node> nodes, Carrier carrier) {
    if (nodes.size() < 2)
        throw Error(ErrorKind::CarrierViolation, "a PL map needs at least two nodes");
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (nodes[i].x <= nodes[i - 1].x)
            throw Error(ErrorKind::NonMonotone, "x-coordinates must be strictly increasing");
        if (nodes[i].y <= nodes[i - 1].y)
            throw Error(ErrorKind::NonMonotone, "y-coordinates must be strictly increasing");
    }
    check_carrier(nodes, carrier);
    return PLMap(merge_collinear(std::move(nodes)), carrier);
}

PLMap PLMap::identity(Carrier carrier) {
    return PLMap({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}, carrier);
}

PLMap PLMap::from_trusted(std::vector<Node> nodes, Carrier carrier) {
    if (carrier == Carrier::CircleLift) {
        const Rat shift = nodes.front().y.floor();
        if (shift.sign() != 0)
            for (auto& n : nodes) n.y -= shift;
    }
    return PLMap(merge_collinear(std::move(nodes)), carrier);
}

bool PLMap::is_identity() const {
    return nodes_.size() == 2 && nodes_[0] == Node{Rat(0), Rat(0)} && nodes_[1] == Node{Rat(1), Rat(1)};
}

Rat PLMap::eval_fundamental(const Rat& x) const {
    return interpolate_sorted(
        nodes(), x, [](const Node& n) -> const Rat& { return n.x; },
        [](const Node& n) -> const Rat& { return n.y; });
}

Rat PLMap::preimage_fundamental(const Rat& y) const {
    return interpolate_sorted(
        nodes(), y, [](const Node& n) -> const Rat& { return n.y; },
        [](const Node& n) -> const Rat& { return n.x; });
}

Rat PLMap::operator()(const Rat& x) const {
    if (carrier_ == Carrier::Interval) {
        if (x.sign() < 0 || x > Rat(1))
            throw Error(ErrorKind::OutOfDomain, "interval map evaluated at " + x.str());
        return eval_fundamental(x);
    }
    const Rat n = x.floor();
    return eval_fundamental(x - n) + n;
}

Rat PLMap::preimage(const Rat& y) const {
    if (carrier_ == Carrier::Interval) {
        if (y.sign() < 0 || y > Rat(1))
            throw Error(ErrorKind::OutOfDomain, "interval map inverted at " + y.str());
        return preimage_fundamental(y);
    }
    const Rat n = (y - nodes_.front().y).floor();
    return preimage_fundamental(y - n) + n;
}

PLMap validate(std::vector<Node> nodes, Carrier carrier) {
    return PLMap::make(std::move(nodes), carrier);
}

Rat eval(const PLMap& f, const Rat& x) { return f(x); }

namespace {

void require_same_carrier(const PLMap& f, const PLMap& g) {
    if (f.carrier() != g.carrier())
        throw Error(ErrorKind::CarrierMismatch, std::string(to_string(f.carrier())) + " vs " +
                                                    std::string(to_string(g.carrier())));
}

void sort_unique(std::vector<Rat>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

PLMap compose(const PLMap& f, const PLMap& g) {
    require_same_carrier(f, g);
    // Breakpoints of f∘g on [0,1]: those of g, plus g-preimages of every
    // breakpoint of f (and its integer translates, on the line) that g hits.
    std::vector<Rat> xs;
    xs.reserve(g.size() + 2 * f.size());
    for (const auto& n : g.nodes()) xs.push_back(n.x);
    const Rat lo = g.nodes().front().y;
    const Rat hi = g.nodes().back().y;
    if (f.carrier() == Carrier::Interval) {
        for (const auto& n : f.nodes()) xs.push_back(g.preimage_fundamental(n.x));
    } else {
        const Rat base = lo.floor();
        for (const auto& n : f.nodes()) {
            for (long m = -1; m <= 1; ++m) {
                const Rat t = n.x + base + Rat(m);
                if (t >= lo && t <= hi) xs.push_back(g.preimage_fundamental(t));
            }
        }
    }
    sort_unique(xs);
    std::vector<Node> nodes;
    nodes.reserve(xs.size());
    for (auto& x : xs) {
        Rat y = f(g.eval_fundamental(x));
        nodes.push_back({std::move(x), std::move(y)});
    }
    return PLMap::from_trusted(std::move(nodes), f.carrier());
}

PLMap invert(const PLMap& f) {
    if (f.carrier() == Carrier::Interval) {
        std::vector<Node> nodes;
        nodes.reserve(f.size());
        for (const auto& n : f.nodes()) nodes.push_back({n.y, n.x});
        return PLMap::from_trusted(std::move(nodes), f.carrier());
    }
    // The inverse has breakpoints at the node values of f reduced mod 1.
    std::vector<Rat> xs{Rat(0), Rat(1)};
    for (const auto& n : f.nodes()) xs.push_back(n.y.frac());
    sort_unique(xs);
    std::vector<Node> nodes;
    nodes.reserve(xs.size());
    for (auto& x : xs) {
        Rat y = f.preimage(x);
        nodes.push_back({std::move(x), std::move(y)});
    }
    return PLMap::from_trusted(std::move(nodes), f.carrier());
}

StepFn derivative(const PLMap& f) {
    StepFn d;
    const auto nodes = f.nodes();
    d.breakpoints.reserve(nodes.size());
    d.values.reserve(nodes.size() - 1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        d.breakpoints.push_back(nodes[i].x);
        if (i > 0)
            d.values.push_back((nodes[i].y - nodes[i - 1].y) / (nodes[i].x - nodes[i - 1].x));
    }
    return d;
}

std::pair<StepFn, StepFn> refine(const PLMap& f, const PLMap& g) {
    require_same_carrier(f, g);
    std::vector<Rat> grid;
    grid.reserve(f.size() + g.size());
    for (const auto& n : f.nodes()) grid.push_back(n.x);
    for (const auto& n : g.nodes()) grid.push_back(n.x);
    sort_unique(grid);

    auto slopes_on = [&grid](const PLMap& h) {
        StepFn s;
        s.breakpoints = grid;
        s.values.reserve(grid.size() - 1);
        const auto nodes = h.nodes();
        std::size_t seg = 1;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            while (nodes[seg].x <= grid[i]) ++seg;
            s.values.push_back((nodes[seg].y - nodes[seg - 1].y) / (nodes[seg].x - nodes[seg - 1].x));
        }
        return s;
    };
    return {slopes_on(f), slopes_on(g)};
}

PLMap interpolate(std::vector<Node> samples, Carrier carrier) {
    return PLMap::make(std::move(samples), carrier);
}

PLMap with_carrier(const PLMap& f, Carrier carrier) {
    if (f.carrier() == carrier) return f;
    std::vector<Node> nodes(f.nodes().begin(), f.nodes().end());
    check_carrier(nodes, carrier);
    return PLMap(std::move(nodes), carrier);
}

PLMap shift_values(const PLMap& f, const Rat& offset) {
    if (f.carrier() != Carrier::LineZ)
        throw Error(ErrorKind::CarrierMismatch, "shift_values needs a line map");
    std::vector<Node> nodes(f.nodes().begin(), f.nodes().end());
    for (auto& n : nodes) n.y += offset;
    return PLMap(std::move(nodes), Carrier::LineZ);
}

} // namespace plc
