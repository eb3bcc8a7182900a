#pragma once

#include <cstdint>
#include <string>

#include "plc/error.hpp"
#include "plc/pl_map.hpp"

namespace plc {

/// A PLMap whose carrier is fixed at compile time. Composition is the group
/// operation: (f * g)(x) = f(g(x)).
template <Carrier C>
class Homeo {
public:
    static constexpr Carrier carrier = C;

    Homeo() : map_(PLMap::identity(C)) {}
    explicit Homeo(PLMap map) : map_(std::move(map)) {
        if (map_.carrier() != C)
            throw Error(ErrorKind::CarrierMismatch, "expected a " + std::string(to_string(C)) +
                                                        " map, got " +
                                                        std::string(to_string(map_.carrier())));
    }
    static Homeo from_nodes(std::vector<Node> nodes) { return Homeo(PLMap::make(std::move(nodes), C)); }
    static Homeo identity() { return Homeo(); }

    [[nodiscard]] const PLMap& map() const noexcept { return map_; }
    [[nodiscard]] Rat operator()(const Rat& x) const { return map_(x); }
    [[nodiscard]] Homeo inverse() const { return Homeo(invert(map_)); }
    [[nodiscard]] bool is_identity() const { return map_.is_identity(); }

    friend Homeo operator*(const Homeo& f, const Homeo& g) { return Homeo(compose(f.map_, g.map_)); }
    friend bool operator==(const Homeo&, const Homeo&) = default;

private:
    PLMap map_;
};

using IntervalHomeo = Homeo<Carrier::Interval>;
using LineHomeoZ = Homeo<Carrier::LineZ>;
/// Circle homeomorphism, represented by its normalized lift.
using CircleHomeo = Homeo<Carrier::CircleLift>;

/// Point of R/Z, stored additively in [0,1).
class CirclePoint {
public:
    CirclePoint() = default;
    explicit CirclePoint(const Rat& value) : value_(value.frac()) {}

    [[nodiscard]] const Rat& value() const noexcept { return value_; }
    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

private:
    Rat value_;
};

/// Z-equivariant extension x ↦ k(x-n)+n. Fixes 0.
LineHomeoZ hat(const IntervalHomeo& k);

/// Restriction of k to [0,1]. Raises NotInIsotropy unless k(0) = 0.
IntervalHomeo restrict_to_interval(const LineHomeoZ& k);

struct NormalizedLift {
    CircleHomeo circle;
    std::int64_t shift = 0; // g = τ_shift ∘ lift(circle)
};

/// Splits g into τ_n ∘ f̃ with f̃(0) in [0,1).
NormalizedLift normalize_lift(const LineHomeoZ& g);

/// The lift of f viewed as an element of the line group.
LineHomeoZ lift_of(const CircleHomeo& f);

CirclePoint circle_apply(const CircleHomeo& f, const CirclePoint& p);

/// τ_r : x ↦ x + r.
LineHomeoZ make_translation(const Rat& r);

/// Rotation of the circle by p (lift x ↦ x + p).
CircleHomeo make_rotation(const CirclePoint& p);

/// True iff g is a translation, i.e. a single segment of slope 1.
bool is_translation(const PLMap& g);

} // namespace plc
