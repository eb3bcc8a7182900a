#include "plc/groups.hpp"

namespace plc {

LineHomeoZ hat(const IntervalHomeo& k) { return LineHomeoZ(with_carrier(k.map(), Carrier::LineZ)); }

IntervalHomeo restrict_to_interval(const LineHomeoZ& k) {
    const Rat at_zero = k(Rat(0));
    if (at_zero.sign() != 0)
        throw Error(ErrorKind::NotInIsotropy, "k(0) = " + at_zero.str() + ", expected 0");
    return IntervalHomeo(with_carrier(k.map(), Carrier::Interval));
}

NormalizedLift normalize_lift(const LineHomeoZ& g) {
    const Rat n = g(Rat(0)).floor();
    PLMap shifted = shift_values(g.map(), -n);
    return {CircleHomeo(with_carrier(shifted, Carrier::CircleLift)), n.to_int64()};
}

LineHomeoZ lift_of(const CircleHomeo& f) { return LineHomeoZ(with_carrier(f.map(), Carrier::LineZ)); }

CirclePoint circle_apply(const CircleHomeo& f, const CirclePoint& p) { return CirclePoint(f(p.value())); }

LineHomeoZ make_translation(const Rat& r) {
    return LineHomeoZ::from_nodes({{Rat(0), r}, {Rat(1), r + 1}});
}

CircleHomeo make_rotation(const CirclePoint& p) {
    return CircleHomeo::from_nodes({{Rat(0), p.value()}, {Rat(1), p.value() + 1}});
}

bool is_translation(const PLMap& g) {
    return g.carrier() != Carrier::Interval && g.size() == 2;
}

} // namespace plc
