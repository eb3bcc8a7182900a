#pragma once

#include "plc/groups.hpp"
#include "plc/pl_map.hpp"
#include "plc/rat.hpp"

namespace plc {

/// Distance between two circle points: min(|p-q| mod 1, 1 - |p-q| mod 1).
Rat d_circle_point(const CirclePoint& p, const CirclePoint& q);

/// Distance from r to the nearest integer.
Rat dist_to_integer(const Rat& r);

/// Uniform distance. On the interval and the line this is sup |f-g| (attained
/// at a common breakpoint, and one period suffices on the line). On the
/// circle it is sup over x of the circle distance between f(x) and g(x).
Rat d_inf(const PLMap& f, const PLMap& g);

/// L¹ distance between derivatives over [0,1]. A metric on the interval, a
/// pseudometric on the line and circle (it ignores constant offsets).
Rat d_star(const PLMap& f, const PLMap& g);

/// |f(0)-g(0)| + d_star on the line, d_S¹(f(0),g(0)) + d_star on the circle.
/// Raises CarrierMismatch for interval maps.
Rat d_product(const PLMap& f, const PLMap& g);

Rat d_sum(const PLMap& f, const PLMap& g);

template <Carrier C>
Rat d_inf(const Homeo<C>& f, const Homeo<C>& g) { return d_inf(f.map(), g.map()); }
template <Carrier C>
Rat d_star(const Homeo<C>& f, const Homeo<C>& g) { return d_star(f.map(), g.map()); }
template <Carrier C>
Rat d_product(const Homeo<C>& f, const Homeo<C>& g) { return d_product(f.map(), g.map()); }
template <Carrier C>
Rat d_sum(const Homeo<C>& f, const Homeo<C>& g) { return d_sum(f.map(), g.map()); }

} // namespace plc
