#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "plc/rat.hpp"

namespace plc {

/// Which group a piecewise-linear map lives in.
///
///   Interval   - homeomorphism of [0,1] fixing both endpoints.
///   LineZ      - homeomorphism of R commuting with integer translations,
///                stored on the fundamental domain [0,1].
///   CircleLift - a LineZ map whose value at 0 lies in [0,1); this is the
///                unique lift of a circle homeomorphism.
enum class Carrier { Interval, LineZ, CircleLift };

std::string_view to_string(Carrier c) noexcept;
Carrier carrier_from_string(std::string_view name);

struct Node {
    Rat x;
    Rat y;
    friend bool operator==(const Node&, const Node&) = default;
};

/// Piecewise-constant function on [0,1]: values[i] holds on
/// [breakpoints[i], breakpoints[i+1]].
struct StepFn {
    std::vector<Rat> breakpoints;
    std::vector<Rat> values;

    [[nodiscard]] Rat integral() const;
    friend bool operator==(const StepFn&, const StepFn&) = default;
};

/// Strictly increasing piecewise-linear map with rational nodes, kept in
/// canonical form (no three consecutive collinear nodes) so that equality of
/// node lists is equality of functions.
class PLMap {
public:
    /// Validates and canonicalizes. Raises NonMonotone or CarrierViolation.
    static PLMap make(std::vector<Node> nodes, Carrier carrier);
    static PLMap identity(Carrier carrier);

    [[nodiscard]] Carrier carrier() const noexcept { return carrier_; }
    [[nodiscard]] std::span<const Node> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] bool is_identity() const;

    /// Exact evaluation; line carriers extend by f(x+n) = f(x)+n.
    [[nodiscard]] Rat operator()(const Rat& x) const;
    /// Evaluates the inverse map at y without building it.
    [[nodiscard]] Rat preimage(const Rat& y) const;

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    PLMap(std::vector<Node> nodes, Carrier carrier)
        : nodes_(std::move(nodes)), carrier_(carrier) {}

    // Builds from nodes already known to be strictly increasing with the right
    // endpoints; only collinear merging and circle normalization happen here.
    static PLMap from_trusted(std::vector<Node> nodes, Carrier carrier);

    [[nodiscard]] Rat eval_fundamental(const Rat& x) const;
    [[nodiscard]] Rat preimage_fundamental(const Rat& y) const;

    friend PLMap compose(const PLMap& f, const PLMap& g);
    friend PLMap invert(const PLMap& f);
    friend PLMap with_carrier(const PLMap& f, Carrier carrier);
    friend PLMap shift_values(const PLMap& f, const Rat& offset);

    std::vector<Node> nodes_;
    Carrier carrier_ = Carrier::Interval;
};

PLMap validate(std::vector<Node> nodes, Carrier carrier);
Rat eval(const PLMap& f, const Rat& x);

/// f ∘ g. Raises CarrierMismatch.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);

/// Slopes of the segments of f on [0,1].
StepFn derivative(const PLMap& f);

/// Derivatives of f and g over the union of their breakpoints in [0,1].
std::pair<StepFn, StepFn> refine(const PLMap& f, const PLMap& g);

/// PL map through the given samples; same checks as validate().
PLMap interpolate(std::vector<Node> samples, Carrier carrier);

/// Same node list under another carrier; validates the carrier constraints.
PLMap with_carrier(const PLMap& f, Carrier carrier);

/// Adds offset to every y-value (post-composition with a translation). Line
/// carrier only; the circle renormalization is left to the caller.
PLMap shift_values(const PLMap& f, const Rat& offset);

} // namespace plc
