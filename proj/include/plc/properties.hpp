#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plc/groups.hpp"
#include "plc/random.hpp"

namespace plc {

/// Draws random maps for one property sample and remembers the GenSpec of
/// each so a failure can be replayed in isolation.
class Sampler {
public:
    Sampler(std::uint64_t seed, std::size_t max_nodes, std::uint64_t denom_bound)
        : stream_(seed), max_nodes_(max_nodes), denom_(denom_bound) {}

    PLMap map(Carrier carrier);
    IntervalHomeo interval() { return IntervalHomeo(map(Carrier::Interval)); }
    LineHomeoZ line() { return LineHomeoZ(map(Carrier::LineZ)); }
    CircleHomeo circle() { return CircleHomeo(map(Carrier::CircleLift)); }
    /// Element of the isotropy subgroup {k : k(0) = 0} of the line group.
    LineHomeoZ isotropy();
    /// Rational in [lo, hi] with denominator at most the sampler's bound.
    Rat rat(std::int64_t lo, std::int64_t hi);
    Rat unit_rat() { return rat(0, 1); }

    [[nodiscard]] std::string log() const;

private:
    CounterStream stream_;
    std::size_t max_nodes_;
    std::uint64_t denom_;
    std::vector<GenSpec> drawn_;
};

struct SampleResult {
    bool pass = true;
    std::string detail;
};

struct Suite {
    std::string name;
    std::string description;
    std::function<SampleResult(Sampler&)> run;
};

/// Registered property suites, in a fixed order.
const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);

struct SampleRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool pass = true;
    std::string detail;
};

struct ExperimentReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t max_nodes = 0;
    std::uint64_t denom_bound = 0;
    std::vector<SampleRecord> samples;
    std::size_t passed = 0;
    std::size_t failed = 0;

    [[nodiscard]] bool ok() const noexcept { return failed == 0; }
    [[nodiscard]] std::string to_csv(const std::string& command) const;
};

struct RunOptions {
    std::size_t count = 100;
    std::uint64_t seed = 1;
    std::size_t max_nodes = 12;
    std::uint64_t denom_bound = 1ULL << 16;
    unsigned threads = 1;
};

/// Runs `count` samples; sample i uses derive_seed(seed, i), so results (and
/// their order) do not depend on the thread count. Raises UnknownSuite.
ExperimentReport run_suite(const std::string& name, const RunOptions& opts);

} // namespace plc
