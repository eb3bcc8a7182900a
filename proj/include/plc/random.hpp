#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "plc/pl_map.hpp"

namespace plc {

/// Name recorded in reports so a run can be replayed with the same stream.
inline constexpr std::string_view kStreamName = "splitmix64-counter/v1";

/// Counter-based stream: the i-th output is the SplitMix64 finalizer applied
/// to seed + (i+1)·γ. Identical on every platform; no hidden state beyond the
/// counter.
class CounterStream {
public:
    explicit CounterStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

/// Seed of the index-th sample of a batch run; independent of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct GenSpec {
    std::uint64_t seed = 0;
    std::size_t node_count = 2;
    std::uint64_t denom_bound = 16;
    Carrier carrier = Carrier::Interval;

    [[nodiscard]] std::string describe() const;
};

/// Nodes at x = i/(node_count-1). Segment rises are positive rationals a/b with
/// 1 ≤ a, b ≤ denom_bound, normalized to sum to 1. Line maps get an offset
/// f(0) = n + a/b with n ∈ [-2, 1]; circle lifts an offset in [0,1).
/// Raises BadSpec when node_count < 2 or denom_bound < 1.
PLMap gen_random(const GenSpec& spec);

/// Rational a/b with b ∈ [1, denom_bound] and a/b ∈ [lo, hi].
Rat random_rat(CounterStream& stream, std::int64_t lo, std::int64_t hi, std::uint64_t denom_bound);

} // namespace plc
