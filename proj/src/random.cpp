#include "plc/random.hpp"

#include <limits>
#include <vector>

#include "plc/error.hpp"

namespace plc {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index * kGamma + 0x632BE59BD9B4E019ULL));
}

std::uint64_t CounterStream::next() {
    ++counter_;
    return mix64(seed_ + counter_ * kGamma);
}

std::uint64_t CounterStream::below(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::BadSpec, "empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
}

std::int64_t CounterStream::between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
}

std::string GenSpec::describe() const {
    return "seed=" + std::to_string(seed) + ";nodes=" + std::to_string(node_count) +
           ";denom=" + std::to_string(denom_bound) + ";carrier=" + std::string(to_string(carrier));
}

Rat random_rat(CounterStream& stream, std::int64_t lo, std::int64_t hi, std::uint64_t denom_bound) {
    const auto b = static_cast<std::int64_t>(1 + stream.below(denom_bound));
    const std::int64_t a = stream.between(lo * b, hi * b);
    return Rat(a, b);
}

PLMap gen_random(const GenSpec& spec) {
    if (spec.node_count < 2) throw Error(ErrorKind::BadSpec, "node_count must be at least 2");
    if (spec.denom_bound < 1 || spec.denom_bound > (1ULL << 31))
        throw Error(ErrorKind::BadSpec, "denom_bound must lie in [1, 2^31]");
    CounterStream stream(spec.seed);
    const std::size_t segments = spec.node_count - 1;

    std::vector<Rat> rises;
    rises.reserve(segments);
    Rat total;
    for (std::size_t i = 0; i < segments; ++i) {
        const auto a = static_cast<long>(1 + stream.below(spec.denom_bound));
        const auto b = static_cast<long>(1 + stream.below(spec.denom_bound));
        rises.emplace_back(a, b);
        total += rises.back();
    }

    Rat offset;
    if (spec.carrier != Carrier::Interval) {
        const auto b = static_cast<long>(1 + stream.below(spec.denom_bound));
        const auto a = static_cast<long>(stream.below(static_cast<std::uint64_t>(b)));
        offset = Rat(a, b);
        if (spec.carrier == Carrier::LineZ) offset += Rat(stream.between(-2, 1));
    }

    std::vector<Node> nodes;
    nodes.reserve(spec.node_count);
    Rat acc;
    nodes.push_back({Rat(0), offset});
    for (std::size_t i = 0; i < segments; ++i) {
        acc += rises[i];
        const Rat x = Rat(static_cast<long>(i + 1), static_cast<long>(segments));
        // Pin the last node exactly; acc/total is 1 there anyway.
        nodes.push_back({x, i + 1 == segments ? offset + 1 : offset + acc / total});
    }
    return PLMap::make(std::move(nodes), spec.carrier);
}

} // namespace plc
