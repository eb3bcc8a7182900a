#pragma once

#include <doctest.h>

#include "oracle.hpp"
#include "plc/error.hpp"
#include "plc/groups.hpp"
#include "plc/pl_map.hpp"
#include "plc/rat.hpp"

namespace doctest {
template <>
struct StringMaker<plc::Rat> {
    static String convert(const plc::Rat& r) { return r.str().c_str(); }
};
} // namespace doctest

using plc::Carrier;
using plc::Node;
using plc::PLMap;
using plc::Rat;

#define CHECK_KIND(expr, expected_kind)                                      \
    do {                                                                     \
        bool thrown_ = false;                                                \
        try {                                                                \
            (void)(expr);                                                    \
        } catch (const plc::Error& e_) {                                     \
            thrown_ = true;                                                  \
            CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what());          \
        }                                                                    \
        CHECK_MESSAGE(thrown_, "expected " #expected_kind " from " #expr);   \
    } while (0)

inline Rat R(long p, long q = 1) { return Rat(p, q); }

inline PLMap interval_map(std::vector<Node> nodes) { return PLMap::make(std::move(nodes), Carrier::Interval); }

// [(0,0),(1/2,1/4),(1,1)], the running example.
inline PLMap f1_map() { return interval_map({{R(0), R(0)}, {R(1, 2), R(1, 4)}, {R(1), R(1)}}); }
inline plc::IntervalHomeo f1() { return plc::IntervalHomeo(f1_map()); }

inline std::vector<Node> nodes(const PLMap& f) { return {f.nodes().begin(), f.nodes().end()}; }
