#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "plc/coarse.hpp"
#include "plc/finite_group.hpp"
#include "plc/pl_map.hpp"
#include "plc/zappa_szep.hpp"

namespace plc::io {

using nlohmann::json;

// PLMap:        {"carrier":"interval"|"line"|"circle","nodes":[["p/q","p/q"],...]}
// FiniteGroup:  {"order":n,"names":[...],"table":[[...],...]}   (0-based, row-major)
// ZSData:       FiniteGroup fields plus "H","K" (index lists) and "alpha","beta"
//               (|K|x|H| matrices of group indices).
// External ZS:  {"H":FiniteGroup,"K":FiniteGroup,"alpha":[[...]],"beta":[[...]]}
//               with alpha/beta in local indices of H and K.
//
// Rationals are always strings "p/q" in lowest terms with q > 0. Emitted text
// is compact JSON plus a trailing newline, so parse ∘ format is the identity
// on emitted text.

json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const PLMap& f);
PLMap plmap_from_json(const json& j);

json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json to_json(const ZSData& zs);
/// Recomputes the factorization; raises ParseError if supplied alpha/beta
/// disagree with the recomputed ones.
ZSData zsdata_from_json(const json& j);

json to_json(const ExternalZSInput& in);
ExternalZSInput external_from_json(const json& j);

json to_json(const IntervalCert& cert);
json to_json(const IsotropyCert& cert);
json to_json(const QIWitness& w);
json to_json(const QICheck& c);
json to_json(const LineDecomposition& d);
json to_json(const CircleDecomposition& d);

/// Parses JSON text, mapping syntax and schema errors to ParseError.
json parse(std::string_view text);
std::string format(const json& j);

json read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

} // namespace plc::io
