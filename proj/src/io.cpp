#include "plc/io.hpp"

#include <fstream>
#include <sstream>

#include "plc/error.hpp"

namespace plc::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<Elem> index_list(const json& j) {
    if (!j.is_array()) fail("expected an index list");
    std::vector<Elem> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_unsigned()) fail("indices must be non-negative integers");
        out.push_back(e.get<Elem>());
    }
    return out;
}

IndexMatrix index_matrix(const json& j) {
    if (!j.is_array()) fail("expected an index matrix");
    IndexMatrix out;
    for (const auto& row : j) out.push_back(index_list(row));
    return out;
}

template <class Cert>
json cert_json(const Cert& cert, const char* kind) {
    json factors = json::array();
    for (const auto& f : cert.factors) factors.push_back(to_json(f.map()));
    json dists = json::array();
    for (const auto& d : cert.per_factor_dist) dists.push_back(to_json(d));
    return {{"kind", kind},
            {"target", to_json(cert.target.map())},
            {"delta", to_json(cert.delta)},
            {"n", cert.n},
            {"factors", std::move(factors)},
            {"per_factor_dist", std::move(dists)},
            {"valid", verify(cert)}};
}

} // namespace

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    fail("rationals must be strings \"p/q\"");
}

json to_json(const PLMap& f) {
    json nodes = json::array();
    for (const auto& n : f.nodes()) nodes.push_back(json::array({n.x.str(), n.y.str()}));
    return {{"carrier", std::string(to_string(f.carrier()))}, {"nodes", std::move(nodes)}};
}

PLMap plmap_from_json(const json& j) {
    const auto& carrier = field(j, "carrier");
    if (!carrier.is_string()) fail("carrier must be a string");
    const auto& nodes_j = field(j, "nodes");
    if (!nodes_j.is_array()) fail("nodes must be an array");
    std::vector<Node> nodes;
    nodes.reserve(nodes_j.size());
    for (const auto& n : nodes_j) {
        if (!n.is_array() || n.size() != 2) fail("each node must be a two-element array");
        nodes.push_back({rat_from_json(n[0]), rat_from_json(n[1])});
    }
    return PLMap::make(std::move(nodes), carrier_from_string(carrier.get<std::string>()));
}

json to_json(const FiniteGroup& g) {
    return {{"order", g.order()}, {"names", g.names()}, {"table", g.table()}};
}

FiniteGroup group_from_json(const json& j) {
    const auto& table_j = field(j, "table");
    IndexMatrix table = index_matrix(table_j);
    std::vector<std::string> names;
    if (j.contains("names")) {
        if (!j.at("names").is_array()) fail("names must be an array of strings");
        for (const auto& n : j.at("names")) {
            if (!n.is_string()) fail("names must be an array of strings");
            names.push_back(n.get<std::string>());
        }
    }
    if (j.contains("order") && j.at("order") != table.size()) fail("order does not match table size");
    return FiniteGroup(std::move(table), std::move(names));
}

json to_json(const ZSData& zs) {
    json j = to_json(zs.group);
    j["H"] = zs.H;
    j["K"] = zs.K;
    j["alpha"] = zs.alpha;
    j["beta"] = zs.beta;
    return j;
}

ZSData zsdata_from_json(const json& j) {
    const FiniteGroup g = group_from_json(j);
    ZSData zs = zs_internal_decompose(g, make_set(index_list(field(j, "H"))), make_set(index_list(field(j, "K"))));
    if (j.contains("alpha") && index_matrix(j.at("alpha")) != zs.alpha) fail("alpha disagrees with the table");
    if (j.contains("beta") && index_matrix(j.at("beta")) != zs.beta) fail("beta disagrees with the table");
    return zs;
}

json to_json(const ExternalZSInput& in) {
    return {{"H", to_json(in.H)}, {"K", to_json(in.K)}, {"alpha", in.alpha}, {"beta", in.beta}};
}

ExternalZSInput external_from_json(const json& j) {
    return {group_from_json(field(j, "H")), group_from_json(field(j, "K")), index_matrix(field(j, "alpha")),
            index_matrix(field(j, "beta"))};
}

json to_json(const IntervalCert& cert) { return cert_json(cert, "interval"); }
json to_json(const IsotropyCert& cert) { return cert_json(cert, "isotropy"); }

json to_json(const QIWitness& w) {
    return {{"g", to_json(w.g.map())},
            {"r", to_json(w.r)},
            {"nearest", w.nearest},
            {"density_bound", to_json(w.density_bound)},
            {"bound", to_json(kDensityBound)},
            {"ok", w.ok()}};
}

json to_json(const QICheck& c) {
    return {{"translation_gap", to_json(c.translation_gap)},
            {"distance", to_json(c.distance)},
            {"multiplicative", c.multiplicative},
            {"additive", c.additive},
            {"constants", "derived"},
            {"lower_ok", c.lower_ok},
            {"upper_ok", c.upper_ok}};
}

json to_json(const LineDecomposition& d) { return {{"r", to_json(d.r)}, {"k", to_json(d.k.map())}}; }

json to_json(const CircleDecomposition& d) {
    return {{"p", to_json(d.p.value())}, {"k", to_json(d.k.map())}};
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(e.what());
    }
}

std::string format(const json& j) { return j.dump() + "\n"; }

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::BadSpec, "cannot write '" + path + "'");
    out << text;
}

} // namespace plc::io
