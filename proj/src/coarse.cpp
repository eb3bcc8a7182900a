#include "plc/coarse.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "plc/error.hpp"
#include "plc/metrics.hpp"

namespace plc {

std::size_t WordMetricTable::at(Elem e) const {
    if (!dist[e]) throw Error(ErrorKind::OutOfRange, "element not reached by the generating set");
    return *dist[e];
}

WordMetricTable word_metric_bfs(const FiniteGroup& g, const ElemSet& s) {
    std::vector<Elem> gens(s.begin(), s.end());
    for (Elem e : s) gens.push_back(g.inv(e));
    gens.push_back(g.identity());

    WordMetricTable out;
    out.gens = make_set(std::move(gens));
    out.dist.assign(g.order(), std::nullopt);
    out.dist[g.identity()] = 0;
    std::deque<Elem> queue{g.identity()};
    while (!queue.empty()) {
        const Elem x = queue.front();
        queue.pop_front();
        for (Elem gen : out.gens) {
            const Elem y = g.mul(x, gen);
            if (!out.dist[y]) {
                out.dist[y] = *out.dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    out.generating = std::all_of(out.dist.begin(), out.dist.end(), [](const auto& d) { return d.has_value(); });
    return out;
}

namespace {

std::string check_generating_set(const FiniteGroup& g, const ElemSet& set, const ElemSet& subgroup,
                                 const char* label) {
    const std::string name(label);
    if (!contains(set, g.identity())) return name + " does not contain the identity";
    for (Elem e : set)
        if (!contains(subgroup, e)) return name + " is not contained in its factor subgroup";
    if (inverse_set(g, set) != set) return name + " is not symmetric";
    if (generated_subgroup(g, set) != subgroup) return name + " does not generate its factor subgroup";
    return {};
}

} // namespace

MaxFormulaReport zs_max_formula_check(const ZSData& zs, const ElemSet& s_in, const ElemSet& t_in) {
    const FiniteGroup& g = zs.group;
    const ElemSet s = make_set(s_in);
    const ElemSet t = make_set(t_in);
    MaxFormulaReport report;
    report.st = product_set(g, s, t);
    report.ts = product_set(g, t, s);

    std::string reason = check_generating_set(g, s, zs.H, "S");
    if (reason.empty()) reason = check_generating_set(g, t, zs.K, "T");
    if (reason.empty() && report.st != report.ts) reason = "ST != TS";
    if (!reason.empty()) {
        report.status = MaxFormulaStatus::HypothesisFails;
        report.reason = std::move(reason);
        return report;
    }

    const auto rho_s = word_metric_bfs(g, s);
    const auto rho_t = word_metric_bfs(g, t);
    const auto rho_st = word_metric_bfs(g, report.st);

    for (Elem e = 0; e < g.order(); ++e) {
        const auto [h, k] = zs.factor[e];
        MaxFormulaRow row{e, h, k, rho_st.dist[e], rho_s.dist[h], rho_t.dist[k], false};
        row.ok = row.rho_st && row.rho_s && row.rho_t && *row.rho_st == std::max(*row.rho_s, *row.rho_t);
        if (!row.ok) report.status = MaxFormulaStatus::Violated;
        report.rows.push_back(row);
    }
    for (Elem h : zs.H) report.h_isometric = report.h_isometric && rho_st.dist[h] == rho_s.dist[h];
    for (Elem k : zs.K) report.k_isometric = report.k_isometric && rho_st.dist[k] == rho_t.dist[k];
    if (!report.h_isometric || !report.k_isometric) report.status = MaxFormulaStatus::Violated;
    return report;
}

IntervalHomeo homotopy_F(const IntervalHomeo& f, const Rat& r) {
    if (r.sign() < 0 || r > Rat(1)) throw Error(ErrorKind::OutOfRange, "r = " + r.str() + " not in [0,1]");
    const Rat keep = Rat(1) - r;
    std::vector<Node> nodes;
    nodes.reserve(f.map().size());
    for (const auto& n : f.map().nodes()) nodes.push_back({n.x, keep * n.y + r * n.x});
    return IntervalHomeo::from_nodes(std::move(nodes));
}

Rat homotopy_dstar(const IntervalHomeo& f, const Rat& r, const Rat& s) {
    return d_star(homotopy_F(f, r), homotopy_F(f, s));
}

std::int64_t factor_count(const Rat& total, const Rat& delta) {
    if (delta.sign() <= 0) throw Error(ErrorKind::OutOfRange, "delta must be positive");
    return std::max<std::int64_t>(1, (total / delta).ceil().to_int64());
}

IntervalCert cb_factorize(const IntervalHomeo& f, const Rat& delta) {
    const IntervalHomeo id;
    IntervalCert cert{f, delta, factor_count(d_star(f, id), delta), {}, {}};
    cert.factors.reserve(static_cast<std::size_t>(cert.n));
    IntervalHomeo prev = homotopy_F(f, Rat(0));
    for (std::int64_t i = 1; i <= cert.n; ++i) {
        IntervalHomeo next = homotopy_F(f, Rat(i) / Rat(cert.n));
        IntervalHomeo factor = prev * next.inverse();
        cert.per_factor_dist.push_back(d_star(factor, id));
        cert.factors.push_back(std::move(factor));
        prev = std::move(next);
    }
    if (!verify(cert)) throw std::logic_error("cb_factorize produced an invalid certificate");
    return cert;
}

IsotropyCert cb_factorize_isotropy(const LineHomeoZ& k, const Rat& delta) {
    const IntervalCert base = cb_factorize(restrict_to_interval(k), delta);
    const LineHomeoZ id;
    IsotropyCert cert{k, delta, base.n, {}, {}};
    for (const auto& f : base.factors) {
        LineHomeoZ factor = hat(f);
        cert.per_factor_dist.push_back(d_star(factor, id));
        cert.factors.push_back(std::move(factor));
    }
    if (!verify(cert)) throw std::logic_error("cb_factorize_isotropy produced an invalid certificate");
    return cert;
}

namespace {

template <class Map>
bool verify_common(const FactorizationCert<Map>& cert) {
    const Map id;
    if (cert.delta.sign() <= 0) return false;
    if (cert.n != factor_count(d_star(cert.target, id), cert.delta)) return false;
    if (cert.factors.size() != static_cast<std::size_t>(cert.n) || cert.per_factor_dist.size() != cert.factors.size())
        return false;
    Map product;
    for (std::size_t i = 0; i < cert.factors.size(); ++i) {
        const Rat d = d_star(cert.factors[i], id);
        if (d != cert.per_factor_dist[i] || d > cert.delta) return false;
        product = product * cert.factors[i];
    }
    return product == cert.target;
}

} // namespace

bool verify(const IntervalCert& cert) { return verify_common(cert); }

bool verify(const IsotropyCert& cert) {
    for (const auto& f : cert.factors)
        if (f(Rat(0)).sign() != 0) return false;
    return cert.target(Rat(0)).sign() == 0 && verify_common(cert);
}

QIWitness qi_witness(const LineHomeoZ& g) {
    const Rat r = g(Rat(0));
    return {g, r, round_half_even(r).to_int64(), d_sum(g, make_translation(r))};
}

QICheck qi_inequality_check(const LineHomeoZ& f, const LineHomeoZ& g) {
    QICheck c;
    c.translation_gap = (f(Rat(0)) - g(Rat(0))).abs();
    c.distance = d_sum(f, g);
    c.lower_ok = c.translation_gap * Rat(c.multiplicative) <= c.distance;
    c.upper_ok = c.distance <= c.translation_gap * Rat(c.multiplicative) + Rat(c.additive);
    return c;
}

CircleDiameter circle_diameter_check(const CircleHomeo& f, const CircleHomeo& g) {
    const Rat d = d_sum(f, g);
    return {d, d <= kCircleDiameterBound};
}

} // namespace plc
