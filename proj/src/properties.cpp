#include "plc/properties.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "plc/coarse.hpp"
#include "plc/error.hpp"
#include "plc/metrics.hpp"
#include "plc/zappa_szep.hpp"

namespace plc {

PLMap Sampler::map(Carrier carrier) {
    GenSpec spec;
    spec.seed = stream_.next();
    spec.node_count = static_cast<std::size_t>(stream_.between(2, static_cast<std::int64_t>(max_nodes_)));
    spec.denom_bound = denom_;
    spec.carrier = carrier;
    drawn_.push_back(spec);
    return gen_random(spec);
}

LineHomeoZ Sampler::isotropy() { return hat(interval()); }

Rat Sampler::rat(std::int64_t lo, std::int64_t hi) { return random_rat(stream_, lo, hi, denom_); }

std::string Sampler::log() const {
    std::string out;
    for (const auto& s : drawn_) {
        if (!out.empty()) out += " | ";
        out += s.describe();
    }
    return out;
}

namespace {

class Check {
public:
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        result_.pass = false;
        if (!result_.detail.empty()) result_.detail += "; ";
        result_.detail += what;
    }
    SampleResult result() { return std::move(result_); }

private:
    SampleResult result_;
};

const Carrier kAllCarriers[] = {Carrier::Interval, Carrier::LineZ, Carrier::CircleLift};

std::string tag(Carrier c, const char* what) { return std::string(to_string(c)) + ": " + what; }

SampleResult dinf_le_dstar(Sampler& s) {
    Check c;
    const auto f = s.interval();
    const auto g = s.interval();
    c.expect(d_inf(f, g) <= d_star(f, g), "d_inf > d_star");
    return c.result();
}

SampleResult dstar_right_invariance(Sampler& s) {
    Check c;
    for (Carrier carrier : kAllCarriers) {
        const auto f = s.map(carrier);
        const auto g = s.map(carrier);
        const auto u = s.map(carrier);
        c.expect(d_star(compose(f, u), compose(g, u)) == d_star(f, g), tag(carrier, "d*(fu,gu) != d*(f,g)"));
    }
    return c.result();
}

SampleResult dinf_right_invariance(Sampler& s) {
    Check c;
    for (Carrier carrier : kAllCarriers) {
        const auto f = s.map(carrier);
        const auto g = s.map(carrier);
        const auto u = s.map(carrier);
        c.expect(d_inf(compose(f, u), compose(g, u)) == d_inf(f, g), tag(carrier, "d_inf(fu,gu) != d_inf(f,g)"));
    }
    return c.result();
}

SampleResult dstar_translation_invariance(Sampler& s) {
    Check c;
    const auto f = s.line();
    const auto g = s.line();
    const auto tr = make_translation(s.rat(-3, 3));
    const auto ts = make_translation(s.rat(-3, 3));
    c.expect(d_star(tr * f, ts * g) == d_star(f, g), "d*(τr f, τs g) != d*(f,g)");
    return c.result();
}

SampleResult homotopy_linearity(Sampler& s) {
    Check c;
    const auto f = s.interval();
    const Rat r = s.unit_rat();
    const Rat t = s.unit_rat();
    const Rat d = homotopy_dstar(f, r, t);
    const Rat gap = (r - t).abs();
    c.expect(d == gap * d_star(f, IntervalHomeo()), "d*(F(f,r),F(f,s)) != |r-s| d*(f,id)");
    c.expect(d <= gap * 2, "d*(F(f,r),F(f,s)) > 2|r-s|");
    return c.result();
}

SampleResult certificate_soundness(Sampler& s) {
    Check c;
    const auto f = s.interval();
    const Rat total = d_star(f, IntervalHomeo());
    for (const Rat& delta : {Rat(1), Rat(1, 4), Rat(1, 64)}) {
        const auto cert = cb_factorize(f, delta);
        IntervalHomeo product;
        for (const auto& factor : cert.factors) product = product * factor;
        c.expect(product == f, "factors do not recompose at delta " + delta.str());
        c.expect(std::all_of(cert.per_factor_dist.begin(), cert.per_factor_dist.end(),
                             [&](const Rat& d) { return d <= delta; }),
                 "factor outside delta " + delta.str());
        const Rat expected_n = max(Rat(1), (total / delta).ceil());
        c.expect(Rat(cert.n) == expected_n, "n mismatch at delta " + delta.str());
        c.expect(verify(cert), "verify() rejects certificate");
    }
    return c.result();
}

SampleResult metric_sandwich(Sampler& s) {
    Check c;
    for (Carrier carrier : {Carrier::LineZ, Carrier::CircleLift}) {
        const auto f = s.map(carrier);
        const auto g = s.map(carrier);
        const Rat d = d_product(f, g);
        const Rat sum = d_sum(f, g);
        c.expect(d <= sum, tag(carrier, "d > d_inf + d*"));
        c.expect(sum <= d * 2, tag(carrier, "d_inf + d* > 2d"));
    }
    return c.result();
}

SampleResult pseudometric_degeneracy(Sampler& s) {
    Check c;
    Rat r = s.rat(-4, 4);
    if (r.sign() == 0) r = Rat(1, 7);
    const auto tr = make_translation(r);
    const LineHomeoZ id;
    c.expect(d_star(tr, id).sign() == 0, "d*(τr, id) != 0");
    c.expect(d_sum(tr, id) == r.abs(), "d_sum(τr, id) != |r|");
    // d*(f,g) = 0 exactly when f - g is constant.
    const auto f = s.line();
    const auto g = s.line();
    const Rat diff0 = f(Rat(0)) - g(Rat(0));
    bool constant = true;
    for (const auto& n : f.map().nodes()) constant = constant && f(n.x) - g(n.x) == diff0;
    for (const auto& n : g.map().nodes()) constant = constant && f(n.x) - g(n.x) == diff0;
    c.expect((d_star(f, g).sign() == 0) == constant, "d* = 0 does not match constant difference");
    c.expect(d_star(make_translation(diff0) * g, g).sign() == 0, "d*(τ g, g) != 0");
    return c.result();
}

SampleResult qi_density(Sampler& s) {
    Check c;
    const auto w = qi_witness(s.line());
    c.expect(w.ok(), "density bound " + w.density_bound.str() + " exceeds 3");
    c.expect(Rat(w.nearest) == round_half_even(w.r), "nearest integer mismatch");
    return c.result();
}

SampleResult qi_inequality(Sampler& s) {
    Check c;
    const auto q = qi_inequality_check(s.line(), s.line());
    c.expect(q.lower_ok, "lower QI bound fails");
    c.expect(q.upper_ok, "upper QI bound fails");
    return c.result();
}

SampleResult translation_isometry(Sampler& s) {
    Check c;
    const Rat r = s.rat(-5, 5);
    const Rat t = s.rat(-5, 5);
    c.expect(d_sum(make_translation(r), make_translation(t)) == (r - t).abs(), "d_sum(τr, τs) != |r-s|");
    return c.result();
}

SampleResult circle_boundedness(Sampler& s) {
    Check c;
    const auto d = circle_diameter_check(s.circle(), s.circle());
    c.expect(d.ok, "d_sum " + d.distance.str() + " exceeds 5/2");
    return c.result();
}

SampleResult rotation_diameter(Sampler& s) {
    Check c;
    const auto f = s.circle();
    std::vector<CircleHomeo> coset;
    for (int i = 0; i < 4; ++i) coset.push_back(make_rotation(CirclePoint(s.unit_rat())) * f);
    for (const auto& a : coset)
        for (const auto& b : coset) c.expect(d_star(a, b).sign() == 0, "rotation coset has positive d*-diameter");
    return c.result();
}

SampleResult coset_asymmetry(Sampler& s) {
    Check c;
    const auto k = s.isotropy();
    std::vector<Rat> shifts;
    for (int i = 0; i < 4; ++i) shifts.push_back(s.rat(-2, 2));
    shifts.push_back(Rat(1, 2));
    bool right_zero = true;
    for (const auto& r : shifts)
        for (const auto& t : shifts) {
            c.expect(d_star(make_translation(r) * k, make_translation(t) * k).sign() == 0,
                     "left translates of k have positive d*-diameter");
            right_zero = right_zero && d_star(k * make_translation(r), k * make_translation(t)).sign() == 0;
        }
    c.expect(right_zero == k.is_identity(), "k∘τ coset diameter 0 does not match k = id");
    return c.result();
}

SampleResult hat_restrict(Sampler& s) {
    Check c;
    const auto f = s.interval();
    const auto g = s.interval();
    c.expect(restrict_to_interval(hat(f)) == f, "restrict(hat f) != f");
    c.expect(hat(restrict_to_interval(hat(g))) == hat(g), "hat(restrict k) != k");
    c.expect(hat(f * g) == hat(f) * hat(g), "hat is not a homomorphism");
    c.expect(d_star(hat(f), hat(g)) == d_star(f, g), "hat does not preserve d*");
    return c.result();
}

SampleResult pl_group_laws(Sampler& s) {
    Check c;
    for (Carrier carrier : kAllCarriers) {
        const auto f = s.map(carrier);
        const auto g = s.map(carrier);
        const auto h = s.map(carrier);
        const auto id = PLMap::identity(carrier);
        c.expect(compose(compose(f, g), h) == compose(f, compose(g, h)), tag(carrier, "associativity"));
        c.expect(compose(f, id) == f && compose(id, f) == f, tag(carrier, "identity"));
        c.expect(compose(f, invert(f)) == id && compose(invert(f), f) == id, tag(carrier, "inverse"));
        const Rat x = carrier == Carrier::Interval ? s.unit_rat() : s.rat(-3, 3);
        const Rat gap = compose(f, g)(x) - f(g(x));
        // Circle lifts are renormalized, so composition agrees up to an integer.
        const bool agrees = carrier == Carrier::CircleLift ? gap.is_integer() : gap.sign() == 0;
        c.expect(agrees, tag(carrier, "pointwise composition"));
        if (carrier != Carrier::Interval)
            c.expect(f(x + 1) == f(x) + 1, tag(carrier, "equivariance"));
        c.expect(derivative(f).integral() == f.nodes().back().y - f.nodes().front().y,
                 tag(carrier, "derivative integral"));
    }
    return c.result();
}

SampleResult metric_axioms(Sampler& s) {
    Check c;
    using Metric = Rat (*)(const PLMap&, const PLMap&);
    const Metric dinf = &d_inf, dstar = &d_star, dsum = &d_sum, dprod = &d_product;
    const std::pair<const char*, Metric> metrics[] = {
        {"d_inf", dinf}, {"d_star", dstar}, {"d_sum", dsum}, {"d_product", dprod}};
    for (Carrier carrier : kAllCarriers) {
        const auto f = s.map(carrier);
        const auto g = s.map(carrier);
        const auto h = s.map(carrier);
        for (const auto& [name, d] : metrics) {
            if (carrier == Carrier::Interval && d == dprod) continue;
            const std::string label = std::string(to_string(carrier)) + " " + name;
            c.expect(d(f, g) == d(g, f), label + " symmetry");
            c.expect(d(f, f).sign() == 0, label + " d(f,f) != 0");
            c.expect(d(f, h) <= d(f, g) + d(g, h), label + " triangle inequality");
            c.expect(d(f, g).sign() >= 0, label + " negative");
        }
    }
    return c.result();
}

SampleResult zs_roundtrip(Sampler& s) {
    Check c;
    const auto g = s.line();
    const auto dec = omega_line_inv(g);
    c.expect(dec.k(Rat(0)).sign() == 0, "line K-part does not fix 0");
    c.expect(omega_line(dec.r, dec.k) == g, "omega_line(omega_line_inv(g)) != g");
    const Rat r = s.rat(-3, 3);
    const auto k = s.isotropy();
    c.expect(omega_line_inv(omega_line(r, k)) == LineDecomposition{r, k}, "omega_line_inv(omega_line) != id");

    const auto f = s.circle();
    const auto cdec = omega_circle_inv(f);
    c.expect(omega_circle(cdec.p, cdec.k) == f, "omega_circle(omega_circle_inv(f)) != f");
    const CirclePoint p(s.unit_rat());
    const auto kc = omega_circle_inv(s.circle()).k;
    c.expect(omega_circle_inv(omega_circle(p, kc)) == CircleDecomposition{p, kc},
             "omega_circle_inv(omega_circle) != id");
    return c.result();
}

SampleResult zs_homomorphism(Sampler& s) {
    Check c;
    const LineDecomposition a{s.rat(-3, 3), s.isotropy()};
    const LineDecomposition b{s.rat(-3, 3), s.isotropy()};
    c.expect(omega_line(zs_product(a, b).r, zs_product(a, b).k) == omega_line(a.r, a.k) * omega_line(b.r, b.k),
             "line pair product disagrees with composition");
    const CircleDecomposition ca{CirclePoint(s.unit_rat()), omega_circle_inv(s.circle()).k};
    const CircleDecomposition cb{CirclePoint(s.unit_rat()), omega_circle_inv(s.circle()).k};
    const auto prod = zs_product(ca, cb);
    c.expect(omega_circle(prod.p, prod.k) == omega_circle(ca.p, ca.k) * omega_circle(cb.p, cb.k),
             "circle pair product disagrees with composition");
    return c.result();
}

SampleResult psi_invariance(Sampler& s) {
    Check c;
    const auto k = s.isotropy();
    const auto l = s.isotropy();
    const Rat r = s.rat(-2, 2);
    const Rat t = s.rat(-2, 2);
    c.expect(d_star(psi_line(k, r), psi_line(l, t)) == d_star(k, l * make_translation(t - r)),
             "d*(ψ(k,r), ψ(l,s)) != d*(k, l τ_{s-r})");
    c.expect(psi_line(k, r)(Rat(0)).sign() == 0, "ψ(k,r) does not fix 0");
    return c.result();
}

SampleResult ivt_ball(Sampler& s) {
    Check c;
    const auto k = s.isotropy();
    for (int i = 0; i < 8; ++i) {
        const Rat x = s.rat(-1, 1);
        const Rat y = k(x);
        c.expect(y >= Rat(-1) && y <= Rat(1), "k(s) left [-1,1] for s = " + x.str());
    }
    c.expect(k(Rat(1)) == Rat(1) && k(Rat(-1)) == Rat(-1), "k does not fix ±1");
    return c.result();
}

SampleResult lift_normalization(Sampler& s) {
    Check c;
    const auto g = s.line();
    const auto [circle, shift] = normalize_lift(g);
    c.expect(make_translation(Rat(shift)) * lift_of(circle) == g, "τ_n ∘ lift != g");
    const auto f = s.circle();
    const auto h = s.circle();
    const CirclePoint p(s.unit_rat());
    c.expect(circle_apply(f * h, p) == circle_apply(f, circle_apply(h, p)), "circle_apply is not an action");
    return c.result();
}

std::vector<Suite> build_suites() {
    return {
        {"dinf-le-dstar", "d_inf <= d* on random interval pairs", dinf_le_dstar},
        {"dstar-right-invariance", "d*(f∘u, g∘u) = d*(f, g) on every carrier", dstar_right_invariance},
        {"dinf-right-invariance", "d_inf(f∘u, g∘u) = d_inf(f, g) on every carrier", dinf_right_invariance},
        {"dstar-translation-invariance", "d*(τr∘f, τs∘g) = d*(f, g) on the line", dstar_translation_invariance},
        {"homotopy-linearity", "d*(F(f,r), F(f,s)) = |r-s| d*(f,id) <= 2|r-s|", homotopy_linearity},
        {"certificate-soundness", "telescoping certificates for delta in {1, 1/4, 1/64}", certificate_soundness},
        {"metric-sandwich", "d <= d_inf + d* <= 2d on line and circle", metric_sandwich},
        {"pseudometric-degeneracy", "d*(τr, id) = 0 and d_sum(τr, id) = |r|", pseudometric_degeneracy},
        {"qi-density-bound", "d_sum(g, τ_{g(0)}) <= 3", qi_density},
        {"qi-inequality", "|f(0)-g(0)| <= d_sum(f,g) <= |f(0)-g(0)| + 6", qi_inequality},
        {"translation-isometry", "d_sum(τr, τs) = |r-s|", translation_isometry},
        {"circle-boundedness", "d_sum(f, g) <= 5/2 on the circle", circle_boundedness},
        {"rotation-diameter", "rotation cosets ρ∘f have d*-diameter 0", rotation_diameter},
        {"coset-asymmetry", "τ∘k has d*-diameter 0; k∘τ only when k = id", coset_asymmetry},
        {"hat-restrict-isometry", "hat/restrict are inverse d*-preserving isomorphisms", hat_restrict},
        {"pl-group-laws", "associativity, identity, inverses, equivariance", pl_group_laws},
        {"metric-axioms", "symmetry and triangle inequality of every metric", metric_axioms},
        {"zs-roundtrip", "Ω and Ω⁻¹ are mutually inverse on line and circle", zs_roundtrip},
        {"zs-homomorphism", "pair product (h1 φ(k1,h2), ψ(k1,h2) k2) matches composition", zs_homomorphism},
        {"psi-invariance", "d*(ψ(k,r), ψ(l,s)) = d*(k, l∘τ_{s-r})", psi_invariance},
        {"ivt-ball", "k([-1,1]) ⊂ [-1,1] for k fixing 0", ivt_ball},
        {"lift-normalization", "normalize_lift recomposes; circle_apply is an action", lift_normalization},
    };
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = build_suites();
    return all;
}

const Suite* find_suite(const std::string& name) {
    for (const auto& s : suites())
        if (s.name == name) return &s;
    return nullptr;
}

ExperimentReport run_suite(const std::string& name, const RunOptions& opts) {
    const Suite* suite = find_suite(name);
    if (!suite) throw Error(ErrorKind::UnknownSuite, "no property suite named '" + name + "'");
    ExperimentReport report{name, opts.seed, opts.count, opts.max_nodes, opts.denom_bound, {}, 0, 0};
    report.samples.resize(opts.count);

    auto run_one = [&](std::size_t i) {
        SampleRecord& rec = report.samples[i];
        rec.index = i;
        rec.seed = derive_seed(opts.seed, i);
        Sampler sampler(rec.seed, opts.max_nodes, opts.denom_bound);
        try {
            SampleResult r = suite->run(sampler);
            rec.pass = r.pass;
            rec.detail = std::move(r.detail);
        } catch (const std::exception& e) {
            rec.pass = false;
            rec.detail = std::string("exception: ") + e.what();
        }
        if (!rec.pass) rec.detail += " [" + sampler.log() + "]";
    };

    const unsigned threads = std::max(1U, opts.threads);
    if (threads == 1 || opts.count < 2) {
        for (std::size_t i = 0; i < opts.count; ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < opts.count; i += threads) run_one(i);
            });
        for (auto& th : pool) th.join();
    }
    for (const auto& rec : report.samples) (rec.pass ? report.passed : report.failed)++;
    return report;
}

std::string ExperimentReport::to_csv(const std::string& command) const {
    std::ostringstream out;
    out << "# command: " << command << "\n"
        << "# stream: " << kStreamName << "\n"
        << "# suite: " << suite << "\n"
        << "# seed: " << seed << "\n"
        << "# count: " << count << "\n"
        << "# max_nodes: " << max_nodes << "\n"
        << "# denom_bound: " << denom_bound << "\n"
        << "index,sample_seed,status,detail\n";
    for (const auto& s : samples)
        out << s.index << "," << s.seed << "," << (s.pass ? "pass" : "fail") << "," << csv_field(s.detail) << "\n";
    out << "# passed: " << passed << "\n"
        << "# failed: " << failed << "\n";
    return out.str();
}

} // namespace plc
