#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "plc/coarse.hpp"
#include "plc/error.hpp"
#include "plc/io.hpp"
#include "plc/metrics.hpp"
#include "plc/plot.hpp"
#include "plc/properties.hpp"
#include "plc/random.hpp"
#include "plc/zappa_szep.hpp"

namespace plc::cli {

namespace {

using io::json;

struct Sink {
    std::ostream& out;
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty())
            out << text;
        else
            io::write_file(path, text);
    }
};

PLMap load_map(const std::string& path) { return io::plmap_from_json(io::read_file(path)); }

Rat parse_rat_flag(const std::string& text) { return Rat::parse(text); }

std::string join(const std::vector<std::string>& args) {
    std::string s = "plcoarse";
    for (const auto& a : args) s += " " + a;
    return s;
}

// Element tokens are labels first, then 0-based indices.
ElemSet parse_elements(const FiniteGroup& g, const std::vector<std::string>& tokens) {
    std::vector<Elem> out;
    for (const auto& t : tokens) {
        const auto& names = g.names();
        const auto it = std::find(names.begin(), names.end(), t);
        if (it != names.end()) {
            out.push_back(static_cast<Elem>(it - names.begin()));
            continue;
        }
        Elem e = 0;
        const auto res = std::from_chars(t.data(), t.data() + t.size(), e);
        if (res.ec != std::errc() || res.ptr != t.data() + t.size() || e >= g.order())
            throw Error(ErrorKind::ParseError, "unknown group element '" + t + "'");
        out.push_back(e);
    }
    return make_set(std::move(out));
}

FiniteGroup builtin_group(const std::string& name) {
    if (name == "trivial") return trivial_group();
    if (name.size() > 1 && (name[0] == 'z' || name[0] == 's')) {
        const auto x = name.find('x');
        auto number = [&](std::string_view t) {
            std::size_t n = 0;
            const auto res = std::from_chars(t.data(), t.data() + t.size(), n);
            if (res.ec != std::errc() || res.ptr != t.data() + t.size() || n == 0)
                throw Error(ErrorKind::ParseError, "unknown builtin group '" + name + "'");
            return n;
        };
        if (name[0] == 'z' && x != std::string::npos && x + 1 < name.size() && name[x + 1] == 'z')
            return direct_product(cyclic_group(number(std::string_view(name).substr(1, x - 1))),
                                  cyclic_group(number(std::string_view(name).substr(x + 2))));
        if (x == std::string::npos) {
            const std::size_t n = number(std::string_view(name).substr(1));
            if (name[0] == 'z') return cyclic_group(n);
            if (n <= 6) return symmetric_group(n);
        }
    }
    throw Error(ErrorKind::ParseError, "unknown builtin group '" + name + "' (z<n>, z<m>xz<n>, s<n>, trivial)");
}

std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

std::string max_formula_csv(const ZSData& zs, const MaxFormulaReport& r, const std::string& command) {
    std::ostringstream out;
    out << "# command: " << command << "\n";
    switch (r.status) {
    case MaxFormulaStatus::Holds: out << "# status: holds\n"; break;
    case MaxFormulaStatus::Violated: out << "# status: violated\n"; break;
    case MaxFormulaStatus::HypothesisFails: out << "# status: hypothesis-fails\n# reason: " << r.reason << "\n"; break;
    }
    out << "element,h,k,rho_st,rho_s,rho_t,ok\n";
    const auto& g = zs.group;
    for (const auto& row : r.rows)
        out << "\"" << g.name(row.element) << "\",\"" << g.name(row.h) << "\",\"" << g.name(row.k) << "\","
            << opt(row.rho_st) << "," << opt(row.rho_s) << "," << opt(row.rho_t) << "," << (row.ok ? 1 : 0)
            << "\n";
    if (r.status != MaxFormulaStatus::HypothesisFails) {
        out << "# h_isometric: " << (r.h_isometric ? "true" : "false") << "\n";
        out << "# k_isometric: " << (r.k_isometric ? "true" : "false") << "\n";
    }
    return out.str();
}

std::string replace_extension(const std::string& path, const std::string& ext) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return path.substr(0, dot) + ext;
    return path + ext;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact piecewise-linear homeomorphism groups: metrics, decompositions, certificates"};
    app.name("plcoarse");
    app.require_subcommand(1);

    std::string out_path;
    const std::string command = join(args);
    int status = kOk;
    std::function<void()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "Deterministic random PL map");
    GenSpec spec;
    std::string gen_carrier = "interval";
    gen->add_option("--seed", spec.seed, "Stream seed")->default_val(0);
    gen->add_option("--nodes", spec.node_count, "Number of nodes (>= 2)")->default_val(5);
    gen->add_option("--denom", spec.denom_bound, "Denominator bound for segment rises")->default_val(16);
    gen->add_option("--carrier", gen_carrier, "interval | line | circle")->default_val("interval");
    gen->add_option("--out", out_path, "Output file");
    gen->callback([&] {
        action = [&] {
            spec.carrier = carrier_from_string(gen_carrier);
            Sink{out, out_path}.emit(io::format(io::to_json(gen_random(spec))));
        };
    });

    // dist
    auto* dist = app.add_subcommand("dist", "Distance between two maps, printed as p/q");
    std::string file_f, file_g, metric = "dstar";
    dist->add_option("f", file_f, "First map")->required();
    dist->add_option("g", file_g, "Second map")->required();
    dist->add_option("--metric", metric, "dinf | dstar | sum | product")
        ->check(CLI::IsMember({"dinf", "dstar", "sum", "product"}))
        ->default_val("dstar");
    dist->callback([&] {
        action = [&] {
            const PLMap f = load_map(file_f);
            const PLMap g = load_map(file_g);
            Rat d;
            if (metric == "dinf")
                d = d_inf(f, g);
            else if (metric == "dstar")
                d = d_star(f, g);
            else if (metric == "sum")
                d = d_sum(f, g);
            else
                d = d_product(f, g);
            out << d.str() << "\n";
        };
    });

    // compose / invert
    auto* comp = app.add_subcommand("compose", "f ∘ g");
    comp->add_option("f", file_f, "Outer map")->required();
    comp->add_option("g", file_g, "Inner map")->required();
    comp->add_option("--out", out_path, "Output file");
    comp->callback([&] {
        action = [&] { Sink{out, out_path}.emit(io::format(io::to_json(compose(load_map(file_f), load_map(file_g))))); };
    });

    auto* inv = app.add_subcommand("invert", "Inverse map");
    inv->add_option("f", file_f, "Map")->required();
    inv->add_option("--out", out_path, "Output file");
    inv->callback([&] {
        action = [&] { Sink{out, out_path}.emit(io::format(io::to_json(invert(load_map(file_f))))); };
    });

    // decompose
    auto* dec = app.add_subcommand("decompose", "Split a line or circle map as translation ∘ isotropy");
    dec->add_option("f", file_f, "Line or circle map")->required();
    dec->add_option("--out", out_path, "Output file");
    dec->callback([&] {
        action = [&] {
            const PLMap f = load_map(file_f);
            json j;
            if (f.carrier() == Carrier::LineZ)
                j = io::to_json(omega_line_inv(LineHomeoZ(f)));
            else if (f.carrier() == Carrier::CircleLift)
                j = io::to_json(omega_circle_inv(CircleHomeo(f)));
            else
                throw Error(ErrorKind::CarrierMismatch, "decompose needs a line or circle map");
            Sink{out, out_path}.emit(io::format(j));
        };
    });

    // factorize
    auto* fac = app.add_subcommand("factorize", "Telescoping factorization into factors within delta of id");
    std::string delta_text;
    fac->add_option("f", file_f, "Interval map, or line map fixing 0")->required();
    fac->add_option("--delta", delta_text, "Per-factor bound p/q > 0")->required();
    fac->add_option("--out", out_path, "Output file");
    fac->callback([&] {
        action = [&] {
            const PLMap f = load_map(file_f);
            const Rat delta = parse_rat_flag(delta_text);
            bool ok = false;
            json j;
            if (f.carrier() == Carrier::Interval) {
                const auto cert = cb_factorize(IntervalHomeo(f), delta);
                ok = verify(cert);
                j = io::to_json(cert);
            } else if (f.carrier() == Carrier::LineZ) {
                const auto cert = cb_factorize_isotropy(LineHomeoZ(f), delta);
                ok = verify(cert);
                j = io::to_json(cert);
            } else {
                throw Error(ErrorKind::CarrierMismatch, "factorize needs an interval map or a line map fixing 0");
            }
            Sink{out, out_path}.emit(io::format(j));
            if (!ok) status = kCheckFailed;
        };
    });

    // zs
    auto* zs = app.add_subcommand("zs", "Exact factorizations of finite groups");
    zs->require_subcommand(1);
    std::string group_file, builtin;
    std::vector<std::string> h_tokens, k_tokens, s_tokens, t_tokens;

    auto* zs_group = zs->add_subcommand("group", "Emit a builtin group table");
    zs_group->add_option("name", builtin, "z<n>, z<m>xz<n>, s<n> (n <= 6), trivial")->required();
    zs_group->add_option("--out", out_path, "Output file");
    zs_group->callback([&] {
        action = [&] { Sink{out, out_path}.emit(io::format(io::to_json(builtin_group(builtin)))); };
    });

    auto* zs_dec = zs->add_subcommand("decompose", "Internal decomposition G = HK with alpha, beta");
    zs_dec->add_option("group", group_file, "FiniteGroup file");
    zs_dec->add_option("--builtin", builtin, "Builtin group instead of a file");
    zs_dec->add_option("--H", h_tokens, "Elements of H (labels or indices)")->required();
    zs_dec->add_option("--K", k_tokens, "Elements of K (labels or indices)")->required();
    zs_dec->add_option("--out", out_path, "Output file");
    zs_dec->callback([&] {
        action = [&] {
            if (group_file.empty() == builtin.empty())
                throw Error(ErrorKind::BadSpec, "give exactly one of a group file or --builtin");
            const FiniteGroup g = builtin.empty() ? io::group_from_json(io::read_file(group_file)) : builtin_group(builtin);
            const auto data = zs_internal_decompose(g, parse_elements(g, h_tokens), parse_elements(g, k_tokens));
            Sink{out, out_path}.emit(io::format(io::to_json(data)));
        };
    });

    auto* zs_build = zs->add_subcommand("build", "External product from H, K, alpha, beta");
    zs_build->add_option("input", group_file, "External input file")->required();
    zs_build->add_option("--out", out_path, "Output file");
    zs_build->callback([&] {
        action = [&] {
            const auto ext = zs_external_build(io::external_from_json(io::read_file(group_file)));
            Sink{out, out_path}.emit(io::format(io::to_json(ext.group)));
        };
    });

    auto* zs_word = zs->add_subcommand("wordcheck", "Word-metric max formula against breadth-first search");
    zs_word->add_option("zsdata", group_file, "ZSData file")->required();
    zs_word->add_option("--S", s_tokens, "Generating set of H")->required();
    zs_word->add_option("--T", t_tokens, "Generating set of K")->required();
    zs_word->add_option("--out", out_path, "Output CSV");
    zs_word->callback([&] {
        action = [&] {
            const ZSData data = io::zsdata_from_json(io::read_file(group_file));
            const auto report = zs_max_formula_check(data, parse_elements(data.group, s_tokens),
                                                     parse_elements(data.group, t_tokens));
            Sink{out, out_path}.emit(max_formula_csv(data, report, command));
            if (report.status == MaxFormulaStatus::Violated) status = kCheckFailed;
            if (report.status == MaxFormulaStatus::HypothesisFails) status = kHypothesisFails;
        };
    });

    // qi
    auto* qi = app.add_subcommand("qi", "Quasi-isometry Z → line group");
    qi->require_subcommand(1);
    auto* qi_w = qi->add_subcommand("witness", "Density witness d_sum(g, τ_g(0)) <= 3");
    qi_w->add_option("g", file_f, "Line map")->required();
    qi_w->add_option("--out", out_path, "Output file");
    qi_w->callback([&] {
        action = [&] {
            const auto w = qi_witness(LineHomeoZ(load_map(file_f)));
            Sink{out, out_path}.emit(io::format(io::to_json(w)));
            if (!w.ok()) status = kCheckFailed;
        };
    });
    auto* qi_c = qi->add_subcommand("check", "|f(0)-g(0)| <= d_sum(f,g) <= |f(0)-g(0)| + 6");
    qi_c->add_option("f", file_f, "Line map")->required();
    qi_c->add_option("g", file_g, "Line map")->required();
    qi_c->add_option("--out", out_path, "Output file");
    qi_c->callback([&] {
        action = [&] {
            const auto c = qi_inequality_check(LineHomeoZ(load_map(file_f)), LineHomeoZ(load_map(file_g)));
            Sink{out, out_path}.emit(io::format(io::to_json(c)));
            if (!c.lower_ok || !c.upper_ok) status = kCheckFailed;
        };
    });

    // plot
    auto* plot = app.add_subcommand("plot", "Figure data as SVG plus CSV");
    std::string kind, map_file;
    unsigned power = 0, grid = 0;
    std::vector<std::string> r_values{"0", "1/4", "1/2", "3/4", "1"};
    std::vector<std::string> window{"-1", "3"};
    plot->add_option("kind", kind, "homotopy | hat")->required();
    plot->add_option("--map", map_file, "Interval map file instead of a power interpolant");
    plot->add_option("--power", power, "Interpolate x^power (default 12 for homotopy, 4 for hat)");
    plot->add_option("--grid", grid, "Interpolation grid size")->default_val(16);
    plot->add_option("--r", r_values, "Homotopy parameters")->delimiter(',');
    plot->add_option("--window", window, "Window lo,hi for hat")->delimiter(',')->expected(2);
    plot->add_option("--out", out_path, "SVG path; the CSV is written next to it")->required();
    plot->callback([&] {
        action = [&] {
            if (kind != "homotopy" && kind != "hat")
                throw Error(ErrorKind::BadKind, "plot kind must be homotopy or hat, got '" + kind + "'");
            IntervalHomeo f;
            std::string note;
            if (!map_file.empty()) {
                f = IntervalHomeo(load_map(map_file));
                note = map_file;
            } else {
                const unsigned p = power ? power : (kind == "homotopy" ? 12u : 4u);
                f = power_interpolant(p, grid);
                note = "PL interpolant of x^" + std::to_string(p) + " on grid i/" + std::to_string(grid);
            }
            Plot pl;
            if (kind == "homotopy") {
                std::vector<Rat> rs;
                for (const auto& r : r_values) rs.push_back(parse_rat_flag(r));
                pl = homotopy_plot(f, rs, note);
            } else {
                pl = hat_plot(f, parse_rat_flag(window.at(0)), parse_rat_flag(window.at(1)), note);
            }
            io::write_file(out_path, to_svg(pl));
            io::write_file(replace_extension(out_path, ".csv"), to_csv(pl));
        };
    });

    // prop
    auto* prop = app.add_subcommand("prop", "Batch property suite");
    std::string suite;
    RunOptions ro;
    bool list = false;
    prop->add_option("suite", suite, "Suite name");
    prop->add_flag("--list", list, "List suites");
    prop->add_option("--count", ro.count, "Samples")->default_val(100);
    prop->add_option("--seed", ro.seed, "Base seed")->default_val(1);
    prop->add_option("--max-nodes", ro.max_nodes, "Largest node count")->default_val(12);
    prop->add_option("--denom", ro.denom_bound, "Denominator bound")->default_val(1ULL << 16);
    prop->add_option("--threads", ro.threads, "Worker threads")->default_val(1);
    prop->add_option("--out", out_path, "Output CSV");
    prop->callback([&] {
        action = [&] {
            if (list) {
                for (const auto& s : suites()) out << s.name << "\t" << s.description << "\n";
                return;
            }
            const auto report = run_suite(suite, ro);
            Sink{out, out_path}.emit(report.to_csv(command));
            if (!report.ok()) status = kCheckFailed;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kError;
    }
    try {
        if (action) action();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return status;
}

} // namespace plc::cli
