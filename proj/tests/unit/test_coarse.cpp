#include "common.hpp"

#include "plc/coarse.hpp"
#include "plc/metrics.hpp"

using plc::CircleHomeo;
using plc::CirclePoint;
using plc::Elem;
using plc::ElemSet;
using plc::FiniteGroup;
using plc::IntervalHomeo;
using plc::LineHomeoZ;
using plc::MaxFormulaStatus;

namespace {

const FiniteGroup& z5z5() {
    static const FiniteGroup g = plc::direct_product(plc::cyclic_group(5), plc::cyclic_group(5));
    return g;
}

Elem pair(long a, long b) { return static_cast<Elem>(((a % 5 + 5) % 5) * 5 + (b % 5 + 5) % 5); }

plc::ZSData z5z5_split() {
    ElemSet h, k;
    for (long i = 0; i < 5; ++i) {
        h.push_back(pair(i, 0));
        k.push_back(pair(0, i));
    }
    return plc::zs_internal_decompose(z5z5(), h, k);
}

} // namespace

TEST_SUITE("word_metric_bfs") {
    TEST_CASE("Z5 x Z5 with unit generators") {
        const ElemSet s = plc::make_set({pair(1, 0), pair(-1, 0), pair(0, 1), pair(0, -1)});
        const auto t = plc::word_metric_bfs(z5z5(), s);
        CHECK(t.generating);
        CHECK(t.at(pair(2, 1)) == 3);
        CHECK(t.at(pair(2, 2)) == 4);
        const auto oracle_len = oracle::word_lengths(z5z5(), s);
        for (Elem e = 0; e < 25; ++e) CHECK(static_cast<int>(t.at(e)) == oracle_len[e]);
    }

    TEST_CASE("S = G gives distances at most 1, identity at 0") {
        const FiniteGroup s3 = plc::symmetric_group(3);
        ElemSet all;
        for (Elem e = 0; e < 6; ++e) all.push_back(e);
        const auto t = plc::word_metric_bfs(s3, all);
        for (Elem e = 0; e < 6; ++e) CHECK(t.at(e) <= 1);
        CHECK(t.at(s3.identity()) == 0);
    }

    TEST_CASE("non-generating sets are flagged with unreached elements") {
        const FiniteGroup z6 = plc::cyclic_group(6);
        const auto t = plc::word_metric_bfs(z6, {2});
        CHECK(!t.generating);
        CHECK(!t.dist[1].has_value());
        CHECK(t.dist[4] == 1u);
        CHECK_THROWS(t.at(1));
    }

    TEST_CASE("left invariance of the word metric") {
        const FiniteGroup s4 = plc::symmetric_group(4);
        const ElemSet s = plc::make_set({s4.find("(1 2)"), s4.find("(1 2 3 4)"), s4.find("(1 4 3 2)")});
        const auto t = plc::word_metric_bfs(s4, s);
        const auto len = oracle::word_lengths(s4, s);
        for (Elem x = 0; x < 24; ++x) {
            const auto from_x = oracle::word_lengths(s4, s, x);
            for (Elem y = 0; y < 24; ++y) CHECK(static_cast<int>(t.at(s4.mul(s4.inv(x), y))) == from_x[y]);
        }
        for (Elem e = 0; e < 24; ++e) CHECK(static_cast<int>(t.at(e)) == len[e]);
        // Table recursion: dist[g] = 1 + min over generators of dist[g·s⁻¹].
        for (Elem g = 0; g < 24; ++g) {
            if (t.at(g) == 0) continue;
            std::size_t best = 1000;
            for (Elem a : s) {
                best = std::min(best, t.at(s4.mul(g, s4.inv(a))));
                best = std::min(best, t.at(s4.mul(g, a)));
            }
            CHECK(t.at(g) == best + 1);
        }
    }
}

TEST_SUITE("zs_max_formula_check") {
    TEST_CASE("Z5 x Z5 formula holds everywhere") {
        const auto zs = z5z5_split();
        const ElemSet s = plc::make_set({pair(0, 0), pair(1, 0), pair(-1, 0)});
        const ElemSet t = plc::make_set({pair(0, 0), pair(0, 1), pair(0, -1)});
        const auto report = plc::zs_max_formula_check(zs, s, t);
        CHECK(report.status == MaxFormulaStatus::Holds);
        CHECK(report.rows.size() == 25);
        CHECK(report.h_isometric);
        CHECK(report.k_isometric);
        // Independent oracle: enumerate words in ST and compare with the max.
        const auto st = plc::product_set(z5z5(), s, t);
        const auto len_st = oracle::word_lengths(z5z5(), st);
        const auto len_s = oracle::word_lengths(z5z5(), s);
        const auto len_t = oracle::word_lengths(z5z5(), t);
        for (const auto& row : report.rows) {
            CHECK(row.ok);
            CHECK(static_cast<int>(*row.rho_st) == len_st[row.element]);
            CHECK(len_st[row.element] == std::max(len_s[row.h], len_t[row.k]));
        }
    }

    TEST_CASE("S = H, T = K gives metrics in {0,1}") {
        const auto zs = z5z5_split();
        const auto report = plc::zs_max_formula_check(zs, zs.H, zs.K);
        CHECK(report.status == MaxFormulaStatus::Holds);
        for (const auto& row : report.rows) {
            CHECK(*row.rho_st <= 1);
            CHECK(*row.rho_s <= 1);
            CHECK(*row.rho_t <= 1);
        }
    }

    TEST_CASE("S4 = C4 · S3 fails the ST = TS hypothesis") {
        const FiniteGroup s4 = plc::symmetric_group(4);
        const ElemSet h = plc::generated_subgroup(s4, {s4.find("(1 2 3 4)")});
        const ElemSet k = plc::generated_subgroup(s4, {s4.find("(1 2)"), s4.find("(1 2 3)")});
        const auto zs = plc::zs_internal_decompose(s4, h, k);
        const ElemSet s = plc::make_set({s4.identity(), s4.find("(1 2 3 4)"), s4.find("(1 4 3 2)")});
        const auto report = plc::zs_max_formula_check(zs, s, k);
        CHECK(report.status == MaxFormulaStatus::HypothesisFails);
        // Direct set comparison.
        std::set<Elem> st, ts;
        for (Elem a : s)
            for (Elem b : k) {
                st.insert(s4.mul(a, b));
                ts.insert(s4.mul(b, a));
            }
        CHECK(st != ts);
        CHECK(ts.count(s4.find("(1 4 2)")) == 1);
        CHECK(st.count(s4.find("(1 4 2)")) == 0);
    }

    TEST_CASE("other hypothesis failures are reported, not asserted") {
        const auto zs = z5z5_split();
        const ElemSet t = plc::make_set({pair(0, 0), pair(0, 1), pair(0, -1)});
        // Missing 1, not symmetric, not inside H.
        CHECK(plc::zs_max_formula_check(zs, plc::make_set({pair(1, 0), pair(4, 0)}), t).status ==
              MaxFormulaStatus::HypothesisFails);
        CHECK(plc::zs_max_formula_check(zs, plc::make_set({pair(0, 0), pair(1, 0)}), t).status ==
              MaxFormulaStatus::HypothesisFails);
        CHECK(plc::zs_max_formula_check(zs, plc::make_set({pair(0, 0), pair(0, 1), pair(0, 4)}), t).status ==
              MaxFormulaStatus::HypothesisFails);
    }
}

TEST_SUITE("homotopy") {
    TEST_CASE("F(f1, 1/2) is the pointwise convex combination") {
        const auto g = plc::homotopy_F(f1(), R(1, 2));
        CHECK(nodes(g.map()) == std::vector<Node>{{R(0), R(0)}, {R(1, 2), R(3, 8)}, {R(1), R(1)}});
        for (const auto& x : oracle::grid(30)) CHECK(g(x) == (oracle::value(f1_map(), x) + x) / 2);
        CHECK(plc::homotopy_F(f1(), R(0)) == f1());
        CHECK(plc::homotopy_F(f1(), R(1)).is_identity());
        CHECK_KIND(plc::homotopy_F(f1(), R(3, 2)), plc::ErrorKind::OutOfRange);
        CHECK_KIND(plc::homotopy_F(f1(), R(-1, 2)), plc::ErrorKind::OutOfRange);
    }

    TEST_CASE("homotopy_dstar examples") {
        CHECK(plc::homotopy_dstar(f1(), R(0), R(1, 2)) == R(1, 4));
        CHECK(plc::homotopy_dstar(f1(), R(1, 3), R(1, 3)) == R(0));
        CHECK(plc::homotopy_dstar(f1(), R(0), R(1)) == R(1, 2));
        CHECK(plc::homotopy_dstar(f1(), R(0), R(1)) == oracle::dstar(f1_map(), PLMap::identity(Carrier::Interval)));
        CHECK_KIND(plc::homotopy_dstar(f1(), R(0), R(2)), plc::ErrorKind::OutOfRange);
    }

    TEST_CASE("linearity in r on random maps") {
        oracle::Gen gen(50);
        for (int i = 0; i < 60; ++i) {
            const IntervalHomeo f(gen.map(Carrier::Interval));
            const Rat r = gen.rat(0, 1, 30), s = gen.rat(0, 1, 30);
            const Rat total = oracle::dstar(f.map(), PLMap::identity(Carrier::Interval));
            CHECK(plc::homotopy_dstar(f, r, s) == (r - s).abs() * total);
            CHECK(plc::homotopy_dstar(f, r, s) <= (r - s).abs() * 2);
        }
    }
}

TEST_SUITE("cb_factorize") {
    TEST_CASE("(f1, 1/4) splits into two quarter steps") {
        const auto cert = plc::cb_factorize(f1(), R(1, 4));
        CHECK(cert.n == 2);
        CHECK(cert.per_factor_dist == std::vector<Rat>{R(1, 4), R(1, 4)});
        CHECK(cert.factors[0] * cert.factors[1] == f1());
        CHECK(plc::verify(cert));
    }

    TEST_CASE("identity and large delta need one factor") {
        const auto a = plc::cb_factorize(IntervalHomeo(), R(1, 8));
        CHECK(a.n == 1);
        CHECK(a.factors.size() == 1);
        CHECK(a.factors[0].is_identity());
        const auto b = plc::cb_factorize(f1(), R(1));
        CHECK(b.n == 1);
        CHECK(b.factors[0] == f1());
        CHECK(b.per_factor_dist[0] == R(1, 2));
    }

    TEST_CASE("(f1, 1/100) uses the sharp count 50") {
        const auto cert = plc::cb_factorize(f1(), R(1, 100));
        CHECK(cert.n == 50);
        CHECK(cert.n == (R(1, 2) / R(1, 100)).ceil().to_int64());
        for (const auto& d : cert.per_factor_dist) CHECK(d <= R(1, 100));
        IntervalHomeo product;
        for (const auto& f : cert.factors) product = product * f;
        CHECK(product == f1());
        for (std::size_t i = 0; i < cert.factors.size(); ++i)
            CHECK(cert.per_factor_dist[i] == oracle::dstar(cert.factors[i].map(), PLMap::identity(Carrier::Interval)));
    }

    TEST_CASE("non-positive delta is rejected") {
        CHECK_KIND(plc::cb_factorize(f1(), R(0)), plc::ErrorKind::OutOfRange);
        CHECK_KIND(plc::cb_factorize(f1(), R(-1, 2)), plc::ErrorKind::OutOfRange);
    }

    TEST_CASE("tampered certificates fail verification") {
        auto cert = plc::cb_factorize(f1(), R(1, 4));
        cert.factors[0] = IntervalHomeo();
        CHECK(!plc::verify(cert));
        auto c2 = plc::cb_factorize(f1(), R(1, 4));
        c2.delta = R(1, 8);
        CHECK(!plc::verify(c2));
    }

    TEST_CASE("isotropy certificate is the hat of the interval one") {
        const auto k = plc::hat(f1());
        const auto cert = plc::cb_factorize_isotropy(k, R(1, 4));
        const auto base = plc::cb_factorize(f1(), R(1, 4));
        CHECK(cert.n == 2);
        for (std::size_t i = 0; i < cert.factors.size(); ++i) CHECK(cert.factors[i] == plc::hat(base.factors[i]));
        CHECK(plc::verify(cert));
        CHECK(plc::cb_factorize_isotropy(LineHomeoZ(), R(1, 3)).n == 1);
        CHECK_KIND(plc::cb_factorize_isotropy(plc::make_translation(R(1, 2)), R(1)), plc::ErrorKind::NotInIsotropy);
    }

    TEST_CASE("random certificates are sound") {
        oracle::Gen gen(51);
        for (int i = 0; i < 30; ++i) {
            const IntervalHomeo f(gen.map(Carrier::Interval));
            const Rat delta = gen.rat(0, 1, 16) + R(1, 32);
            const auto cert = plc::cb_factorize(f, delta);
            IntervalHomeo product;
            for (const auto& factor : cert.factors) product = product * factor;
            CHECK(product == f);
            for (const auto& d : cert.per_factor_dist) CHECK(d <= delta);
            const Rat total = oracle::dstar(f.map(), PLMap::identity(Carrier::Interval));
            CHECK(Rat(static_cast<long>(cert.n)) == plc::max(R(1), (total / delta).ceil()));
        }
    }
}

TEST_SUITE("quasi-isometry") {
    TEST_CASE("qi_witness examples") {
        const auto g = plc::make_translation(R(1, 3)) * plc::hat(f1());
        const auto w = plc::qi_witness(g);
        CHECK(w.r == R(1, 3));
        CHECK(w.nearest == 0);
        // d_sum(g, τ_{1/3}) = d_inf(hat f1, id) + d*(hat f1, id) = 1/4 + 1/2.
        CHECK(w.density_bound == R(3, 4));
        CHECK(w.density_bound == plc::d_sum(g, plc::make_translation(R(1, 3))));
        CHECK(w.ok());
        const auto t = plc::qi_witness(plc::make_translation(R(3)));
        CHECK(t.r == R(3));
        CHECK(t.nearest == 3);
        CHECK(t.density_bound == R(0));
        const auto id = plc::qi_witness(LineHomeoZ());
        CHECK(id.r == R(0));
        CHECK(id.density_bound == R(0));
    }

    TEST_CASE("nearest integer ties go to even") {
        CHECK(plc::qi_witness(plc::make_translation(R(5, 2))).nearest == 2);
        CHECK(plc::qi_witness(plc::make_translation(R(-1, 2))).nearest == 0);
    }

    TEST_CASE("qi_inequality_check examples") {
        const auto a = plc::qi_inequality_check(plc::make_translation(R(1, 3)), plc::make_translation(R(5, 6)));
        CHECK(a.distance == R(1, 2));
        CHECK(a.translation_gap == R(1, 2));
        CHECK(a.lower_ok);
        CHECK(a.upper_ok);
        const auto k = plc::hat(f1());
        const auto b = plc::qi_inequality_check(k, k);
        CHECK(b.distance == R(0));
        CHECK((b.lower_ok && b.upper_ok));
        const auto g = plc::make_translation(R(1, 3)) * k;
        const auto c = plc::qi_inequality_check(g, LineHomeoZ());
        CHECK(c.distance == plc::d_sum(g, LineHomeoZ()));
        CHECK(c.distance == R(5, 6));
        CHECK(c.translation_gap == R(1, 3));
        CHECK((c.lower_ok && c.upper_ok));
        CHECK(c.multiplicative == 1);
        CHECK(c.additive == 6);
    }

    TEST_CASE("density bound holds on random line maps") {
        oracle::Gen gen(52);
        for (int i = 0; i < 100; ++i) {
            const LineHomeoZ g(gen.map(Carrier::LineZ));
            const auto w = plc::qi_witness(g);
            CHECK(w.density_bound <= R(3));
            const auto c = plc::qi_inequality_check(g, LineHomeoZ(gen.map(Carrier::LineZ)));
            CHECK((c.lower_ok && c.upper_ok));
        }
    }

    TEST_CASE("circle_diameter_check") {
        const auto a = plc::circle_diameter_check(CircleHomeo(), plc::make_rotation(CirclePoint(R(1, 2))));
        CHECK(a.distance == R(1, 2));
        CHECK(a.ok);
        const CircleHomeo f(oracle::Gen(53).map(Carrier::CircleLift));
        CHECK(plc::circle_diameter_check(f, f).distance == R(0));
        oracle::Gen gen(54);
        for (int i = 0; i < 100; ++i) {
            const CircleHomeo p(gen.map(Carrier::CircleLift)), q(gen.map(Carrier::CircleLift));
            const auto d = plc::circle_diameter_check(p, q);
            // d_inf ≤ 1/2 and d* ≤ ∫p' + ∫q' = 2.
            CHECK(d.distance <= R(1, 2) + R(2));
            CHECK(d.ok);
        }
    }
}
