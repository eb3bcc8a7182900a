#include "common.hpp"

#include "plc/finite_group.hpp"
#include "plc/metrics.hpp"
#include "plc/zappa_szep.hpp"

using plc::CircleHomeo;
using plc::CirclePoint;
using plc::Elem;
using plc::ElemSet;
using plc::FiniteGroup;
using plc::LineHomeoZ;

namespace {

struct S4Split {
    FiniteGroup g = plc::symmetric_group(4);
    ElemSet h;
    ElemSet k;
};

// H = ⟨(1 2 3 4)⟩, K = stabilizer of 4.
S4Split s4_split() {
    S4Split s;
    s.h = plc::generated_subgroup(s.g, {s.g.find("(1 2 3 4)")});
    s.k = plc::generated_subgroup(s.g, {s.g.find("(1 2)"), s.g.find("(1 2 3)")});
    return s;
}

std::vector<std::vector<Elem>> table_of(std::size_t n, auto fn) {
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) t[a][b] = fn(a, b);
    return t;
}

LineHomeoZ random_isotropy(oracle::Gen& gen) { return plc::hat(plc::IntervalHomeo(gen.map(Carrier::Interval))); }

CircleHomeo random_circle_isotropy(oracle::Gen& gen) {
    return CircleHomeo(plc::with_carrier(gen.map(Carrier::Interval), Carrier::CircleLift));
}

} // namespace

TEST_SUITE("finite groups") {
    TEST_CASE("symmetric group conventions") {
        const FiniteGroup s4 = plc::symmetric_group(4);
        CHECK(s4.order() == 24);
        CHECK(s4.name(s4.identity()) == "()");
        // (σ·τ)(i) = σ(τ(i)).
        CHECK(s4.mul(s4.find("(1 2 3 4)"), s4.find("(1 3 2)")) == s4.find("(1 4)"));
        CHECK(s4.inv(s4.find("(1 2 3)")) == s4.find("(1 3 2)"));
        CHECK(plc::cycle_notation({2, 3, 1, 4}) == "(1 2 3)");
    }

    TEST_CASE("axiom failures are NotAGroup") {
        // Not associative: a·b = a - b mod 3.
        CHECK_KIND(FiniteGroup(table_of(3, [](Elem a, Elem b) { return (a + 3 - b) % 3; }), {}),
                   plc::ErrorKind::NotAGroup);
        // No identity.
        CHECK_KIND(FiniteGroup(table_of(2, [](Elem, Elem) { return Elem{0}; }), {}), plc::ErrorKind::NotAGroup);
        // Out of range and ragged.
        CHECK_KIND(FiniteGroup({{0, 2}, {1, 0}}, {}), plc::ErrorKind::NotAGroup);
        CHECK_KIND(FiniteGroup({{0, 1}, {1}}, {}), plc::ErrorKind::NotAGroup);
        CHECK_KIND(FiniteGroup({}, {}), plc::ErrorKind::NotAGroup);
    }

    TEST_CASE("subgroups and generated subgroups") {
        const FiniteGroup z6 = plc::cyclic_group(6);
        CHECK(plc::generated_subgroup(z6, {2}) == ElemSet{0, 2, 4});
        CHECK(plc::is_subgroup(z6, {0, 3}));
        CHECK(!plc::is_subgroup(z6, {0, 1}));
        CHECK_KIND(plc::subgroup_as_group(z6, {0, 1}), plc::ErrorKind::NotSubgroup);
        CHECK(plc::subgroup_as_group(z6, {0, 2, 4}).order() == 3);
    }
}

TEST_SUITE("zs_internal_decompose") {
    TEST_CASE("S4 = C4 · S3 with every factorization brute-forced") {
        const auto s = s4_split();
        const auto zs = plc::zs_internal_decompose(s.g, s.h, s.k);
        CHECK(s.h.size() == 4);
        CHECK(s.k.size() == 6);
        const Elem t14 = s.g.find("(1 4)");
        CHECK(zs.factor[t14].first == s.g.find("(1 2 3 4)"));
        CHECK(zs.factor[t14].second == s.g.find("(1 3 2)"));
        // Every element has exactly one factorization among all 24 products.
        for (Elem e = 0; e < s.g.order(); ++e) {
            int count = 0;
            for (Elem h : s.h)
                for (Elem k : s.k) count += s.g.mul(h, k) == e;
            CHECK(count == 1);
        }
        // kh = α(k,h)·β(k,h).
        for (std::size_t i = 0; i < s.k.size(); ++i)
            for (std::size_t j = 0; j < s.h.size(); ++j) {
                CHECK(plc::contains(s.h, zs.alpha[i][j]));
                CHECK(plc::contains(s.k, zs.beta[i][j]));
                CHECK(s.g.mul(s.k[i], s.h[j]) == s.g.mul(zs.alpha[i][j], zs.beta[i][j]));
            }
    }

    TEST_CASE("trivial group") {
        const auto zs = plc::zs_internal_decompose(plc::trivial_group(), {0}, {0});
        CHECK(zs.H == ElemSet{0});
        CHECK(zs.alpha.size() == 1);
    }

    TEST_CASE("S3 with H = K = <(1 2)> is not exact") {
        const FiniteGroup s3 = plc::symmetric_group(3);
        const ElemSet h = plc::generated_subgroup(s3, {s3.find("(1 2)")});
        CHECK_KIND(plc::zs_internal_decompose(s3, h, h), plc::ErrorKind::NotExactFactorization);
    }

    TEST_CASE("non-subgroups are rejected") {
        const FiniteGroup z4 = plc::cyclic_group(4);
        CHECK_KIND(plc::zs_internal_decompose(z4, {0, 1}, {0}), plc::ErrorKind::NotSubgroup);
        CHECK_KIND(plc::zs_internal_decompose(z4, {0}, {0, 3}), plc::ErrorKind::NotSubgroup);
    }
}

TEST_SUITE("zs_external_build") {
    TEST_CASE("rebuild of S4 is isomorphic to S4 via (h,k) -> hk") {
        const auto s = s4_split();
        const auto zs = plc::zs_internal_decompose(s.g, s.h, s.k);
        const auto ext = plc::zs_external_build(plc::external_input(zs));
        CHECK(ext.group.order() == 24);
        const auto phi = plc::external_to_internal(zs, ext);
        // Isomorphism oracle: bijection and phi(ab) = phi(a)phi(b) on all 576 pairs.
        std::vector<int> hit(24, 0);
        for (Elem a = 0; a < 24; ++a) ++hit[phi[a]];
        CHECK(std::all_of(hit.begin(), hit.end(), [](int c) { return c == 1; }));
        for (Elem a = 0; a < 24; ++a)
            for (Elem b = 0; b < 24; ++b) CHECK(phi[ext.group.mul(a, b)] == s.g.mul(phi[a], phi[b]));
        CHECK(plc::is_isomorphism(ext.group, s.g, phi));
    }

    TEST_CASE("inverse formula on every element") {
        const auto s = s4_split();
        const auto in = plc::external_input(plc::zs_internal_decompose(s.g, s.h, s.k));
        const auto ext = plc::zs_external_build(in);
        for (Elem e = 0; e < ext.group.order(); ++e) {
            const auto [h, k] = ext.split(e);
            const Elem hi = in.H.inv(h), ki = in.K.inv(k);
            CHECK(ext.group.inv(e) == ext.index(in.alpha[ki][hi], in.beta[ki][hi]));
        }
    }

    TEST_CASE("trivial actions give the direct product") {
        const FiniteGroup z5 = plc::cyclic_group(5);
        plc::ExternalZSInput in{z5, z5, {}, {}};
        in.alpha = table_of(5, [](Elem, Elem h) { return h; });
        in.beta = table_of(5, [](Elem k, Elem) { return k; });
        const auto ext = plc::zs_external_build(in);
        CHECK(ext.group.table() == plc::direct_product(z5, z5).table());
    }

    TEST_CASE("squaring K is rejected") {
        const FiniteGroup z3 = plc::cyclic_group(3);
        plc::ExternalZSInput in{z3, z3, {}, {}};
        in.alpha = table_of(3, [](Elem, Elem h) { return h; });
        in.beta = table_of(3, [](Elem k, Elem) { return (2 * k) % 3; });
        bool rejected = false;
        try {
            (void)plc::zs_external_build(in);
        } catch (const plc::Error& e) {
            rejected = e.kind() == plc::ErrorKind::NotAGroup || e.kind() == plc::ErrorKind::InjectionNotHom;
        }
        CHECK(rejected);
    }

    TEST_CASE("malformed alpha and beta are BadSpec") {
        const FiniteGroup z2 = plc::cyclic_group(2);
        plc::ExternalZSInput in{z2, z2, {{0, 1}}, {{0, 0}, {1, 1}}};
        CHECK_KIND(plc::zs_external_build(in), plc::ErrorKind::BadSpec);
        in.alpha = {{0, 1}, {0, 5}};
        CHECK_KIND(plc::zs_external_build(in), plc::ErrorKind::BadSpec);
    }

    TEST_CASE("every exact factorization of small groups rebuilds isomorphically") {
        std::vector<FiniteGroup> groups{plc::cyclic_group(6), plc::symmetric_group(3),
                                        plc::direct_product(plc::cyclic_group(2), plc::cyclic_group(4))};
        int checked = 0;
        for (const auto& g : groups) {
            std::vector<ElemSet> subgroups;
            for (Elem a = 0; a < g.order(); ++a)
                for (Elem b = 0; b < g.order(); ++b) {
                    const auto s = plc::generated_subgroup(g, {a, b});
                    if (std::find(subgroups.begin(), subgroups.end(), s) == subgroups.end()) subgroups.push_back(s);
                }
            for (const auto& h : subgroups)
                for (const auto& k : subgroups) {
                    if (h.size() * k.size() != g.order()) continue;
                    if (plc::product_set(g, h, k).size() != g.order()) continue;
                    const auto zs = plc::zs_internal_decompose(g, h, k);
                    const auto ext = plc::zs_external_build(plc::external_input(zs));
                    CHECK(plc::is_isomorphism(ext.group, g, plc::external_to_internal(zs, ext)));
                    ++checked;
                }
        }
        CHECK(checked > 5);
    }
}

TEST_SUITE("line and circle decompositions") {
    TEST_CASE("omega_line_inv examples") {
        const auto k = plc::hat(f1());
        const auto g = plc::make_translation(R(1, 3)) * k;
        const auto d = plc::omega_line_inv(g);
        CHECK(d.r == R(1, 3));
        CHECK(d.k == k);
        CHECK(plc::omega_line(d.r, d.k) == g);
        CHECK(plc::omega_line_inv(LineHomeoZ()) == plc::LineDecomposition{R(0), LineHomeoZ()});
        CHECK(plc::omega_line_inv(plc::make_translation(R(5, 2))) == plc::LineDecomposition{R(5, 2), LineHomeoZ()});
        CHECK_KIND(plc::omega_line(R(0), plc::make_translation(R(1, 2))), plc::ErrorKind::NotInIsotropy);
    }

    TEST_CASE("omega_circle_inv examples") {
        oracle::Gen gen(40);
        const CircleHomeo k = random_circle_isotropy(gen);
        const CircleHomeo f = plc::make_rotation(CirclePoint(R(1, 3))) * k;
        const auto d = plc::omega_circle_inv(f);
        CHECK(d.p == CirclePoint(R(1, 3)));
        CHECK(d.k == k);
        CHECK(plc::omega_circle_inv(CircleHomeo()).k.is_identity());
        const auto rot = plc::omega_circle_inv(plc::make_rotation(CirclePoint(R(4, 5))));
        CHECK(rot.p == CirclePoint(R(4, 5)));
        CHECK(rot.k.is_identity());
        CHECK_KIND(plc::omega_circle(CirclePoint(), plc::make_rotation(CirclePoint(R(1, 2)))),
                   plc::ErrorKind::NotInIsotropy);
    }

    TEST_CASE("psi_line examples") {
        const auto k = plc::hat(f1());
        const auto p = plc::psi_line(k, R(1, 2));
        CHECK(nodes(p.map()) == std::vector<Node>{{R(0), R(0)}, {R(1, 2), R(3, 4)}, {R(1), R(1)}});
        // τ_{1/4}⁻¹ ∘ hat(f1) ∘ τ_{1/2} on a grid; k(1/2) = 1/4.
        for (const auto& x : oracle::grid(40))
            CHECK(p(x) == oracle::value(f1_map(), (x + R(1, 2)).frac()) + (x + R(1, 2)).floor() - R(1, 4));
        CHECK(plc::psi_line(k, R(0)) == k);
        CHECK(plc::psi_line(LineHomeoZ(), R(7, 3)).is_identity());
        CHECK_KIND(plc::psi_line(plc::make_translation(R(1, 5)), R(0)), plc::ErrorKind::NotInIsotropy);
    }

    TEST_CASE("zs_product examples") {
        using D = plc::LineDecomposition;
        CHECK(plc::zs_product(D{R(1, 3), LineHomeoZ()}, D{R(1, 2), LineHomeoZ()}) == D{R(5, 6), LineHomeoZ()});
        oracle::Gen gen(41);
        const auto k1 = random_isotropy(gen), k2 = random_isotropy(gen);
        CHECK(plc::zs_product(D{R(0), k1}, D{R(0), k2}) == D{R(0), k1 * k2});
        const auto hk = plc::hat(f1());
        const auto prod = plc::zs_product(D{R(0), hk}, D{R(1, 2), LineHomeoZ()});
        CHECK(prod == D{R(1, 4), plc::psi_line(hk, R(1, 2))});
        CHECK(prod == plc::omega_line_inv(hk * plc::make_translation(R(1, 2))));
    }

    TEST_CASE("round trips and homomorphism on random inputs") {
        oracle::Gen gen(42);
        for (int i = 0; i < 40; ++i) {
            const LineHomeoZ g(gen.map(Carrier::LineZ));
            CHECK(plc::omega_line(plc::omega_line_inv(g).r, plc::omega_line_inv(g).k) == g);
            const Rat r = gen.rat(-2, 2, 30);
            const auto k = random_isotropy(gen);
            CHECK(plc::omega_line_inv(plc::omega_line(r, k)) == plc::LineDecomposition{r, k});

            const CircleHomeo f(gen.map(Carrier::CircleLift));
            const auto cd = plc::omega_circle_inv(f);
            CHECK(plc::omega_circle(cd.p, cd.k) == f);

            const LineHomeoZ h(gen.map(Carrier::LineZ));
            CHECK(plc::zs_product(plc::omega_line_inv(g), plc::omega_line_inv(h)) == plc::omega_line_inv(g * h));
            const CircleHomeo e(gen.map(Carrier::CircleLift));
            CHECK(plc::zs_product(plc::omega_circle_inv(f), plc::omega_circle_inv(e)) == plc::omega_circle_inv(f * e));
        }
    }

    TEST_CASE("psi preserves d_star up to the translation shift") {
        oracle::Gen gen(43);
        for (int i = 0; i < 40; ++i) {
            const auto k = random_isotropy(gen), l = random_isotropy(gen);
            const Rat r = gen.rat(-2, 2, 20), s = gen.rat(-2, 2, 20);
            CHECK(plc::d_star(plc::psi_line(k, r), plc::psi_line(l, s)) ==
                  plc::d_star(k, l * plc::make_translation(s - r)));
        }
    }
}
