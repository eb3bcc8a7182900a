#include "plc/zappa_szep.hpp"

#include <algorithm>
#include <string>

#include "plc/error.hpp"

namespace plc {

namespace {

std::size_t position(const ElemSet& s, Elem e) {
    return static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), e) - s.begin());
}

} // namespace

ZSData zs_internal_decompose(const FiniteGroup& g, const ElemSet& h_mask, const ElemSet& k_mask) {
    const ElemSet H = make_set(h_mask);
    const ElemSet K = make_set(k_mask);
    if (!is_subgroup(g, H)) throw Error(ErrorKind::NotSubgroup, "H is not a subgroup");
    if (!is_subgroup(g, K)) throw Error(ErrorKind::NotSubgroup, "K is not a subgroup");

    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::pair<Elem, Elem>> factor(g.order(), {unset, unset});
    for (Elem h : H)
        for (Elem k : K) {
            const Elem prod = g.mul(h, k);
            if (factor[prod].first != unset)
                throw Error(ErrorKind::NotExactFactorization,
                            g.name(prod) + " has more than one factorization hk");
            factor[prod] = {h, k};
        }
    for (Elem e = 0; e < g.order(); ++e)
        if (factor[e].first == unset)
            throw Error(ErrorKind::NotExactFactorization, g.name(e) + " is not of the form hk");

    IndexMatrix alpha(K.size(), std::vector<Elem>(H.size()));
    IndexMatrix beta(K.size(), std::vector<Elem>(H.size()));
    for (std::size_t i = 0; i < K.size(); ++i)
        for (std::size_t j = 0; j < H.size(); ++j) {
            const auto [a, b] = factor[g.mul(K[i], H[j])];
            alpha[i][j] = a;
            beta[i][j] = b;
        }
    return {g, H, K, std::move(alpha), std::move(beta), std::move(factor)};
}

ExternalZSInput external_input(const ZSData& zs) {
    ExternalZSInput in{subgroup_as_group(zs.group, zs.H), subgroup_as_group(zs.group, zs.K), {}, {}};
    in.alpha.assign(zs.K.size(), std::vector<Elem>(zs.H.size()));
    in.beta.assign(zs.K.size(), std::vector<Elem>(zs.H.size()));
    for (std::size_t i = 0; i < zs.K.size(); ++i)
        for (std::size_t j = 0; j < zs.H.size(); ++j) {
            in.alpha[i][j] = position(zs.H, zs.alpha[i][j]);
            in.beta[i][j] = position(zs.K, zs.beta[i][j]);
        }
    return in;
}

ExternalProduct zs_external_build(const ExternalZSInput& in) {
    const std::size_t nh = in.H.order();
    const std::size_t nk = in.K.order();
    auto shape_ok = [&](const IndexMatrix& m, std::size_t bound) {
        if (m.size() != nk) return false;
        for (const auto& row : m) {
            if (row.size() != nh) return false;
            for (Elem e : row)
                if (e >= bound) return false;
        }
        return true;
    };
    if (!shape_ok(in.alpha, nh) || !shape_ok(in.beta, nk))
        throw Error(ErrorKind::BadSpec, "alpha and beta must be total |K|x|H| index matrices");

    const std::size_t n = nh * nk;
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    std::vector<std::string> names(n);
    for (Elem h1 = 0; h1 < nh; ++h1)
        for (Elem k1 = 0; k1 < nk; ++k1) {
            const Elem a = h1 * nk + k1;
            names[a] = "(" + in.H.name(h1) + "," + in.K.name(k1) + ")";
            for (Elem h2 = 0; h2 < nh; ++h2)
                for (Elem k2 = 0; k2 < nk; ++k2) {
                    const Elem h = in.H.mul(h1, in.alpha[k1][h2]);
                    const Elem k = in.K.mul(in.beta[k1][h2], k2);
                    table[a][h2 * nk + k2] = h * nk + k;
                }
        }

    ExternalProduct ext{FiniteGroup(std::move(table), std::move(names)), nh, nk};
    const FiniteGroup& G = ext.group;
    const Elem eh = in.H.identity();
    const Elem ek = in.K.identity();

    for (Elem a = 0; a < nh; ++a)
        for (Elem b = 0; b < nh; ++b)
            if (G.mul(ext.index(a, ek), ext.index(b, ek)) != ext.index(in.H.mul(a, b), ek))
                throw Error(ErrorKind::InjectionNotHom, "h -> (h,1) is not a homomorphism");
    for (Elem a = 0; a < nk; ++a)
        for (Elem b = 0; b < nk; ++b)
            if (G.mul(ext.index(eh, a), ext.index(eh, b)) != ext.index(eh, in.K.mul(a, b)))
                throw Error(ErrorKind::InjectionNotHom, "k -> (1,k) is not a homomorphism");

    // (h,k)⁻¹ = (α(k⁻¹,h⁻¹), β(k⁻¹,h⁻¹))
    for (Elem h = 0; h < nh; ++h)
        for (Elem k = 0; k < nk; ++k) {
            const Elem hi = in.H.inv(h);
            const Elem ki = in.K.inv(k);
            if (G.inv(ext.index(h, k)) != ext.index(in.alpha[ki][hi], in.beta[ki][hi]))
                throw Error(ErrorKind::NotAGroup, "inverse formula fails at " + G.name(ext.index(h, k)));
        }
    return ext;
}

std::vector<Elem> external_to_internal(const ZSData& zs, const ExternalProduct& ext) {
    std::vector<Elem> phi(ext.group.order());
    for (Elem e = 0; e < phi.size(); ++e) {
        const auto [h, k] = ext.split(e);
        phi[e] = zs.group.mul(zs.H[h], zs.K[k]);
    }
    return phi;
}

namespace {

void require_isotropy(const LineHomeoZ& k) {
    const Rat v = k(Rat(0));
    if (v.sign() != 0) throw Error(ErrorKind::NotInIsotropy, "k(0) = " + v.str() + ", expected 0");
}

void require_isotropy(const CircleHomeo& k) {
    const Rat v = k(Rat(0));
    if (v.sign() != 0)
        throw Error(ErrorKind::NotInIsotropy, "k moves the basepoint to " + v.str());
}

} // namespace

LineHomeoZ omega_line(const Rat& r, const LineHomeoZ& k) {
    require_isotropy(k);
    return make_translation(r) * k;
}

LineDecomposition omega_line_inv(const LineHomeoZ& g) {
    const Rat r = g(Rat(0));
    return {r, make_translation(-r) * g};
}

CircleHomeo omega_circle(const CirclePoint& p, const CircleHomeo& k) {
    require_isotropy(k);
    return make_rotation(p) * k;
}

CircleDecomposition omega_circle_inv(const CircleHomeo& f) {
    const CirclePoint p(f(Rat(0)));
    return {p, make_rotation(CirclePoint(-p.value())) * f};
}

LineHomeoZ psi_line(const LineHomeoZ& k, const Rat& r) {
    require_isotropy(k);
    return make_translation(-k(r)) * k * make_translation(r);
}

CircleHomeo psi_circle(const CircleHomeo& k, const CirclePoint& p) {
    require_isotropy(k);
    const CirclePoint kp = circle_apply(k, p);
    return make_rotation(CirclePoint(-kp.value())) * k * make_rotation(p);
}

LineDecomposition zs_product(const LineDecomposition& a, const LineDecomposition& b) {
    require_isotropy(a.k);
    require_isotropy(b.k);
    return {a.r + a.k(b.r), psi_line(a.k, b.r) * b.k};
}

CircleDecomposition zs_product(const CircleDecomposition& a, const CircleDecomposition& b) {
    require_isotropy(a.k);
    require_isotropy(b.k);
    return {CirclePoint(a.p.value() + circle_apply(a.k, b.p).value()), psi_circle(a.k, b.p) * b.k};
}

} // namespace plc
