#pragma once

#include <utility>
#include <vector>

#include "plc/finite_group.hpp"
#include "plc/groups.hpp"

namespace plc {

using IndexMatrix = std::vector<std::vector<Elem>>;

/// Internal Zappa–Szép factorization G = HK with H ∩ K = {1}.
///
/// H and K hold element indices of `group`. alpha and beta are |K|×|H|
/// matrices of group indices defined by  K[i]·H[j] = alpha[i][j]·beta[i][j]
/// with alpha[i][j] ∈ H and beta[i][j] ∈ K. `factor[g]` is the unique pair
/// (h, k) with g = h·k.
struct ZSData {
    FiniteGroup group;
    ElemSet H;
    ElemSet K;
    IndexMatrix alpha;
    IndexMatrix beta;
    std::vector<std::pair<Elem, Elem>> factor;
};

/// Checks the factorization and extracts alpha, beta by exhaustive search.
/// Raises NotSubgroup or NotExactFactorization.
ZSData zs_internal_decompose(const FiniteGroup& g, const ElemSet& h_mask, const ElemSet& k_mask);

/// Inputs of the external construction: two groups and the action maps, with
/// alpha[k][h] an index into H and beta[k][h] an index into K.
struct ExternalZSInput {
    FiniteGroup H;
    FiniteGroup K;
    IndexMatrix alpha;
    IndexMatrix beta;
};

/// Recasts internal data as external inputs in local indices.
ExternalZSInput external_input(const ZSData& zs);

/// H×K with (h1,k1)(h2,k2) = (h1·α(k1,h2), β(k1,h2)·k2). The element (h, k)
/// has index h·|K| + k.
struct ExternalProduct {
    FiniteGroup group;
    std::size_t h_order = 0;
    std::size_t k_order = 0;

    [[nodiscard]] Elem index(Elem h, Elem k) const { return h * k_order + k; }
    [[nodiscard]] std::pair<Elem, Elem> split(Elem e) const { return {e / k_order, e % k_order}; }
};

/// Builds the external product. Raises NotAGroup when the operation fails the
/// group axioms (or the inverse formula) and InjectionNotHom when either
/// canonical injection is not a homomorphism.
ExternalProduct zs_external_build(const ExternalZSInput& in);

/// Map (h, k) ↦ h·k from the external product built from `zs` into zs.group.
std::vector<Elem> external_to_internal(const ZSData& zs, const ExternalProduct& ext);

// ---- Concrete products: translations/rotations times isotropy of 0 ----

/// g = τ_r ∘ k with k(0) = 0.
struct LineDecomposition {
    Rat r;
    LineHomeoZ k;
    friend bool operator==(const LineDecomposition&, const LineDecomposition&) = default;
};

/// f = ρ_p ∘ k with k fixing the basepoint 0 ∈ R/Z.
struct CircleDecomposition {
    CirclePoint p;
    CircleHomeo k;
    friend bool operator==(const CircleDecomposition&, const CircleDecomposition&) = default;
};

/// Raises NotInIsotropy unless k(0) = 0.
LineHomeoZ omega_line(const Rat& r, const LineHomeoZ& k);
LineDecomposition omega_line_inv(const LineHomeoZ& g);
CircleHomeo omega_circle(const CirclePoint& p, const CircleHomeo& k);
CircleDecomposition omega_circle_inv(const CircleHomeo& f);

/// τ_{k(r)}⁻¹ ∘ k ∘ τ_r; fixes 0 again.
LineHomeoZ psi_line(const LineHomeoZ& k, const Rat& r);
/// ρ_{k(p)}⁻¹ ∘ k ∘ ρ_p.
CircleHomeo psi_circle(const CircleHomeo& k, const CirclePoint& p);

/// (r1, k1)·(r2, k2) = (r1 + k1(r2), ψ(k1, r2) ∘ k2).
LineDecomposition zs_product(const LineDecomposition& a, const LineDecomposition& b);
CircleDecomposition zs_product(const CircleDecomposition& a, const CircleDecomposition& b);

} // namespace plc
