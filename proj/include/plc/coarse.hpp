#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plc/finite_group.hpp"
#include "plc/groups.hpp"
#include "plc/zappa_szep.hpp"

namespace plc {

// ---- Word metrics on finite groups ----

/// Word lengths ρ_S(g, 1) from breadth-first search over S ∪ S⁻¹ ∪ {1}.
/// Elements not reached are reported as std::nullopt and `generating` is false.
struct WordMetricTable {
    ElemSet gens;
    std::vector<std::optional<std::size_t>> dist;
    bool generating = true;

    [[nodiscard]] std::size_t at(Elem e) const;
};

WordMetricTable word_metric_bfs(const FiniteGroup& g, const ElemSet& s);

enum class MaxFormulaStatus { Holds, Violated, HypothesisFails };

struct MaxFormulaRow {
    Elem element;
    Elem h;
    Elem k;
    std::optional<std::size_t> rho_st;
    std::optional<std::size_t> rho_s;
    std::optional<std::size_t> rho_t;
    bool ok;
};

struct MaxFormulaReport {
    MaxFormulaStatus status = MaxFormulaStatus::Holds;
    std::string reason; // set when the hypothesis fails
    ElemSet st;
    ElemSet ts;
    std::vector<MaxFormulaRow> rows;
    bool h_isometric = true; // ρ_ST(h,1) = ρ_S(h,1) on H
    bool k_isometric = true; // ρ_ST(k,1) = ρ_T(k,1) on K
};

/// Checks ρ_ST(hk, 1) = max{ρ_S(h,1), ρ_T(k,1)} for every g = hk, provided S ⊂ H
/// and T ⊂ K are symmetric, contain 1 and generate, and ST = TS. When the
/// hypothesis fails nothing is asserted and the status says so.
MaxFormulaReport zs_max_formula_check(const ZSData& zs, const ElemSet& s, const ElemSet& t);

// ---- Homotopy to the identity and telescoping certificates ----

/// F(f, r)(x) = (1-r)·f(x) + r·x. Raises OutOfRange unless r ∈ [0,1].
IntervalHomeo homotopy_F(const IntervalHomeo& f, const Rat& r);

/// d*(F(f,r), F(f,s)) computed from the two images.
Rat homotopy_dstar(const IntervalHomeo& f, const Rat& r, const Rat& s);

/// target = factors[0] ∘ factors[1] ∘ … ∘ factors[n-1] with every
/// d*(factor, id) ≤ delta.
template <class Map>
struct FactorizationCert {
    Map target;
    Rat delta;
    std::int64_t n = 1;
    std::vector<Map> factors;
    std::vector<Rat> per_factor_dist;
};

using IntervalCert = FactorizationCert<IntervalHomeo>;
using IsotropyCert = FactorizationCert<LineHomeoZ>;

/// Smallest admissible n: max(1, ceil(d*(f, id) / delta)).
std::int64_t factor_count(const Rat& total, const Rat& delta);

/// Factors f as ∏ F(f,(i-1)/n) ∘ F(f,i/n)⁻¹. Raises OutOfRange unless delta > 0.
IntervalCert cb_factorize(const IntervalHomeo& f, const Rat& delta);

/// Same certificate transported to the isotropy subgroup {k : k(0) = 0} of
/// the line group. Raises NotInIsotropy.
IsotropyCert cb_factorize_isotropy(const LineHomeoZ& k, const Rat& delta);

/// Recomputes every certificate invariant from scratch.
bool verify(const IntervalCert& cert);
bool verify(const IsotropyCert& cert);

// ---- Quasi-isometry Z → line group ----

inline constexpr long kQiMultiplicative = 1;
inline constexpr long kQiAdditive = 6;
inline const Rat kDensityBound{3};
inline const Rat kCircleDiameterBound{5, 2};

struct QIWitness {
    LineHomeoZ g;
    Rat r;               // g(0)
    std::int64_t nearest = 0;
    Rat density_bound;   // d_sum(g, τ_r)

    [[nodiscard]] bool ok() const { return density_bound <= kDensityBound; }
};

QIWitness qi_witness(const LineHomeoZ& g);

struct QICheck {
    Rat translation_gap; // |f(0) - g(0)|
    Rat distance;        // d_sum(f, g)
    bool lower_ok = false;
    bool upper_ok = false;
    long multiplicative = kQiMultiplicative;
    long additive = kQiAdditive;
};

/// |f(0)-g(0)| ≤ d_sum(f,g) ≤ |f(0)-g(0)| + 6.
QICheck qi_inequality_check(const LineHomeoZ& f, const LineHomeoZ& g);

struct CircleDiameter {
    Rat distance;
    bool ok = false; // distance ≤ 5/2
};

CircleDiameter circle_diameter_check(const CircleHomeo& f, const CircleHomeo& g);

} // namespace plc
