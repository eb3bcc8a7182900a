#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace plc {

using Elem = std::size_t;

/// Finite group given by its multiplication table: mul(a, b) = table[a*order + b].
/// The constructor checks closure, associativity, identity and inverses and
/// raises NotAGroup on any failure.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<Elem>> table, std::vector<std::string> names);

    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] Elem identity() const noexcept { return identity_; }
    [[nodiscard]] Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
    [[nodiscard]] Elem inv(Elem a) const { return inverse_[a]; }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
    [[nodiscard]] const std::string& name(Elem a) const { return names_[a]; }
    /// Index of the element with this label; raises ParseError if absent.
    [[nodiscard]] Elem find(const std::string& name) const;
    [[nodiscard]] std::vector<std::vector<Elem>> table() const;

    friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Elem> table_;
    std::vector<std::string> names_;
    Elem identity_ = 0;
    std::vector<Elem> inverse_;
};

/// Sorted, duplicate-free element list.
using ElemSet = std::vector<Elem>;

ElemSet make_set(std::vector<Elem> elems);
bool contains(const ElemSet& s, Elem e);
bool is_subgroup(const FiniteGroup& g, const ElemSet& s);
/// {a·b : a ∈ A, b ∈ B}
ElemSet product_set(const FiniteGroup& g, const ElemSet& a, const ElemSet& b);
ElemSet inverse_set(const FiniteGroup& g, const ElemSet& s);
/// Subgroup generated by gens (closure under multiplication).
ElemSet generated_subgroup(const FiniteGroup& g, const ElemSet& gens);

/// The subgroup s as a standalone group; element i of the result is s[i].
FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElemSet& s);

/// True iff phi (indexed by elements of a) is a bijective homomorphism a → b.
bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Elem>& phi);

FiniteGroup trivial_group();
/// Z/n with elements named "0".."n-1".
FiniteGroup cyclic_group(std::size_t n);
/// Pairs (a, b) with index a*|K| + b, named "(a,b)".
FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k);
/// Permutations of {1..n} under composition (σ·τ)(i) = σ(τ(i)), named in
/// cycle notation ("()" for the identity, "(1 2 3)").
FiniteGroup symmetric_group(std::size_t n);

/// Cycle-notation label of a permutation given as images of 1..n (1-based values).
std::string cycle_notation(const std::vector<std::size_t>& images);

} // namespace plc
