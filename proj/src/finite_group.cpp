#include "plc/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "plc/error.hpp"

namespace plc {

FiniteGroup::FiniteGroup(std::vector<std::vector<Elem>> table, std::vector<std::string> names)
    : order_(table.size()), names_(std::move(names)) {
    const std::size_t n = order_;
    if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
    if (names_.empty()) {
        names_.resize(n);
        for (std::size_t i = 0; i < n; ++i) names_[i] = std::to_string(i);
    }
    if (names_.size() != n) throw Error(ErrorKind::NotAGroup, "names and table sizes differ");
    table_.reserve(n * n);
    for (const auto& row : table) {
        if (row.size() != n) throw Error(ErrorKind::NotAGroup, "table is not square");
        for (Elem e : row) {
            if (e >= n) throw Error(ErrorKind::NotAGroup, "table entry out of range");
            table_.push_back(e);
        }
    }

    bool found = false;
    for (Elem e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (Elem a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::NotAGroup, "no identity element");

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            const Elem ab = mul(a, b);
            for (Elem c = 0; c < n; ++c)
                if (mul(ab, c) != mul(a, mul(b, c)))
                    throw Error(ErrorKind::NotAGroup, "associativity fails at (" + names_[a] + ", " +
                                                          names_[b] + ", " + names_[c] + ")");
        }

    inverse_.assign(n, n);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] == n) throw Error(ErrorKind::NotAGroup, "no inverse for " + names_[a]);
    }
}

Elem FiniteGroup::find(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error(ErrorKind::ParseError, "no element named '" + name + "'");
    return static_cast<Elem>(it - names_.begin());
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
    std::vector<std::vector<Elem>> rows(order_);
    for (std::size_t i = 0; i < order_; ++i)
        rows[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                       table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
    return rows;
}

ElemSet make_set(std::vector<Elem> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

bool contains(const ElemSet& s, Elem e) { return std::binary_search(s.begin(), s.end(), e); }

bool is_subgroup(const FiniteGroup& g, const ElemSet& s) {
    if (!contains(s, g.identity())) return false;
    for (Elem a : s) {
        if (a >= g.order()) return false;
        for (Elem b : s)
            if (!contains(s, g.mul(a, b))) return false;
    }
    return true;
}

ElemSet product_set(const FiniteGroup& g, const ElemSet& a, const ElemSet& b) {
    std::vector<Elem> out;
    out.reserve(a.size() * b.size());
    for (Elem x : a)
        for (Elem y : b) out.push_back(g.mul(x, y));
    return make_set(std::move(out));
}

ElemSet inverse_set(const FiniteGroup& g, const ElemSet& s) {
    std::vector<Elem> out;
    out.reserve(s.size());
    for (Elem x : s) out.push_back(g.inv(x));
    return make_set(std::move(out));
}

ElemSet generated_subgroup(const FiniteGroup& g, const ElemSet& gens) {
    std::vector<bool> seen(g.order(), false);
    std::vector<Elem> frontier{g.identity()};
    seen[g.identity()] = true;
    while (!frontier.empty()) {
        const Elem x = frontier.back();
        frontier.pop_back();
        for (Elem s : gens) {
            const Elem y = g.mul(x, s);
            if (!seen[y]) {
                seen[y] = true;
                frontier.push_back(y);
            }
        }
    }
    ElemSet out;
    for (Elem e = 0; e < g.order(); ++e)
        if (seen[e]) out.push_back(e);
    return out;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElemSet& s) {
    if (!is_subgroup(g, s)) throw Error(ErrorKind::NotSubgroup, "element set is not a subgroup");
    std::map<Elem, Elem> local;
    for (std::size_t i = 0; i < s.size(); ++i) local[s[i]] = i;
    std::vector<std::vector<Elem>> table(s.size(), std::vector<Elem>(s.size()));
    std::vector<std::string> names;
    names.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        names.push_back(g.name(s[i]));
        for (std::size_t j = 0; j < s.size(); ++j) table[i][j] = local.at(g.mul(s[i], s[j]));
    }
    return FiniteGroup(std::move(table), std::move(names));
}

bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Elem>& phi) {
    if (a.order() != b.order() || phi.size() != a.order()) return false;
    std::vector<bool> hit(b.order(), false);
    for (Elem x : phi) {
        if (x >= b.order() || hit[x]) return false;
        hit[x] = true;
    }
    for (Elem x = 0; x < a.order(); ++x)
        for (Elem y = 0; y < a.order(); ++y)
            if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
    return true;
}

FiniteGroup trivial_group() { return FiniteGroup({{0}}, {"e"}); }

FiniteGroup cyclic_group(std::size_t n) {
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return FiniteGroup(std::move(table), {});
}

FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k) {
    const std::size_t nh = h.order();
    const std::size_t nk = k.order();
    const std::size_t n = nh * nk;
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    std::vector<std::string> names(n);
    for (Elem a = 0; a < n; ++a) {
        names[a] = "(" + h.name(a / nk) + "," + k.name(a % nk) + ")";
        for (Elem b = 0; b < n; ++b)
            table[a][b] = h.mul(a / nk, b / nk) * nk + k.mul(a % nk, b % nk);
    }
    return FiniteGroup(std::move(table), std::move(names));
}

std::string cycle_notation(const std::vector<std::size_t>& images) {
    const std::size_t n = images.size();
    std::vector<bool> done(n, false);
    std::string out;
    for (std::size_t start = 0; start < n; ++start) {
        if (done[start] || images[start] == start + 1) continue;
        out += "(";
        std::size_t i = start;
        bool first = true;
        while (!done[i]) {
            done[i] = true;
            if (!first) out += " ";
            out += std::to_string(i + 1);
            first = false;
            i = images[i] - 1;
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

FiniteGroup symmetric_group(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 1);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<std::size_t>, Elem> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

    const std::size_t order = perms.size();
    std::vector<std::vector<Elem>> table(order, std::vector<Elem>(order));
    std::vector<std::string> names(order);
    std::vector<std::size_t> composed(n);
    for (std::size_t a = 0; a < order; ++a) {
        names[a] = cycle_notation(perms[a]);
        for (std::size_t b = 0; b < order; ++b) {
            for (std::size_t i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i] - 1];
            table[a][b] = index.at(composed);
        }
    }
    return FiniteGroup(std::move(table), std::move(names));
}

} // namespace plc
