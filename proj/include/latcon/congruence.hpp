#pragma once

// Lattice congruences. Two independent routes to |Con(L)|:
//  - the join-irreducible quasiorder: p <| q iff con(p_*, p) <= con(q_*, q);
//    congruences correspond to hereditary subsets, so |Con(L)| is the
//    number of order ideals of the quotient poset Qu(L);
//  - brute force over set partitions (`con_count_oracle`).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "latcon/error.hpp"
#include "latcon/lattice.hpp"
#include "latcon/poset.hpp"

namespace latcon {

// Partition of 0..n-1; blocks numbered in order of their least member.
class Congruence {
public:
    Congruence() = default;

    // Any labelling of the elements; equal labels mean the same block.
    static Congruence from_labels(const std::vector<int>& labels) {
        Congruence c;
        std::vector<std::pair<int, int>> seen;
        c.block_of_.reserve(labels.size());
        for (int label : labels) {
            auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == label; });
            if (it == seen.end()) {
                seen.emplace_back(label, static_cast<int>(seen.size()));
                c.block_of_.push_back(seen.back().second);
            } else {
                c.block_of_.push_back(it->second);
            }
        }
        c.blocks_ = static_cast<int>(seen.size());
        return c;
    }

    static Congruence identity(int n) {
        std::vector<int> labels(static_cast<std::size_t>(n));
        std::iota(labels.begin(), labels.end(), 0);
        return from_labels(labels);
    }
    static Congruence full(int n) { return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int size() const { return static_cast<int>(block_of_.size()); }
    int block_count() const { return blocks_; }
    int block(int x) const { return block_of_[x]; }
    const std::vector<int>& block_of() const { return block_of_; }
    bool related(int a, int b) const { return block_of_[a] == block_of_[b]; }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
        for (int x = 0; x < size(); ++x) out[block_of_[x]].push_back(x);
        return out;
    }

    // Every block of *this lies inside a block of `other`.
    bool refines(const Congruence& other) const {
        std::vector<int> rep(static_cast<std::size_t>(blocks_), -1);
        for (int x = 0; x < size(); ++x) {
            int& r = rep[block_of_[x]];
            if (r < 0)
                r = x;
            else if (!other.related(r, x))
                return false;
        }
        return true;
    }

    friend bool operator==(const Congruence&, const Congruence&) = default;
    friend auto operator<=>(const Congruence& a, const Congruence& b) { return a.block_of_ <=> b.block_of_; }

private:
    std::vector<int> block_of_;
    int blocks_ = 0;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        return true;
    }
    Congruence to_congruence() {
        std::vector<int> labels(parent_.size());
        for (std::size_t i = 0; i < parent_.size(); ++i) labels[i] = find(static_cast<int>(i));
        return Congruence::from_labels(labels);
    }

private:
    std::vector<int> parent_;
};

// Least congruence containing the given pairs. Every successful union is
// queued; translating queued pairs by joins and meets with every z closes
// the equivalence they span under both operations.
inline Congruence generate_congruence(const Lattice& l, const std::vector<std::pair<int, int>>& seeds) {
    const int n = l.size();
    UnionFind uf(n);
    std::vector<std::pair<int, int>> work;
    for (auto [a, b] : seeds)
        if (uf.unite(a, b)) work.emplace_back(a, b);
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (int z = 0; z < n; ++z) {
            const int jx = l.join(x, z), jy = l.join(y, z);
            if (uf.unite(jx, jy)) work.emplace_back(jx, jy);
            const int mx = l.meet(x, z), my = l.meet(y, z);
            if (uf.unite(mx, my)) work.emplace_back(mx, my);
        }
    }
    return uf.to_congruence();
}

}  // namespace detail

inline bool is_congruence(const Lattice& l, const Congruence& c) {
    const int n = l.size();
    if (c.size() != n) return false;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (!c.related(x, y)) continue;
            for (int z = 0; z < n; ++z)
                if (!c.related(l.join(x, z), l.join(y, z)) || !c.related(l.meet(x, z), l.meet(y, z)))
                    return false;
        }
    return true;
}

inline Congruence principal_congruence(const Lattice& l, int a, int b) {
    return detail::generate_congruence(l, {{a, b}});
}

// Join in Con(L).
inline Congruence congruence_join(const Lattice& l, const Congruence& c1, const Congruence& c2) {
    std::vector<std::pair<int, int>> seeds;
    for (const Congruence* c : {&c1, &c2}) {
        for (const auto& block : c->blocks())
            for (std::size_t i = 1; i < block.size(); ++i) seeds.emplace_back(block[0], block[i]);
    }
    return detail::generate_congruence(l, seeds);
}

// ---------------------------------------------------------------------------

struct JirQuasiorder {
    std::vector<int> jir_list;                // ascending
    std::vector<Congruence> prime_congruence;  // con(p_*, p) per jir_list entry
    QuasiRelation rel;                        // rel[i] bit j: con(p_i*, p_i) <= con(p_j*, p_j)
    Poset qu_poset;                           // Jir(L) modulo mutual relatedness
    std::vector<int> block_of;                // jir_list index -> qu_poset element
};

inline JirQuasiorder jir_quasiorder(const Lattice& l) {
    const IrreducibleSets irr = irreducibles(l);
    JirQuasiorder q;
    q.jir_list = elements_of(irr.jir);
    for (int p : q.jir_list) q.prime_congruence.push_back(principal_congruence(l, irr.lower_cover[p], p));
    const int m = static_cast<int>(q.jir_list.size());
    q.rel.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (q.prime_congruence[i].refines(q.prime_congruence[j])) q.rel[i] |= bits::bit(j);
    QuasiQuotient quotient = quotient_of_quasiorder(q.rel);
    q.qu_poset = std::move(quotient.poset);
    q.block_of = std::move(quotient.class_of);
    return q;
}

inline std::uint64_t con_count(const Lattice& l) { return count_downsets(jir_quasiorder(l).qu_poset); }

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

// One congruence per order ideal of Qu(L), sorted by block labels.
inline std::vector<Congruence> con_enumerate(const Lattice& l, std::uint64_t cap = kDefaultEnumerationCap) {
    const JirQuasiorder q = jir_quasiorder(l);
    const std::uint64_t total = count_downsets(q.qu_poset);
    if (total > cap)
        throw CapExceededError(std::to_string(total) + " congruences exceed the cap of " + std::to_string(cap));
    const IrreducibleSets irr = irreducibles(l);
    const Poset& qu = q.qu_poset;

    std::vector<Mask> ideals;
    // Split on the least remaining class: leave it out (and all above) or
    // take it (and all below).
    auto walk = [&](auto&& self, Mask remaining, Mask taken) -> void {
        if (remaining == 0) {
            ideals.push_back(taken);
            return;
        }
        const int x = bits::lowest(remaining);
        self(self, remaining & ~qu.up(x), taken);
        self(self, remaining & ~qu.down(x), taken | (qu.down(x) & remaining));
    };
    walk(walk, qu.all(), 0);

    std::vector<Congruence> out;
    out.reserve(ideals.size());
    for (Mask ideal : ideals) {
        std::vector<std::pair<int, int>> seeds;
        for (std::size_t i = 0; i < q.jir_list.size(); ++i)
            if (bits::has(ideal, q.block_of[i])) {
                const int p = q.jir_list[i];
                seeds.emplace_back(irr.lower_cover[p], p);
            }
        out.push_back(detail::generate_congruence(l, seeds));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

inline constexpr int kOracleMaxSize = 10;

// Walks restricted growth strings; a compatibility constraint
// "x ~ y implies u ~ v" is checked as soon as its last element is placed.
inline std::uint64_t con_count_oracle(const Lattice& l) {
    const int n = l.size();
    if (n > kOracleMaxSize)
        throw SizeError("partition oracle limited to " + std::to_string(kOracleMaxSize) + " elements");
    struct Constraint {
        int x, y, u, v;
    };
    std::vector<std::vector<Constraint>> by_last(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (auto [u, v] : {std::pair{l.join(x, z), l.join(y, z)}, std::pair{l.meet(x, z), l.meet(y, z)}}) {
                    if (u == v) continue;
                    by_last[std::max({y, u, v})].push_back({x, y, std::min(u, v), std::max(u, v)});
                }
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    auto place = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            ++count;
            return;
        }
        for (int b = 0; b <= used && b < n; ++b) {
            label[i] = b;
            bool ok = true;
            for (const Constraint& c : by_last[i])
                if (label[c.x] == label[c.y] && label[c.u] != label[c.v]) {
                    ok = false;
                    break;
                }
            if (ok) self(self, i + 1, std::max(used, b + 1));
        }
    };
    place(place, 0, 0);
    return count;
}

// ---------------------------------------------------------------------------
// Many/few congruences
// ---------------------------------------------------------------------------

// count > 2^(n-5), exactly; for n < 5 the threshold is 1/2^(5-n) < 1.
inline bool exceeds_threshold(std::uint64_t count, int n) {
    if (n < 5) return count >= 1;
    if (n - 5 >= 64) return false;
    return count > (std::uint64_t{1} << (n - 5));
}

inline bool has_many_congruences(const Lattice& l) { return exceeds_threshold(con_count(l), l.size()); }

struct FewCriteria {
    int jred_count = 0;
    int mred_count = 0;
    bool jred_ge4 = false;
    bool mred_ge4 = false;
    // Distinct join-irreducibles with equal prime-quotient congruences.
    std::optional<std::pair<int, int>> jir_collision;

    // The sufficient conditions for few congruences.
    bool forces_few() const { return jred_ge4 || mred_ge4 || (jred_count == 3 && jir_collision.has_value()); }
};

inline FewCriteria few_criteria(const Lattice& l) {
    const IrreducibleSets irr = irreducibles(l);
    FewCriteria f;
    f.jred_count = bits::count(irr.jred);
    f.mred_count = bits::count(irr.mred);
    f.jred_ge4 = f.jred_count >= 4;
    f.mred_ge4 = f.mred_count >= 4;
    const JirQuasiorder q = jir_quasiorder(l);
    for (std::size_t i = 0; i < q.jir_list.size() && !f.jir_collision; ++i)
        for (std::size_t j = i + 1; j < q.jir_list.size(); ++j)
            if (q.block_of[i] == q.block_of[j]) {
                f.jir_collision = std::pair{q.jir_list[i], q.jir_list[j]};
                break;
            }
    return f;
}

}  // namespace latcon
