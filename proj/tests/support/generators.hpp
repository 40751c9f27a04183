#pragma once

// Test-only helpers: seeded random structures and brute-force oracles that
// share no code path with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/poset.hpp"

namespace latcon::testing {

// Random poset: each pair i < j is related with probability `density`,
// then closed transitively (natural labelling, then shuffled).
inline Poset random_poset(std::mt19937& rng, int n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) pairs.emplace_back(i, j);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [a, b] : pairs) {
        a = perm[a];
        b = perm[b];
    }
    return Poset::from_covers(n, pairs);
}

// Naive relation matrix of a poset, rebuilt from leq queries.
inline std::vector<std::vector<bool>> relation_matrix(const Poset& p) {
    std::vector<std::vector<bool>> m(p.size(), std::vector<bool>(p.size()));
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) m[i][j] = p.leq(i, j);
    return m;
}

// Every injective map, checked pair by pair.
inline bool embeds_brute_force(const Poset& k, const Poset& l) {
    if (k.size() > l.size()) return false;
    std::vector<int> map(static_cast<std::size_t>(k.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(l.size()), false);
    auto go = [&](auto&& self, int i) -> bool {
        if (i == k.size()) {
            for (int a = 0; a < k.size(); ++a)
                for (int b = 0; b < k.size(); ++b)
                    if (k.leq(a, b) != l.leq(map[a], map[b])) return false;
            return true;
        }
        for (int y = 0; y < l.size(); ++y) {
            if (used[y]) continue;
            used[y] = true;
            map[i] = y;
            const bool ok = self(self, i + 1);
            used[y] = false;
            if (ok) return true;
        }
        return false;
    };
    return go(go, 0);
}

// Order ideals by testing every subset.
inline std::uint64_t downsets_brute_force(const Poset& p) {
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << p.size();
    for (std::uint64_t s = 0; s < total; ++s) {
        bool ok = true;
        for (int x = 0; x < p.size() && ok; ++x) {
            if (!((s >> x) & 1U)) continue;
            for (int y = 0; y < p.size() && ok; ++y)
                if (p.leq(y, x) && !((s >> y) & 1U)) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

// Hereditary subsets of a quasiorder by testing every subset.
inline std::uint64_t hereditary_brute_force(const std::vector<std::vector<bool>>& rel) {
    const int n = static_cast<int>(rel.size());
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (!((s >> x) & 1U)) continue;
            for (int y = 0; y < n && ok; ++y)
                if (rel[y][x] && !((s >> y) & 1U)) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

// Number of permutations that preserve the order.
inline int automorphism_count(const Poset& p) {
    std::vector<int> perm(static_cast<std::size_t>(p.size()));
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
        bool ok = true;
        for (int a = 0; a < p.size() && ok; ++a)
            for (int b = 0; b < p.size() && ok; ++b)
                if (p.leq(a, b) != p.leq(perm[a], perm[b])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace latcon::testing

namespace latcon::testing {

// Every compatible partition as a block-label vector, by walking all
// restricted growth strings and testing compatibility at the end.
inline std::vector<std::vector<int>> congruences_brute_force(const Lattice& l) {
    const int n = l.size();
    std::vector<std::vector<int>> out;
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    auto compatible = [&] {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (label[x] != label[y]) continue;
                for (int z = 0; z < n; ++z)
                    if (label[l.join(x, z)] != label[l.join(y, z)] || label[l.meet(x, z)] != label[l.meet(y, z)])
                        return false;
            }
        return true;
    };
    auto go = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            if (compatible()) out.push_back(label);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            label[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    go(go, 0, 0);
    return out;
}

}  // namespace latcon::testing
