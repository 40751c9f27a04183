#pragma once

// Isomorph-free generation of all n-element lattices.
//
// Removing an atom a != 1 from a lattice leaves a lattice, so every lattice
// with n >= 3 elements arises from an (n-1)-element one by inserting a new
// atom below a nonempty antichain U of nonzero elements. The insertion is a
// lattice iff for every x outside F = up(U) and x != 0, F & up(x) has a
// least element (that element is the join of x with the new atom).
// Duplicates are removed by canonical form.

#include <map>
#include <string>
#include <vector>

#include "latcon/error.hpp"
#include "latcon/lattice.hpp"
#include "latcon/poset.hpp"

namespace latcon {

inline constexpr int kDefaultMaxEnumeration = 9;
inline constexpr int kHardMaxEnumeration = 12;

// Level n holds one canonically labelled lattice per isomorphism class,
// ordered by canonical form. Levels are built on demand and cached.
class LatticeGenerator {
public:
    explicit LatticeGenerator(int max_n = kDefaultMaxEnumeration) : max_n_(max_n) {
        if (max_n < 1 || max_n > kHardMaxEnumeration)
            throw SizeError("enumeration limit must be within 1.." + std::to_string(kHardMaxEnumeration));
    }

    const std::vector<Lattice>& level(int n) {
        if (n < 1 || n > max_n_)
            throw SizeError("n=" + std::to_string(n) + " outside enumeration range 1.." + std::to_string(max_n_));
        while (static_cast<int>(levels_.size()) < n) build_next();
        return levels_[static_cast<std::size_t>(n - 1)];
    }

    int max_n() const { return max_n_; }

private:
    void build_next() {
        const int n = static_cast<int>(levels_.size()) + 1;
        std::map<std::string, Poset> found;
        auto add = [&](const Poset& p) {
            const Poset c = canonical_poset(p);
            found.emplace(canonical_form(c), c);
        };
        if (n <= 2) {
            add(make_chain_poset(n));
        } else {
            for (const Lattice& parent : levels_.back()) extend(parent, add);
        }
        std::vector<Lattice> level;
        level.reserve(found.size());
        for (const auto& [form, p] : found) level.push_back(validate_lattice(p));
        levels_.push_back(std::move(level));
    }

    template <class Sink>
    static void extend(const Lattice& m, Sink&& sink) {
        const Poset& p = m.poset();
        const int size = m.size();
        const Mask nonzero = p.all() & ~bits::bit(m.bottom());

        auto admissible = [&](Mask filter) {
            bool ok = true;
            bits::for_each(nonzero & ~filter, [&](int x) {
                if (!ok) return;
                const Mask above = filter & p.up(x);
                ok = bits::has(above, m.meet_of(above));
            });
            return ok;
        };

        auto emit = [&](Mask filter) {
            std::vector<Mask> up(static_cast<std::size_t>(size + 1));
            for (int i = 0; i < size; ++i) up[i] = p.up(i);
            up[m.bottom()] |= bits::bit(size);
            up[size] = filter | bits::bit(size);
            sink(Poset::from_up_sets(std::move(up)));
        };

        // Antichains of nonzero elements, grown in increasing index order.
        auto walk = [&](auto&& self, int from, Mask allowed, Mask filter) -> void {
            for (int x = from; x < size; ++x) {
                if (!bits::has(allowed, x)) continue;
                const Mask f = filter | p.up(x);
                if (admissible(f)) emit(f);
                self(self, x + 1, allowed & ~(p.up(x) | p.down(x)), f);
            }
        };
        walk(walk, 0, nonzero, 0);
    }

    int max_n_;
    std::vector<std::vector<Lattice>> levels_;
};

inline std::vector<Lattice> enumerate_lattices(int n, int max_n = kDefaultMaxEnumeration) {
    LatticeGenerator gen(max_n);
    return gen.level(n);
}

inline constexpr int kOracleMaxEnumeration = 7;

// Independent count: every naturally labelled order relation on n points
// (i <= j only if i <= j as integers), kept when it is a lattice, then
// deduplicated by canonical form.
inline std::size_t enumerate_lattices_oracle(int n) {
    if (n < 1 || n > kOracleMaxEnumeration)
        throw SizeError("oracle enumeration limited to 1.." + std::to_string(kOracleMaxEnumeration));
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::map<std::string, int> classes;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    std::vector<Mask> up(static_cast<std::size_t>(n));
    for (std::uint64_t code = 0; code < total; ++code) {
        for (int i = 0; i < n; ++i) up[i] = bits::bit(i);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((code >> s) & 1U) up[slots[s].first] |= bits::bit(slots[s].second);
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            bits::for_each(up[i], [&](int j) { transitive = transitive && (up[j] & ~up[i]) == 0; });
        if (!transitive) continue;
        const Poset p = Poset::from_up_sets(up);
        try {
            validate_lattice(p);
        } catch (const NotLatticeError&) {
            continue;
        }
        classes.emplace(canonical_form(p), 0);
    }
    return classes.size();
}

}  // namespace latcon
