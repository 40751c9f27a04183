#pragma once

#include <unordered_set>
#include <vector>

#include "latcon/error.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

namespace detail {

// `s` is a sublattice of `l`; true if x can be removed with s - {x} still a
// sublattice: x is doubly irreducible in s, or an extreme element of s with
// a single neighbour inside s.
inline bool removable(const Lattice& l, Mask s, int x) {
    const Poset& p = l.poset();
    auto maximal = [&](Mask m) {
        Mask r = 0;
        bits::for_each(m, [&](int y) {
            if ((p.up(y) & m & ~bits::bit(y)) == 0) r |= bits::bit(y);
        });
        return r;
    };
    auto minimal = [&](Mask m) {
        Mask r = 0;
        bits::for_each(m, [&](int y) {
            if ((p.down(y) & m & ~bits::bit(y)) == 0) r |= bits::bit(y);
        });
        return r;
    };
    const Mask below = p.down(x) & s & ~bits::bit(x);
    const Mask above = p.up(x) & s & ~bits::bit(x);
    const int lower = below == 0 ? 0 : bits::count(maximal(below));
    const int upper = above == 0 ? 0 : bits::count(minimal(above));
    if (lower == 0) return upper == 1;
    if (upper == 0) return lower == 1;
    return lower == 1 && upper == 1;
}

inline bool closed_without(const Lattice& l, Mask s, int x) {
    const Mask rest = s & ~bits::bit(x);
    bool closed = true;
    bits::for_each(rest, [&](int a) {
        bits::for_each(rest, [&](int b) {
            if (l.join(a, b) == x || l.meet(a, b) == x) closed = false;
        });
    });
    return closed;
}

}  // namespace detail

// Greedily strips removable elements, lowest index first.
inline bool is_dismantlable(const Lattice& l) {
    Mask s = l.poset().all();
    while (bits::count(s) > 1) {
        int found = -1;
        bits::for_each(s, [&](int x) {
            if (found < 0 && detail::removable(l, s, x)) found = x;
        });
        if (found < 0) return false;
        s &= ~bits::bit(found);
    }
    return true;
}

inline constexpr int kExhaustiveDismantleMaxSize = 20;

// Searches all chains of sublattices L_1 < L_2 < ... < L_n = L directly.
inline bool is_dismantlable_exhaustive(const Lattice& l) {
    if (l.size() > kExhaustiveDismantleMaxSize)
        throw SizeError("exhaustive dismantling limited to " + std::to_string(kExhaustiveDismantleMaxSize));
    std::unordered_set<Mask> dead;
    auto search = [&](auto&& self, Mask s) -> bool {
        if (bits::count(s) <= 1) return true;
        if (dead.contains(s)) return false;
        bool ok = false;
        bits::for_each(s, [&](int x) {
            if (!ok && detail::closed_without(l, s, x)) ok = self(self, s & ~bits::bit(x));
        });
        if (!ok) dead.insert(s);
        return ok;
    };
    return search(search, l.poset().all());
}

}  // namespace latcon
