#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latcon/error.hpp"
#include "latcon/poset.hpp"

namespace latcon {

class Lattice;
Lattice validate_lattice(const Poset& p);

// A poset with all binary joins and meets, tabulated.
class Lattice {
public:
    // The one-element lattice.
    Lattice() : Lattice(validate_lattice(Poset::from_covers(1, {}))) {}

    const Poset& poset() const { return poset_; }
    int size() const { return poset_.size(); }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    bool leq(int a, int b) const { return poset_.leq(a, b); }
    int join(int a, int b) const { return join_[index(a, b)]; }
    int meet(int a, int b) const { return meet_[index(a, b)]; }

    // Join/meet of every element in a nonempty mask.
    int join_of(Mask m) const {
        int r = bits::lowest(m);
        bits::for_each(m, [&](int x) { r = join(r, x); });
        return r;
    }
    int meet_of(Mask m) const {
        int r = bits::lowest(m);
        bits::for_each(m, [&](int x) { r = meet(r, x); });
        return r;
    }

    Lattice dual() const {
        Lattice d = *this;
        d.poset_ = poset_.dual();
        std::swap(d.join_, d.meet_);
        std::swap(d.bottom_, d.top_);
        return d;
    }

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.poset_ == b.poset_; }

private:
    friend Lattice validate_lattice(const Poset& p);
    struct Unfilled {};
    explicit Lattice(Unfilled) {}

    std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(b);
    }

    Poset poset_;
    std::vector<int> join_, meet_;
    int bottom_ = 0, top_ = 0;
};

namespace detail {

// Least element of `m` w.r.t. the order whose inclusive up-sets are given
// by `up`; -1 when `m` has no least element.
template <class UpFn>
int least_of(Mask m, UpFn&& up) {
    int found = -1;
    bits::for_each(m, [&](int u) {
        if (found < 0 && (m & ~up(u)) == 0) found = u;
    });
    return found;
}

}  // namespace detail

// Fails with the first pair (x <= y in index order) lacking a join or meet.
inline Lattice validate_lattice(const Poset& p) {
    const int n = p.size();
    if (n == 0) throw NotLatticeError();
    Lattice l{Lattice::Unfilled{}};
    l.poset_ = p;
    l.join_.assign(static_cast<std::size_t>(n * n), -1);
    l.meet_.assign(static_cast<std::size_t>(n * n), -1);
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            const int j = detail::least_of(p.up(x) & p.up(y), [&](int u) { return p.up(u); });
            if (j < 0) throw NotLatticeError(x, y, true);
            const int m = detail::least_of(p.down(x) & p.down(y), [&](int u) { return p.down(u); });
            if (m < 0) throw NotLatticeError(x, y, false);
            l.join_[l.index(x, y)] = l.join_[l.index(y, x)] = j;
            l.meet_[l.index(x, y)] = l.meet_[l.index(y, x)] = m;
        }
    }
    l.bottom_ = l.meet_of(p.all());
    l.top_ = l.join_of(p.all());
    return l;
}

inline Lattice dual(const Lattice& l) { return l.dual(); }

// ---------------------------------------------------------------------------
// Irreducible elements
// ---------------------------------------------------------------------------

struct IrreducibleSets {
    Mask jir = 0;   // nonzero join-irreducibles
    Mask mir = 0;   // nonunit meet-irreducibles
    Mask dir = 0;   // jir & mir
    Mask jred = 0;  // L - ({0} u jir)
    Mask mred = 0;  // L - ({1} u mir)
    std::vector<int> lower_cover;  // p -> p_* for p in jir, else -1
    std::vector<int> upper_cover;  // p -> p^* for p in mir, else -1
};

inline IrreducibleSets irreducibles(const Lattice& l) {
    const Poset& p = l.poset();
    IrreducibleSets s;
    s.lower_cover.assign(static_cast<std::size_t>(l.size()), -1);
    s.upper_cover.assign(static_cast<std::size_t>(l.size()), -1);
    for (int x = 0; x < l.size(); ++x) {
        if (x != l.bottom() && bits::count(p.lower_covers(x)) == 1) {
            s.jir |= bits::bit(x);
            s.lower_cover[x] = bits::lowest(p.lower_covers(x));
        }
        if (x != l.top() && bits::count(p.upper_covers(x)) == 1) {
            s.mir |= bits::bit(x);
            s.upper_cover[x] = bits::lowest(p.upper_covers(x));
        }
    }
    s.dir = s.jir & s.mir;
    s.jred = p.all() & ~(s.jir | bits::bit(l.bottom()));
    s.mred = p.all() & ~(s.mir | bits::bit(l.top()));
    return s;
}

inline std::vector<int> elements_of(Mask m) {
    std::vector<int> v;
    bits::for_each(m, [&](int x) { v.push_back(x); });
    return v;
}

// ---------------------------------------------------------------------------
// Transposed intervals
// ---------------------------------------------------------------------------

// [a,b] transposes up to [c,d]: b meet c = a and b join c = d.
inline bool transposes_up(const Lattice& l, int a, int b, int c, int d) {
    if (!l.leq(a, b) || !l.leq(c, d)) throw IntervalError("transposition needs a <= b and c <= d");
    return l.meet(b, c) == a && l.join(b, c) == d;
}

inline bool transposes_down(const Lattice& l, int a, int b, int c, int d) {
    return transposes_up(l, c, d, a, b);
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

inline Lattice make_chain(int n) {
    if (n < 1) throw SizeError("chain needs n >= 1");
    return validate_lattice(make_chain_poset(n));
}

// Subsets of a k-set; element index = subset bitmask.
inline Lattice make_boolean(int k) {
    if (k < 0 || (1 << k) > kMaxElements) throw SizeError("boolean lattice needs 0 <= k <= 6");
    const int n = 1 << k;
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < k; ++i)
            if ((s & (1 << i)) == 0) pairs.emplace_back(s, s | (1 << i));
    return validate_lattice(Poset::from_covers(n, pairs));
}

// Bottom 0, atoms 1..k, top k+1.
inline Lattice make_mk(int k) {
    if (k < 1 || k + 2 > kMaxElements) throw SizeError("M_k needs 1 <= k <= 62");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= k; ++a) {
        pairs.emplace_back(0, a);
        pairs.emplace_back(a, k + 1);
    }
    return validate_lattice(Poset::from_covers(k + 2, pairs));
}

// Every element of `lower` below every element of `upper`; `upper` indices
// are shifted by |lower|.
inline Lattice make_ordinal_sum(const Lattice& lower, const Lattice& upper) {
    const int n1 = lower.size();
    if (n1 + upper.size() > kMaxElements) throw SizeError("ordinal sum too large");
    std::vector<std::pair<int, int>> pairs = lower.poset().covers();
    for (auto [a, b] : upper.poset().covers()) pairs.emplace_back(a + n1, b + n1);
    pairs.emplace_back(lower.top(), upper.bottom() + n1);
    return validate_lattice(Poset::from_covers(n1 + upper.size(), pairs));
}

// Pair (i, j) has index i * |second| + j.
inline Lattice make_product(const Lattice& first, const Lattice& second) {
    const int n1 = first.size(), n2 = second.size();
    if (n1 * n2 > kMaxElements) throw SizeError("product too large");
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : first.poset().covers())
        for (int j = 0; j < n2; ++j) pairs.emplace_back(a * n2 + j, b * n2 + j);
    for (auto [a, b] : second.poset().covers())
        for (int i = 0; i < n1; ++i) pairs.emplace_back(i * n2 + a, i * n2 + b);
    return validate_lattice(Poset::from_covers(n1 * n2, pairs));
}

// The 8-element Boolean lattice with an (n-8)-element chain on top.
inline Lattice make_l_family(int n) {
    if (n < 8) throw SizeError("L(n) needs n >= 8");
    if (n == 8) return make_boolean(3);
    return make_ordinal_sum(make_boolean(3), make_chain(n - 8));
}

// N5 with 0 < a=1 < c=3 < 4 and 0 < b=2 < 4.
inline Lattice make_n5() {
    return validate_lattice(Poset::from_covers(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}));
}

// ---------------------------------------------------------------------------

inline bool is_distributive(const Lattice& l) {
    const int n = l.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
    return true;
}

}  // namespace latcon
