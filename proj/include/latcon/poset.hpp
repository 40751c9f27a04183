#pragma once

// Finite posets on {0..n-1} stored as bit rows, plus the order-theoretic
// primitives the rest of the library is built on: duality, canonical
// labelling for isomorph rejection, induced-subposet embedding search and
// order-ideal counting.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latcon/error.hpp"

namespace latcon {

using Mask = std::uint64_t;
inline constexpr int kMaxElements = 64;

namespace bits {

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr Mask all(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
inline int count(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline bool has(Mask m, int i) { return (m >> i) & 1U; }

template <class F>
void for_each(Mask m, F&& f) {
    while (m != 0) {
        f(lowest(m));
        m &= m - 1;
    }
}

}  // namespace bits

class Poset {
public:
    Poset() = default;

    // Reflexive-transitive closure of `pairs` (each (i, j) read as i <= j).
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& pairs) {
        check_size(n);
        std::vector<Mask> up(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) up[i] = bits::bit(i);
        for (auto [a, b] : pairs) {
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw IndexError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") out of range for n=" + std::to_string(n));
            up[a] |= bits::bit(b);
        }
        // Warshall over bit rows.
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (bits::has(up[i], k)) up[i] |= up[k];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (bits::has(up[i], j) && bits::has(up[j], i)) throw CycleError(i, j);
        return Poset(n, std::move(up));
    }

    // `up[i]` must already be a partial order given as up-sets.
    static Poset from_up_sets(std::vector<Mask> up) {
        const int n = static_cast<int>(up.size());
        check_size(n);
        for (int i = 0; i < n; ++i) {
            if (!bits::has(up[i], i)) throw NotQuasiorderError("relation is not reflexive");
            bool transitive = true;
            bits::for_each(up[i], [&](int j) { transitive = transitive && (up[j] & ~up[i]) == 0; });
            if (!transitive) throw NotQuasiorderError("relation is not transitive");
            for (int j = i + 1; j < n; ++j)
                if (bits::has(up[i], j) && bits::has(up[j], i)) throw CycleError(i, j);
        }
        return Poset(n, std::move(up));
    }

    int size() const { return n_; }
    Mask all() const { return bits::all(n_); }

    bool leq(int i, int j) const { return bits::has(up_[i], j); }
    bool lt(int i, int j) const { return i != j && leq(i, j); }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

    // Inclusive up-set and down-set.
    Mask up(int i) const { return up_[i]; }
    Mask down(int i) const { return down_[i]; }
    Mask upper_covers(int i) const { return ucov_[i]; }
    Mask lower_covers(int i) const { return lcov_[i]; }

    // Transitive reduction, sorted lexicographically.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    Poset dual() const { return Poset(n_, down_); }

    // Element i is renamed to new_index[i].
    Poset relabel(std::span<const int> new_index) const {
        std::vector<Mask> up(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i)
            bits::for_each(up_[i], [&](int j) { up[new_index[i]] |= bits::bit(new_index[j]); });
        return Poset(n_, std::move(up));
    }

    // Subposet induced on `subset`, elements renumbered in increasing order.
    Poset induced(Mask subset) const {
        std::vector<int> index(static_cast<std::size_t>(n_), -1);
        int m = 0;
        bits::for_each(subset, [&](int i) { index[i] = m++; });
        std::vector<Mask> up(static_cast<std::size_t>(m), 0);
        bits::for_each(subset, [&](int i) {
            bits::for_each(up_[i] & subset, [&](int j) { up[index[i]] |= bits::bit(index[j]); });
        });
        return Poset(m, std::move(up));
    }

    friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.up_ == b.up_; }

private:
    Poset(int n, std::vector<Mask> up) : n_(n), up_(std::move(up)) {
        down_.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) bits::for_each(up_[i], [&](int j) { down_[j] |= bits::bit(i); });
        ucov_.assign(static_cast<std::size_t>(n_), 0);
        lcov_.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            const Mask strict = up_[i] & ~bits::bit(i);
            Mask above = 0;
            bits::for_each(strict, [&](int k) { above |= up_[k] & ~bits::bit(k); });
            ucov_[i] = strict & ~above;
            bits::for_each(ucov_[i], [&](int j) {
                lcov_[j] |= bits::bit(i);
                covers_.emplace_back(i, j);
            });
        }
    }

    static void check_size(int n) {
        if (n < 0 || n > kMaxElements)
            throw SizeError("poset size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxElements));
    }

    int n_ = 0;
    std::vector<Mask> up_, down_, ucov_, lcov_;
    std::vector<std::pair<int, int>> covers_;
};

inline Poset dual(const Poset& p) { return p.dual(); }

inline Poset make_chain_poset(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Poset::from_covers(n, pairs);
}

inline Poset make_antichain_poset(int n) { return Poset::from_covers(n, {}); }

// Kahn's algorithm, smallest available index first.
inline std::vector<int> linear_extension(const Poset& p) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(p.size()));
    Mask placed = 0;
    while (static_cast<int>(order.size()) < p.size()) {
        for (int i = 0; i < p.size(); ++i) {
            if (bits::has(placed, i)) continue;
            if ((p.down(i) & ~bits::bit(i) & ~placed) == 0) {
                order.push_back(i);
                placed |= bits::bit(i);
                break;
            }
        }
    }
    return order;
}

// ---------------------------------------------------------------------------
// Canonical labelling
// ---------------------------------------------------------------------------

namespace detail {

// Individualisation-refinement: refine an ordered partition by counts of
// strict up/down neighbours per cell, branch on the first non-singleton
// cell, keep the lexicographically least encoding among the leaves.
// Incomparable twins (same strict up- and down-sets) are interchangeable
// by an automorphism, so only one of them is branched on.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Poset& p) : n_(p.size()) {
        for (int i = 0; i < n_; ++i) {
            sup_.push_back(p.up(i) & ~bits::bit(i));
            sdown_.push_back(p.down(i) & ~bits::bit(i));
        }
    }

    std::vector<int> run() {
        std::vector<std::vector<int>> cells(1);
        for (int i = 0; i < n_; ++i) cells[0].push_back(i);
        if (n_ == 0) return {};
        search(std::move(cells));
        return best_order_;
    }

private:
    using Cells = std::vector<std::vector<int>>;

    void refine(Cells& cells) const {
        for (;;) {
            std::vector<Mask> cell_mask;
            cell_mask.reserve(cells.size());
            for (const auto& c : cells) {
                Mask m = 0;
                for (int v : c) m |= bits::bit(v);
                cell_mask.push_back(m);
            }
            Cells next;
            next.reserve(static_cast<std::size_t>(n_));
            for (const auto& c : cells) {
                if (c.size() == 1) {
                    next.push_back(c);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(c.size());
                for (int v : c) {
                    std::vector<int> sig;
                    sig.reserve(2 * cell_mask.size());
                    for (Mask m : cell_mask) {
                        sig.push_back(bits::count(sdown_[v] & m));
                        sig.push_back(bits::count(sup_[v] & m));
                    }
                    keyed.emplace_back(std::move(sig), v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                std::size_t start = 0;
                for (std::size_t i = 1; i <= keyed.size(); ++i) {
                    if (i == keyed.size() || keyed[i].first != keyed[start].first) {
                        std::vector<int> part;
                        for (std::size_t k = start; k < i; ++k) part.push_back(keyed[k].second);
                        std::sort(part.begin(), part.end());
                        next.push_back(std::move(part));
                        start = i;
                    }
                }
            }
            const bool split = next.size() != cells.size();
            cells = std::move(next);
            if (!split) return;
        }
    }

    std::string encode(const std::vector<int>& order) const {
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) pos[order[i]] = i;
        const int row_bytes = (n_ + 7) / 8;
        std::string s;
        s.reserve(1 + static_cast<std::size_t>(n_ * row_bytes));
        s.push_back(static_cast<char>(n_));
        for (int i = 0; i < n_; ++i) {
            Mask row = 0;
            bits::for_each(sup_[order[i]], [&](int j) { row |= bits::bit(pos[j]); });
            for (int b = 0; b < row_bytes; ++b) s.push_back(static_cast<char>((row >> (8 * b)) & 0xFFU));
        }
        return s;
    }

    void search(Cells cells) {
        refine(cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<int> order;
            order.reserve(static_cast<std::size_t>(n_));
            for (const auto& c : cells) order.push_back(c.front());
            std::string code = encode(order);
            if (!have_ || code < best_) {
                best_ = std::move(code);
                best_order_ = std::move(order);
                have_ = true;
            }
            return;
        }
        const std::size_t at = static_cast<std::size_t>(target - cells.begin());
        const std::vector<int> cell = *target;
        std::vector<int> tried;
        for (int v : cell) {
            bool twin = std::any_of(tried.begin(), tried.end(), [&](int w) {
                return sup_[v] == sup_[w] && sdown_[v] == sdown_[w];
            });
            if (twin) continue;
            tried.push_back(v);
            Cells branch;
            branch.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != at) {
                    branch.push_back(cells[i]);
                    continue;
                }
                branch.push_back({v});
                std::vector<int> rest;
                for (int w : cell)
                    if (w != v) rest.push_back(w);
                branch.push_back(std::move(rest));
            }
            search(std::move(branch));
        }
    }

    int n_;
    std::vector<Mask> sup_, sdown_;
    std::string best_;
    std::vector<int> best_order_;
    bool have_ = false;
};

}  // namespace detail

// new_index[i] is the canonical position of element i. Isomorphic posets
// relabelled this way become identical.
inline std::vector<int> canonical_labeling(const Poset& p) {
    const std::vector<int> order = detail::CanonicalSearch(p).run();
    std::vector<int> new_index(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) new_index[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return new_index;
}

inline Poset canonical_poset(const Poset& p) { return p.relabel(canonical_labeling(p)); }

// Byte string, equal for two posets iff they are isomorphic.
inline std::string canonical_form(const Poset& p) {
    const Poset c = canonical_poset(p);
    const int n = c.size();
    const int row_bytes = (n + 7) / 8;
    std::string s;
    s.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i) {
        const Mask row = c.up(i) & ~bits::bit(i);
        for (int b = 0; b < row_bytes; ++b) s.push_back(static_cast<char>((row >> (8 * b)) & 0xFFU));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Induced-subposet embeddings
// ---------------------------------------------------------------------------

struct Embedding {
    std::vector<int> map;  // K-index -> L-index

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Injective, order-preserving and order-reflecting.
inline bool is_embedding(const Poset& k, const Poset& l, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != k.size()) return false;
    Mask used = 0;
    for (int y : map) {
        if (y < 0 || y >= l.size() || bits::has(used, y)) return false;
        used |= bits::bit(y);
    }
    for (int a = 0; a < k.size(); ++a)
        for (int b = 0; b < k.size(); ++b)
            if (k.leq(a, b) != l.leq(map[a], map[b])) return false;
    return true;
}

namespace detail {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Poset& k, const Poset& l) : k_(k), l_(l), order_(linear_extension(k)) {
        filter_.resize(static_cast<std::size_t>(k.size()));
        for (int x = 0; x < k.size(); ++x) {
            const int du = bits::count(k.up(x)), dd = bits::count(k.down(x));
            Mask m = 0;
            // An induced embedding cannot shrink up-sets or down-sets.
            for (int y = 0; y < l.size(); ++y)
                if (bits::count(l.up(y)) >= du && bits::count(l.down(y)) >= dd) m |= bits::bit(y);
            filter_[x] = m;
        }
        map_.assign(static_cast<std::size_t>(k.size()), -1);
    }

    std::optional<Embedding> run() {
        if (k_.size() > l_.size()) return std::nullopt;
        if (extend(0, 0)) return Embedding{map_};
        return std::nullopt;
    }

private:
    bool extend(std::size_t depth, Mask used) {
        if (depth == order_.size()) return true;
        const int x = order_[depth];
        Mask cand = filter_[x] & ~used;
        for (std::size_t d = 0; d < depth && cand != 0; ++d) {
            const int xp = order_[d];
            const int yp = map_[xp];
            if (k_.leq(xp, x))
                cand &= l_.up(yp);
            else if (k_.leq(x, xp))
                cand &= l_.down(yp);
            else
                cand &= ~(l_.up(yp) | l_.down(yp));
        }
        while (cand != 0) {
            const int y = bits::lowest(cand);
            cand &= cand - 1;
            map_[x] = y;
            if (extend(depth + 1, used | bits::bit(y))) return true;
        }
        map_[x] = -1;
        return false;
    }

    const Poset& k_;
    const Poset& l_;
    std::vector<int> order_;
    std::vector<Mask> filter_;
    std::vector<int> map_;
};

}  // namespace detail

// Exhaustive backtracking: returns an embedding of `k` into `l` as an
// induced subposet, or nothing if none exists.
inline std::optional<Embedding> find_embedding(const Poset& k, const Poset& l) {
    return detail::EmbeddingSearch(k, l).run();
}

// ---------------------------------------------------------------------------
// Order ideals
// ---------------------------------------------------------------------------

namespace detail {

// N(S) = N(S - up(x)) + N(S - down(x)) for any x in S: the ideals missing x
// avoid everything above x, the ideals containing x contain everything below.
class DownsetCounter {
public:
    explicit DownsetCounter(const Poset& p) : p_(p) {}

    std::uint64_t count(Mask s) {
        if (s == 0) return 1;
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;
        const int x = bits::lowest(s);
        const std::uint64_t r = count(s & ~p_.up(x)) + count(s & ~p_.down(x));
        memo_.emplace(s, r);
        return r;
    }

private:
    const Poset& p_;
    std::unordered_map<Mask, std::uint64_t> memo_;
};

}  // namespace detail

inline std::uint64_t count_downsets(const Poset& p) { return detail::DownsetCounter(p).count(p.all()); }

// Row a, bit b set means a rel b.
using QuasiRelation = std::vector<Mask>;

inline void check_quasiorder(const QuasiRelation& rel) {
    const int n = static_cast<int>(rel.size());
    if (n > kMaxElements) throw SizeError("quasiorder larger than " + std::to_string(kMaxElements));
    for (int a = 0; a < n; ++a) {
        if ((rel[a] & ~bits::all(n)) != 0) throw IndexError("quasiorder row has bits beyond n");
        if (!bits::has(rel[a], a)) throw NotQuasiorderError("not reflexive at " + std::to_string(a));
        bits::for_each(rel[a], [&](int b) {
            if ((rel[b] & ~rel[a]) != 0) throw NotQuasiorderError("not transitive at " + std::to_string(a));
        });
    }
}

// Classes of mutual relatedness, numbered by least member; the quotient
// poset orders class(a) <= class(b) iff a rel b.
struct QuasiQuotient {
    std::vector<int> class_of;
    Poset poset;
};

inline QuasiQuotient quotient_of_quasiorder(const QuasiRelation& rel) {
    check_quasiorder(rel);
    const int n = static_cast<int>(rel.size());
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    int classes = 0;
    for (int a = 0; a < n; ++a) {
        if (class_of[a] >= 0) continue;
        for (int b = a; b < n; ++b)
            if (bits::has(rel[a], b) && bits::has(rel[b], a)) class_of[b] = classes;
        ++classes;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        bits::for_each(rel[a], [&](int b) {
            if (class_of[a] != class_of[b]) pairs.emplace_back(class_of[a], class_of[b]);
        });
    return {std::move(class_of), Poset::from_covers(classes, pairs)};
}

// Subsets X with y rel x, x in X  =>  y in X.
inline std::uint64_t count_hereditary_quasi(const QuasiRelation& rel) {
    return count_downsets(quotient_of_quasiorder(rel).poset);
}

}  // namespace latcon
