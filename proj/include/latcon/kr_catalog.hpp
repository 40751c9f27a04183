#pragma once

// Forbidden lattices for the subposet planarity criterion.
//
// A_n, E_n and F_n are generated for every n. B, C, D and the G_n, H_n
// members found so far are stored as cover lists. Every member is one
// representative of its pair {K, dual K}. The list was reconstructed by
// computing all subposet-minimal non-planar lattices; that search is
// complete through 14 elements, so G_n, H_n members above 14 may be
// missing (see tests/test_kr_catalog.cpp for the check on small sizes).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/error.hpp"
#include "latcon/lattice.hpp"
#include "latcon/poset.hpp"

namespace latcon {

struct KRCatalogEntry {
    std::string family;  // "A", "B", ..., "H"
    int index = 0;       // 0 for the sporadic members B, C, D
    std::string name;    // "A_2", "B", ...
    Poset poset;
    int size = 0;
    int jred = 0, mred = 0;  // |Jred(K)|, |Mred(K)|
    int jir = 0, mir = 0;    // |Jir(K)|, |Mir(K)|
    bool self_dual = false;
};

namespace kr {

using Covers = std::vector<std::pair<int, int>>;

// 0, a crown of k = n+3 atoms x_i and coatoms y_i with x_i < y_i, y_{i+1},
// and 1. A_0 is the eight-element Boolean lattice.
inline Poset a_family(int n) {
    const int k = n + 3;
    const int top = 2 * k + 1;
    Covers c;
    for (int i = 0; i < k; ++i) {
        const int x = 1 + i;
        c.emplace_back(0, x);
        c.emplace_back(x, 1 + k + i);
        c.emplace_back(x, 1 + k + (i + 1) % k);
        c.emplace_back(1 + k + i, top);
    }
    return Poset::from_covers(top + 1, c);
}

// With m = n+1: atoms y_0..y_m and d; x_i covers y_{i-1}, y_i; a covers
// y_0, b covers y_m, c covers d and every x_i; 1 covers a, b, c.
inline Poset e_family(int n) {
    const int m = n + 1;
    auto y = [](int i) { return 1 + i; };
    const int d = m + 2;
    auto x = [&](int i) { return d + i; };  // i = 1..m
    const int a = d + m + 1, b = a + 1, c = a + 2, top = a + 3;
    Covers cv;
    for (int i = 0; i <= m; ++i) cv.emplace_back(0, y(i));
    cv.emplace_back(0, d);
    for (int i = 1; i <= m; ++i) {
        cv.emplace_back(y(i - 1), x(i));
        cv.emplace_back(y(i), x(i));
        cv.emplace_back(x(i), c);
    }
    cv.emplace_back(y(0), a);
    cv.emplace_back(y(m), b);
    cv.emplace_back(d, c);
    for (int t : {a, b, c}) cv.emplace_back(t, top);
    return Poset::from_covers(top + 1, cv);
}

// With m = n+1: atoms a, c; c is covered by d and x_1..x_m; y_0 covers a
// and x_1, y_i covers x_i and x_{i+1}; z covers x_m; w covers d and
// y_0..y_{m-1}; 1 covers w and z.
inline Poset f_family(int n) {
    const int m = n + 1;
    const int a = 1, c = 2, d = 3;
    auto x = [](int i) { return 3 + i; };      // i = 1..m
    auto y = [&](int i) { return 4 + m + i; };  // i = 0..m-1
    const int z = 4 + 2 * m, w = z + 1, top = z + 2;
    Covers cv{{0, a}, {0, c}, {c, d}, {a, y(0)}, {d, w}, {z, top}, {w, top}};
    for (int i = 1; i <= m; ++i) cv.emplace_back(c, x(i));
    cv.emplace_back(x(1), y(0));
    for (int i = 1; i < m; ++i) {
        cv.emplace_back(x(i), y(i));
        cv.emplace_back(x(i + 1), y(i));
    }
    cv.emplace_back(x(m), z);
    for (int i = 0; i < m; ++i) cv.emplace_back(y(i), w);
    return Poset::from_covers(top + 1, cv);
}

struct Sporadic {
    const char* family;
    int index;
    int n;
    Covers covers;
};

inline const std::vector<Sporadic>& sporadic() {
    static const std::vector<Sporadic> list{
        {"B", 0, 9, {{0, 1}, {0, 2}, {0, 3}, {1, 6}, {1, 7}, {2, 5}, {2, 7}, {3, 4}, {3, 7},
                     {4, 8}, {5, 8}, {6, 8}, {7, 8}}},
        {"C", 0, 9, {{0, 1}, {0, 2}, {0, 3}, {1, 6}, {2, 5}, {3, 4}, {3, 5}, {3, 6}, {4, 8},
                     {5, 7}, {6, 7}, {7, 8}}},
        {"D", 0, 9, {{0, 1}, {0, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 7}, {4, 6}, {5, 6},
                     {5, 7}, {6, 8}, {7, 8}}},
        {"G", 0, 10, {{0, 1}, {0, 2}, {0, 3}, {1, 8}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 9},
                      {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9}}},
        {"G", 1, 14, {{0, 1}, {0, 2}, {0, 3}, {1, 12}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 13},
                      {5, 8}, {6, 7}, {6, 8}, {7, 10}, {8, 9}, {8, 10}, {9, 12}, {10, 11}, {10, 12},
                      {11, 13}, {12, 13}}},
        {"H", 0, 11, {{0, 1}, {0, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 9}, {4, 7}, {5, 6},
                      {5, 7}, {6, 9}, {7, 8}, {7, 9}, {8, 10}, {9, 10}}},
    };
    return list;
}

inline int family_size(char family, int n) {
    switch (family) {
        case 'A': return 2 * n + 8;
        case 'E':
        case 'F': return 2 * n + 9;
        default: return kMaxElements + 1;
    }
}

inline KRCatalogEntry make_entry(std::string family, int index, bool indexed, Poset p) {
    KRCatalogEntry e;
    e.name = indexed ? family + "_" + std::to_string(index) : family;
    e.family = std::move(family);
    e.index = index;
    e.size = p.size();
    Lattice l;
    try {
        l = validate_lattice(p);
    } catch (const NotLatticeError& err) {
        throw CatalogValidationError(e.name, std::string("not a lattice (") + err.what() + ")");
    }
    const IrreducibleSets irr = irreducibles(l);
    e.jred = bits::count(irr.jred);
    e.mred = bits::count(irr.mred);
    e.jir = bits::count(irr.jir);
    e.mir = bits::count(irr.mir);
    e.self_dual = canonical_form(p) == canonical_form(p.dual());
    e.poset = std::move(p);
    return e;
}

inline void validate_entry(const KRCatalogEntry& e) {
    const bool small_pair = e.name == "E_0" || e.name == "F_0";
    if (small_pair && (e.jred != 3 || e.mred != 3))
        throw CatalogValidationError(e.name, "expected |Jred| = |Mred| = 3");
    // Neither |Jred|,|Mred| >= 4 nor |Jir|,|Mir| >= 4 covers every member
    // (G_0 has 3/3 reducibles, A_0 has 3/3 irreducibles). What holds for
    // all of them is that K itself meets a sufficient condition for few
    // congruences.
    if (!small_pair && e.jred < 4 && e.mred < 4 && !few_criteria(validate_lattice(e.poset)).forces_few())
        throw CatalogValidationError(e.name, "expected |Jred| >= 4, |Mred| >= 4 or a prime-quotient collision");
    if (e.family == "A" && !e.self_dual) throw CatalogValidationError(e.name, "A_n must be self-dual");
}

inline std::vector<KRCatalogEntry> build(int max_size) {
    std::vector<KRCatalogEntry> out;
    for (char f : {'A', 'E', 'F'}) {
        for (int n = 0; family_size(f, n) <= max_size; ++n) {
            Poset p = f == 'A' ? a_family(n) : f == 'E' ? e_family(n) : f_family(n);
            out.push_back(make_entry(std::string(1, f), n, true, std::move(p)));
        }
    }
    for (const Sporadic& s : sporadic()) {
        if (s.n > max_size) continue;
        const bool indexed = s.family[0] == 'G' || s.family[0] == 'H';
        out.push_back(make_entry(s.family, s.index, indexed, Poset::from_covers(s.n, s.covers)));
    }
    for (const KRCatalogEntry& e : out) validate_entry(e);
    std::stable_sort(out.begin(), out.end(), [](const KRCatalogEntry& a, const KRCatalogEntry& b) {
        return a.size != b.size ? a.size < b.size : a.name < b.name;
    });
    return out;
}

}  // namespace kr

// Every member that fits in kMaxElements, built once.
inline const std::vector<KRCatalogEntry>& kr_catalog_all() {
    static const std::vector<KRCatalogEntry> full = kr::build(kMaxElements);
    return full;
}

// Members with at most `max_size` elements, smallest first, ties by name.
inline std::vector<KRCatalogEntry> kr_catalog(int max_size) {
    if (max_size < 1) throw SizeError("catalog size bound must be >= 1");
    std::vector<KRCatalogEntry> out;
    for (const KRCatalogEntry& e : kr_catalog_all())
        if (e.size <= max_size) out.push_back(e);
    return out;
}

}  // namespace latcon
