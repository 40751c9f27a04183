#pragma once

// Planarity by forbidden subposets: L is planar iff no catalog member
// embeds as a subposet of L or of its dual.

#include <optional>
#include <string>

#include "latcon/dismantle.hpp"
#include "latcon/graph_planarity.hpp"
#include "latcon/kr_catalog.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

struct PlanarityWitness {
    std::string entry;    // catalog name
    Embedding embedding;  // entry -> L (or -> dual L)
    bool into_dual = false;
};

struct PlanarityVerdict {
    bool planar = true;
    std::optional<PlanarityWitness> witness;
};

// Smaller entries first; each entry is tried against L before dual L.
inline PlanarityVerdict is_planar_kr(const Lattice& l) {
    const Poset& p = l.poset();
    const Poset d = p.dual();
    for (const KRCatalogEntry& e : kr_catalog_all()) {
        if (e.size > l.size()) break;
        if (auto m = find_embedding(e.poset, p)) return {false, PlanarityWitness{e.name, std::move(*m), false}};
        if (auto m = find_embedding(e.poset, d)) return {false, PlanarityWitness{e.name, std::move(*m), true}};
    }
    return {};
}

}  // namespace latcon
