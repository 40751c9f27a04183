#pragma once

// Planarity of a lattice decided on its covering graph: a finite lattice is
// planar iff the covering graph plus an edge joining 0 and 1 is a planar
// graph. Independent of the forbidden-subposet test in planarity.hpp.

#include <algorithm>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "latcon/lattice.hpp"

namespace latcon {

// Cover edges plus {0,1}, without duplicates.
inline std::vector<std::pair<int, int>> augmented_cover_edges(const Lattice& l) {
    std::vector<std::pair<int, int>> edges = l.poset().covers();
    const std::pair<int, int> extra{std::min(l.bottom(), l.top()), std::max(l.bottom(), l.top())};
    if (l.bottom() != l.top() && std::find(edges.begin(), edges.end(), extra) == edges.end())
        edges.push_back(extra);
    return edges;
}

inline bool is_planar_graph(int vertices, const std::vector<std::pair<int, int>>& edges) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                        boost::property<boost::vertex_index_t, int>,
                                        boost::property<boost::edge_index_t, int>>;
    Graph g(static_cast<std::size_t>(vertices));
    for (auto [a, b] : edges) boost::add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), g);
    return boost::boyer_myrvold_planarity_test(g);
}

inline bool is_planar_graph_oracle(const Lattice& l) {
    return is_planar_graph(l.size(), augmented_cover_edges(l));
}

}  // namespace latcon
