#pragma once

#include "taut/stable_graph.hpp"

#include <cstdint>
#include <vector>

namespace taut {

struct GraphClass {
    StableGraph graph;  // canonical labeling
    std::int64_t aut_order;
};

// Isomorphism classes of stable graphs of genus g with n legs, optionally only
// those with at most max_edges edges. Ordered by edge count, then canonical
// code. Throws std::invalid_argument for unstable (g, n).
std::vector<GraphClass> enumerate_graph_classes(int g, int n, int max_edges = -1);
std::vector<StableGraph> enumerate_stable_graphs(int g, int n, int max_edges = -1);

// Classes with exactly k edges; the reference stays valid for the process.
const std::vector<GraphClass>& graphs_with_edges(int g, int n, int k);

}  // namespace taut
