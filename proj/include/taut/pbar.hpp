#pragma once

#include "taut/linalg.hpp"
#include "taut/partitions.hpp"
#include "taut/strata.hpp"

#include <vector>

namespace taut {

// One closure generator: R^{d(v)}_{g(v),A,sigma} on vertex v of graph, basis
// classes on the other vertices, pushed forward.
struct PbarGenerator {
    StrataElement value;
    StableGraph graph;
    int vertex = 0;
    std::vector<int> a;
    Partition sigma;
    int vertex_degree = 0;
};

// Generators of the span of the closure in S^d_{g,n}, kept only when they
// raise the rank, so the list is a basis of the span.
std::vector<PbarGenerator> pbar_generators(int g, int n, int d);

// Coordinates of a homogeneous element in basis(g, n, d).
SparseVector strata_vector(const StrataElement& x, const std::map<std::vector<int>, int>& index);

int pbar_rank(int g, int n, int d);
bool in_pbar_span(const StrataElement& x, int d);

}  // namespace taut
