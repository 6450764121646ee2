#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace taut {

// Half-edges carry the structure: each knows its vertex and its involution
// partner (itself for a leg). Legs carry a marking in 1..n; edge half-edges
// carry 0.
struct StableGraph {
    std::vector<int> genus;
    std::vector<int> vertex_of;
    std::vector<int> partner;
    std::vector<int> marking;

    int num_vertices() const { return static_cast<int>(genus.size()); }
    int num_half_edges() const { return static_cast<int>(vertex_of.size()); }
    int num_legs() const;
    int num_edges() const { return (num_half_edges() - num_legs()) / 2; }
    bool is_leg(int h) const { return partner[h] == h; }
    std::vector<int> half_edges_at(int v) const;
    int valence(int v) const;
    int h1() const { return num_edges() - num_vertices() + 1; }
    int total_genus() const;
    // (h, partner(h)) with h < partner(h), in increasing order of h.
    std::vector<std::pair<int, int>> edges() const;
    int leg_of_marking(int i) const;
    int vertex_dim(int v) const { return 3 * genus[v] - 3 + valence(v); }
    bool is_tree() const { return h1() == 0; }

    // Throws std::invalid_argument describing the first violated invariant.
    void validate() const;
    bool is_valid() const;

    // Legs become half-edges 0..n-1 in marking order, then each edge adds two.
    static StableGraph from_edges(std::vector<int> genera, const std::vector<std::pair<int, int>>& edge_list,
                                  const std::vector<int>& leg_vertices);
    static StableGraph single_vertex(int g, int n);

    auto operator<=>(const StableGraph&) const = default;
};

int genus(const StableGraph& gr);

// kappa: per vertex, a sorted multiset of kappa indices (each >= 1).
// psi: per half-edge exponent.
struct Decoration {
    std::vector<std::vector<int>> kappa;
    std::vector<int> psi;

    static Decoration trivial(const StableGraph& gr);
    int vertex_degree(const StableGraph& gr, int v) const;
    int degree() const;
    auto operator<=>(const Decoration&) const = default;
};

struct CanonicalForm {
    StableGraph graph;
    Decoration deco;
    std::vector<int> code;
    std::int64_t aut_order = 1;
    // maps from the input labels to the canonical labels
    std::vector<int> vertex_map;
    std::vector<int> half_edge_map;
    // every vertex ordering (input vertex -> position) realising the minimal code
    std::vector<std::vector<int>> min_orderings;
};

CanonicalForm canonicalize(const StableGraph& gr, const Decoration& deco);
CanonicalForm canonicalize(const StableGraph& gr);
std::int64_t aut_order(const StableGraph& gr);

// All isomorphisms a -> b preserving genus, markings and (if given) the
// decorations; each is a half-edge map. Vertex images follow from it.
std::vector<std::vector<int>> isomorphisms(const StableGraph& a, const StableGraph& b);
std::vector<std::vector<int>> isomorphisms(const StableGraph& a, const Decoration& da, const StableGraph& b,
                                           const Decoration& db);

// Result of replacing vertex v by a graph.
struct Substitution {
    StableGraph graph;
    std::vector<int> inner_vertex;     // inserted graph vertex -> new vertex
    std::vector<int> inner_half_edge;  // inserted graph half-edge -> new half-edge
    std::vector<int> outer_vertex;     // old vertex -> new vertex (-1 for v)
};

// leg_matching[i] is the half-edge at v that leg i+1 of `inner` replaces.
Substitution insert_at_vertex(const StableGraph& gr, int v, const StableGraph& inner,
                              const std::vector<int>& leg_matching);

// Joins the legs with markings a and b into an edge; remaining markings are
// renumbered in order.
StableGraph glue_legs(const StableGraph& gr, int marking_a, int marking_b);

struct Contraction {
    StableGraph graph;
    std::vector<int> vertex_map;     // old vertex -> new vertex
    std::vector<int> half_edge_map;  // old half-edge -> new half-edge, -1 if contracted
};

// contract[k] refers to the k-th entry of gr.edges().
Contraction contract_edges(const StableGraph& gr, const std::vector<bool>& contract);

std::string describe(const StableGraph& gr);

}  // namespace taut
