#include "taut/graph_enum.hpp"
#include "taut/strata.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace taut {

namespace {

std::mutex structure_mutex;
std::map<std::pair<StableGraph, StableGraph>, std::vector<GenericStructure>> structure_cache;

std::vector<GenericStructure> build_structures(const StableGraph& a, const StableGraph& b) {
    std::vector<GenericStructure> out;
    const int eb = b.num_edges();
    const int ea = a.num_edges();
    const int va = a.num_vertices();
    std::vector<std::vector<int>> inc(va);
    for (int v = 0; v < va; ++v) inc[v] = a.half_edges_at(v);

    // choose a graph class at each vertex of A
    std::vector<const GraphClass*> choice(va, nullptr);
    std::function<void(int, int)> rec = [&](int v, int new_edges) {
        if (v == va) {
            if (ea + new_edges < eb) return;
            StableGraph gam = a;
            std::vector<int> a_vertex(va);
            for (int u = 0; u < va; ++u) a_vertex[u] = u;
            Rational weight = 1;
            for (int u = 0; u < va; ++u) {
                weight /= static_cast<long>(choice[u]->aut_order);
                if (choice[u]->graph.num_edges() == 0) continue;
                auto sub = insert_at_vertex(gam, u, choice[u]->graph, inc[u]);
                gam = std::move(sub.graph);
                a_vertex.resize(gam.num_vertices());
                for (std::size_t j = 1; j < sub.inner_vertex.size(); ++j) a_vertex[sub.inner_vertex[j]] = u;
            }
            const int ha = a.num_half_edges();
            auto es = gam.edges();
            std::vector<int> old_edges;
            for (std::size_t k = 0; k < es.size(); ++k)
                if (es[k].first < ha) old_edges.push_back(static_cast<int>(k));
            const int need = eb - new_edges;
            // subsets of A's edges kept in B
            std::vector<int> pick;
            std::function<void(std::size_t)> choose = [&](std::size_t i) {
                if (static_cast<int>(pick.size()) == need) {
                    std::vector<bool> contract(es.size(), false);
                    for (int k : old_edges) contract[k] = true;
                    for (int k : pick) contract[k] = false;
                    auto con = contract_edges(gam, contract);
                    if (con.graph.num_vertices() != b.num_vertices()) return;
                    for (const auto& iso : isomorphisms(con.graph, b)) {
                        GenericStructure s;
                        s.gamma = gam;
                        s.weight = weight;
                        s.a_vertex = a_vertex;
                        s.a_half_edge.resize(ha);
                        for (int h = 0; h < ha; ++h) s.a_half_edge[h] = h;
                        s.b_half_edge.assign(b.num_half_edges(), -1);
                        s.b_vertex.assign(gam.num_vertices(), -1);
                        for (int h = 0; h < gam.num_half_edges(); ++h) {
                            int t = con.half_edge_map[h];
                            if (t >= 0) s.b_half_edge[iso[t]] = h;
                        }
                        // vertex images; a half-edge-free vertex only occurs for a lone vertex
                        std::vector<int> cv(con.graph.num_vertices(), 0);
                        for (int h = 0; h < con.graph.num_half_edges(); ++h) cv[con.graph.vertex_of[h]] = b.vertex_of[iso[h]];
                        for (int w = 0; w < gam.num_vertices(); ++w) s.b_vertex[w] = cv[con.vertex_map[w]];
                        for (int k : pick) s.excess.push_back(es[k].first);
                        out.push_back(std::move(s));
                    }
                    return;
                }
                if (i == old_edges.size()) return;
                if (old_edges.size() - i < need - pick.size()) return;
                pick.push_back(old_edges[i]);
                choose(i + 1);
                pick.pop_back();
                choose(i + 1);
            };
            if (need >= 0) choose(0);
            return;
        }
        const int nv = static_cast<int>(inc[v].size());
        for (int k = 0; new_edges + k <= eb; ++k) {
            if (k > 0 && 3 * a.genus[v] - 3 + nv < k) break;  // a stable graph has at most 3g-3+n edges
            for (const auto& gc : graphs_with_edges(a.genus[v], nv, k)) {
                choice[v] = &gc;
                rec(v + 1, new_edges + k);
            }
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

const std::vector<GenericStructure>& generic_structures(const StableGraph& a, const StableGraph& b) {
    auto key = std::make_pair(a, b);
    {
        std::lock_guard lock(structure_mutex);
        auto it = structure_cache.find(key);
        if (it != structure_cache.end()) return it->second;
    }
    auto built = build_structures(a, b);
    std::lock_guard lock(structure_mutex);
    return structure_cache.try_emplace(std::move(key), std::move(built)).first->second;
}

DecoPoly structure_pullback(const GenericStructure& s, const Decoration& d, bool side_a) {
    const auto& gam = s.gamma;
    const auto& vmap = side_a ? s.a_vertex : s.b_vertex;
    const auto& hmap = side_a ? s.a_half_edge : s.b_half_edge;
    Decoration base = Decoration::trivial(gam);
    for (std::size_t h = 0; h < hmap.size(); ++h) base.psi[hmap[h]] = d.psi[h];
    DecoPoly acc{{base, Rational(1)}};
    const int max_degree = 3 * gam.total_genus() - 3 + gam.num_legs();
    for (std::size_t v = 0; v < d.kappa.size(); ++v) {
        for (int a : d.kappa[v]) {
            DecoPoly f;
            for (int w = 0; w < gam.num_vertices(); ++w) {
                if (vmap[w] != static_cast<int>(v)) continue;
                Decoration t = Decoration::trivial(gam);
                t.kappa[w] = {a};
                deco_add(f, t, 1);
            }
            acc = deco_multiply(gam, acc, f, max_degree);
        }
    }
    return acc;
}

DecoPoly excess_factor(const GenericStructure& s, int max_degree) {
    const auto& gam = s.gamma;
    DecoPoly acc{{Decoration::trivial(gam), Rational(1)}};
    for (int h : s.excess) {
        auto f = edge_factor(gam, h, gam.partner[h], {{Rational(0), Rational(-1)}, {Rational(-1)}});
        acc = deco_multiply(gam, acc, f, max_degree);
    }
    return acc;
}

StrataElement product(const StrataElement& x, const StrataElement& y) {
    if (x.g() != y.g() || x.n() != y.n()) throw std::invalid_argument("product: elements live on different spaces");
    const int dim = 3 * x.g() - 3 + x.n();
    StrataElement out(x.g(), x.n());
    for (const auto& [sx, cx] : x.terms())
        for (const auto& [sy, cy] : y.terms()) {
            if (sx.degree() + sy.degree() > dim) continue;
            // fewer new edges to insert when A is the larger graph
            bool swap = sy.graph.num_edges() > sx.graph.num_edges();
            const auto& sa = swap ? sy : sx;
            const auto& sb = swap ? sx : sy;
            for (const auto& s : generic_structures(sa.graph, sb.graph)) {
                int room = dim - s.gamma.num_edges();
                auto pa = structure_pullback(s, sa.deco, true);
                auto pb = structure_pullback(s, sb.deco, false);
                auto p = deco_multiply(s.gamma, deco_multiply(s.gamma, pa, pb, room), excess_factor(s, room), room);
                for (const auto& [d, c] : p) out.add(s.gamma, d, cx * cy * s.weight * c);
            }
        }
    return out;
}

}  // namespace taut
