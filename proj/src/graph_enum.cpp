#include "taut/graph_enum.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace taut {

namespace {

// Every graph with k+1 edges contracts to one with k edges, so splitting
// vertices level by level reaches all of them.
std::vector<StableGraph> splits(const StableGraph& gr) {
    std::vector<StableGraph> out;
    for (int v = 0; v < gr.num_vertices(); ++v) {
        if (gr.genus[v] >= 1) {
            StableGraph r = gr;
            --r.genus[v];
            int h = r.num_half_edges();
            r.vertex_of.insert(r.vertex_of.end(), {v, v});
            r.partner.insert(r.partner.end(), {h + 1, h});
            r.marking.insert(r.marking.end(), {0, 0});
            out.push_back(std::move(r));
        }
        auto inc = gr.half_edges_at(v);
        const int m = static_cast<int>(inc.size());
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            int moved = __builtin_popcount(mask);
            for (int g1 = 0; g1 <= gr.genus[v]; ++g1) {
                int g0 = gr.genus[v] - g1;
                if (2 * g0 - 2 + (m - moved) + 1 <= 0 || 2 * g1 - 2 + moved + 1 <= 0) continue;
                StableGraph r = gr;
                r.genus[v] = g0;
                int w = r.num_vertices();
                r.genus.push_back(g1);
                for (int i = 0; i < m; ++i)
                    if (mask & (1u << i)) r.vertex_of[inc[i]] = w;
                int h = r.num_half_edges();
                r.vertex_of.insert(r.vertex_of.end(), {v, w});
                r.partner.insert(r.partner.end(), {h + 1, h});
                r.marking.insert(r.marking.end(), {0, 0});
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

struct Levels {
    std::deque<std::vector<GraphClass>> levels;
};

std::mutex enum_mutex;
std::map<std::pair<int, int>, Levels> enum_cache;

const std::vector<GraphClass>& level_locked(int g, int n, int k) {
    auto& lv = enum_cache[{g, n}].levels;
    if (lv.empty()) {
        auto cf = canonicalize(StableGraph::single_vertex(g, n));
        lv.push_back({GraphClass{cf.graph, cf.aut_order}});
    }
    while (static_cast<int>(lv.size()) <= k) {
        std::map<std::vector<int>, GraphClass> found;
        for (const auto& gc : lv.back())
            for (const auto& s : splits(gc.graph)) {
                auto cf = canonicalize(s);
                if (!found.count(cf.code)) found.emplace(cf.code, GraphClass{cf.graph, cf.aut_order});
            }
        std::vector<GraphClass> next;
        next.reserve(found.size());
        for (auto& [code, gc] : found) next.push_back(std::move(gc));
        lv.push_back(std::move(next));
    }
    return lv[k];
}

void check_stable(int g, int n) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
        throw std::invalid_argument("unstable pair (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")");
}

}  // namespace

const std::vector<GraphClass>& graphs_with_edges(int g, int n, int k) {
    check_stable(g, n);
    static const std::vector<GraphClass> none;
    if (k < 0 || k > 3 * g - 3 + n) return none;
    std::lock_guard lock(enum_mutex);
    return level_locked(g, n, k);
}

std::vector<GraphClass> enumerate_graph_classes(int g, int n, int max_edges) {
    check_stable(g, n);
    int top = 3 * g - 3 + n;
    if (max_edges >= 0 && max_edges < top) top = max_edges;
    std::vector<GraphClass> out;
    for (int k = 0; k <= top; ++k) {
        const auto& lv = graphs_with_edges(g, n, k);
        out.insert(out.end(), lv.begin(), lv.end());
    }
    return out;
}

std::vector<StableGraph> enumerate_stable_graphs(int g, int n, int max_edges) {
    std::vector<StableGraph> out;
    for (auto& gc : enumerate_graph_classes(g, n, max_edges)) out.push_back(std::move(gc.graph));
    return out;
}

}  // namespace taut
