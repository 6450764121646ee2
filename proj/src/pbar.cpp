#include "taut/pbar.hpp"

#include "taut/graph_enum.hpp"
#include "taut/pixton.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace taut {

namespace {

// Vectors of the given length with entries = 0,1 mod 3 and sum <= bound.
void for_each_a(int len, int bound, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> a(len, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == len) {
            fn(a);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            if (x % 3 == 2) continue;
            a[i] = x;
            rec(i + 1, left - x);
        }
        a[i] = 0;
    };
    rec(0, bound);
}

std::vector<StrataElement> basis_classes(int g, int n, int d) {
    std::vector<StrataElement> out;
    for (const auto& b : basis(g, n, d)) {
        StrataElement x(g, n);
        x.add(b, 1);
        out.push_back(std::move(x));
    }
    return out;
}

struct PbarKey {
    int g, n, d;
    auto operator<=>(const PbarKey&) const = default;
};
std::mutex pbar_mutex;
std::map<PbarKey, std::vector<PbarGenerator>> pbar_cache;

}  // namespace

SparseVector strata_vector(const StrataElement& x, const std::map<std::vector<int>, int>& index) {
    SparseVector v;
    for (const auto& [s, c] : x.terms()) {
        auto it = index.find(s.key);
        if (it == index.end()) throw std::invalid_argument("strata_vector: term outside the basis");
        v[it->second] = c;
    }
    return v;
}

std::vector<PbarGenerator> pbar_generators(int g, int n, int d) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("pbar_generators: unstable (g, n)");
    if (d < 0 || d > 3 * g - 3 + n) throw std::invalid_argument("pbar_generators: degree out of range");
    {
        std::lock_guard lock(pbar_mutex);
        if (auto it = pbar_cache.find({g, n, d}); it != pbar_cache.end()) return it->second;
    }
    const auto bs = basis(g, n, d);
    const auto index = basis_index(bs);
    RowEchelon ech(static_cast<int>(bs.size()));
    std::vector<PbarGenerator> out;

    for (int k = 0; k <= d; ++k)
        for (const auto& gc : graphs_with_edges(g, n, k)) {
            const auto& gr = gc.graph;
            const int nv = gr.num_vertices();
            for (int v = 0; v < nv; ++v) {
                const int gv = gr.genus[v], nvv = gr.valence(v);
                for (int dv = 0; dv <= d - k; ++dv) {
                    const int rest = d - k - dv;
                    // degree splits of the remainder among the other vertices
                    std::vector<int> others;
                    for (int w = 0; w < nv; ++w)
                        if (w != v) others.push_back(w);
                    int room = 0;
                    for (int w : others) room += gr.vertex_dim(w);
                    if (rest > room || dv > gr.vertex_dim(v)) continue;
                    const int bound = 3 * dv - gv;  // sum A + |sigma| < 3 dv - gv + 1
                    if (bound < 0) continue;
                    for_each_a(nvv, bound, [&](const std::vector<int>& a) {
                        const int sa = std::accumulate(a.begin(), a.end(), 0);
                        for (const auto& sigma :
                             partitions_up_to(bound - sa, [](int p) { return p % 3 != 2; })) {
                            if (!pixton_parity(gv, a, sigma, dv) || !pixton_in_set(gv, a, sigma, dv)) continue;
                            StrataElement rel = pixton_R_ext(gv, a, sigma, dv);
                            if (rel.is_zero()) continue;
                            std::vector<StrataElement> classes(nv);
                            classes[v] = rel;
                            std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
                                if (i == others.size()) {
                                    if (left != 0) return;
                                    StrataElement x = xi_pushforward(gr, classes);
                                    if (ech.add(strata_vector(x, index)))
                                        out.push_back({std::move(x), gr, v, a, sigma, dv});
                                    return;
                                }
                                int w = others[i];
                                for (int e = 0; e <= std::min(left, gr.vertex_dim(w)); ++e)
                                    for (auto& b : basis_classes(gr.genus[w], gr.valence(w), e)) {
                                        classes[w] = std::move(b);
                                        rec(i + 1, left - e);
                                    }
                            };
                            rec(0, rest);
                        }
                    });
                }
            }
        }
    std::lock_guard lock(pbar_mutex);
    pbar_cache.emplace(PbarKey{g, n, d}, out);
    return out;
}

int pbar_rank(int g, int n, int d) { return static_cast<int>(pbar_generators(g, n, d).size()); }

bool in_pbar_span(const StrataElement& x, int d) {
    const auto bs = basis(x.g(), x.n(), d);
    const auto index = basis_index(bs);
    RowEchelon ech(static_cast<int>(bs.size()));
    for (const auto& gen : pbar_generators(x.g(), x.n(), d)) ech.add(strata_vector(gen.value, index));
    return ech.in_span(strata_vector(x, index));
}

}  // namespace taut
