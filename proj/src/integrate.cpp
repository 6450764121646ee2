#include "taut/integrate.hpp"

#include "taut/wk.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace taut {

namespace {

std::mutex vertex_mutex;
std::map<std::tuple<int, std::vector<int>, std::vector<int>>, Rational> vertex_cache;

Rational integrate_graph(const StableGraph& gr, const Decoration& d) {
    Rational r = 1;
    for (int v = 0; v < gr.num_vertices() && r != 0; ++v) {
        std::vector<int> psi;
        for (int h : gr.half_edges_at(v)) psi.push_back(d.psi[h]);
        r *= integrate_vertex(gr.genus[v], d.kappa[v], psi);
    }
    return r;
}

}  // namespace

Rational integrate_vertex(int g, std::vector<int> kappa, std::vector<int> psi) {
    const int n = static_cast<int>(psi.size());
    const int deg = std::accumulate(kappa.begin(), kappa.end(), 0) + std::accumulate(psi.begin(), psi.end(), 0);
    if (2 * g - 2 + n <= 0 || deg != 3 * g - 3 + n) return 0;
    if (kappa.empty()) return descendent_integral(g, psi);
    std::sort(kappa.begin(), kappa.end());
    std::sort(psi.begin(), psi.end());
    auto key = std::make_tuple(g, kappa, psi);
    {
        std::lock_guard lock(vertex_mutex);
        if (auto it = vertex_cache.find(key); it != vertex_cache.end()) return it->second;
    }
    // kappa_a = pi_*(psi_{n+1}^{a+1}); the other kappas pull back as kappa_b - psi_{n+1}^b.
    const int a = kappa.back();
    std::vector<int> rest(kappa.begin(), kappa.end() - 1);
    const int m = static_cast<int>(rest.size());
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> kept;
        int extra = a + 1;
        int sign = 1;
        for (int j = 0; j < m; ++j) {
            if (mask & (1u << j)) {
                extra += rest[j];
                sign = -sign;
            } else {
                kept.push_back(rest[j]);
            }
        }
        auto p = psi;
        p.push_back(extra);
        total += sign * integrate_vertex(g, kept, p);
    }
    std::lock_guard lock(vertex_mutex);
    vertex_cache.emplace(std::move(key), total);
    return total;
}

Rational integrate(const StrataElement& x) {
    const int dim = 3 * x.g() - 3 + x.n();
    Rational total = 0;
    for (const auto& [s, c] : x.terms()) {
        if (s.degree() != dim)
            throw std::invalid_argument("integrate: term of degree " + std::to_string(s.degree()) +
                                        " but the dimension is " + std::to_string(dim));
        total += c * integrate_graph(s.graph, s.deco);
    }
    return total;
}

Rational pairing(const StrataElement& x, const StrataElement& y) {
    if (x.g() != y.g() || x.n() != y.n()) throw std::invalid_argument("pairing: elements live on different spaces");
    const int dim = 3 * x.g() - 3 + x.n();
    Rational total = 0;
    for (const auto& [sx, cx] : x.terms())
        for (const auto& [sy, cy] : y.terms()) {
            if (sx.degree() + sy.degree() != dim) continue;
            bool swap = sy.graph.num_edges() > sx.graph.num_edges();
            const auto& sa = swap ? sy : sx;
            const auto& sb = swap ? sx : sy;
            for (const auto& s : generic_structures(sa.graph, sb.graph)) {
                int room = dim - s.gamma.num_edges();
                auto pa = structure_pullback(s, sa.deco, true);
                auto pb = structure_pullback(s, sb.deco, false);
                auto p = deco_multiply(s.gamma, deco_multiply(s.gamma, pa, pb, room), excess_factor(s, room), room);
                for (const auto& [d, c] : p) {
                    if (d.degree() != room) continue;
                    total += cx * cy * s.weight * c * integrate_graph(s.gamma, d);
                }
            }
        }
    return total;
}

}  // namespace taut
