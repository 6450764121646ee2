#include "taut/strata.hpp"

#include "taut/partitions.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace taut {

std::vector<VertexTerm> push_vertex(int g, const std::vector<int>& kappa, const std::vector<int>& psi, int slot) {
    const int nv = static_cast<int>(psi.size());
    const int k = psi.at(slot);
    std::vector<int> rest;
    for (int i = 0; i < nv; ++i)
        if (i != slot) rest.push_back(psi[i]);
    const Rational kappa0 = 2 * g - 2 + (nv - 1);

    std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> acc;
    auto emit = [&](std::vector<int> kp, std::vector<int> ps, const Rational& c) {
        if (c == 0) return;
        std::sort(kp.begin(), kp.end());
        acc[{std::move(kp), std::move(ps)}] += c;
    };
    // kappa_a = pullback + psi_last^a, so each subset S of the kappa factors
    // is absorbed into the power of psi_last.
    const int kn = static_cast<int>(kappa.size());
    for (unsigned mask = 0; mask < (1u << kn); ++mask) {
        int m = k;
        std::vector<int> kept;
        for (int j = 0; j < kn; ++j) {
            if (mask & (1u << j)) m += kappa[j];
            else kept.push_back(kappa[j]);
        }
        if (m < 1) continue;
        if (m - 1 == 0) emit(kept, rest, kappa0);
        else {
            kept.push_back(m - 1);
            emit(kept, rest, 1);
        }
    }
    // Without psi_last the only survivors come from the diagonal corrections.
    if (k == 0)
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (rest[i] >= 1) {
                auto ps = rest;
                --ps[i];
                emit(kappa, ps, 1);
            }
    std::vector<VertexTerm> out;
    for (auto& [key, c] : acc)
        if (c != 0) out.push_back({key.first, key.second, c});
    return out;
}

namespace {

// Removes half-edge h (the forgotten leg) and renumbers later markings.
struct Rebuild {
    std::vector<bool> drop_half;
    int drop_vertex = -1;
    std::map<int, int> new_partner;
    std::map<int, int> new_marking;
};

std::pair<StableGraph, Decoration> apply(const StableGraph& gr, const Decoration& d, const Rebuild& rb, int forgotten) {
    std::vector<int> vmap(gr.num_vertices(), -1), hmap(gr.num_half_edges(), -1);
    StableGraph r;
    Decoration nd;
    for (int v = 0; v < gr.num_vertices(); ++v) {
        if (v == rb.drop_vertex) continue;
        vmap[v] = r.num_vertices();
        r.genus.push_back(gr.genus[v]);
        nd.kappa.push_back(d.kappa[v]);
    }
    int hn = 0;
    for (int h = 0; h < gr.num_half_edges(); ++h)
        if (!rb.drop_half[h]) hmap[h] = hn++;
    r.vertex_of.resize(hn);
    r.partner.resize(hn);
    r.marking.resize(hn);
    nd.psi.resize(hn);
    for (int h = 0; h < gr.num_half_edges(); ++h) {
        int t = hmap[h];
        if (t < 0) continue;
        r.vertex_of[t] = vmap[gr.vertex_of[h]];
        auto p = rb.new_partner.find(h);
        r.partner[t] = hmap[p == rb.new_partner.end() ? gr.partner[h] : p->second];
        auto mk = rb.new_marking.find(h);
        int m = mk == rb.new_marking.end() ? gr.marking[h] : mk->second;
        r.marking[t] = m > forgotten ? m - 1 : m;
        nd.psi[t] = d.psi[h];
    }
    return {std::move(r), std::move(nd)};
}

}  // namespace

StrataElement forgetful_pushforward(const StrataElement& x, int marking) {
    const int g = x.g(), n = x.n();
    if (marking < 1 || marking > n) throw std::out_of_range("forgetful_pushforward: no marking " + std::to_string(marking));
    if (2 * g - 2 + (n - 1) <= 0)
        throw std::invalid_argument("forgetful_pushforward: (" + std::to_string(g) + "," + std::to_string(n - 1) +
                                    ") is unstable");
    StrataElement out(g, n - 1);
    for (const auto& [s, c] : x.terms()) {
        const auto& gr = s.graph;
        const auto& d = s.deco;
        const int h = gr.leg_of_marking(marking);
        const int v = gr.vertex_of[h];
        Rebuild rb;
        rb.drop_half.assign(gr.num_half_edges(), false);
        rb.drop_half[h] = true;
        if (2 * gr.genus[v] - 2 + gr.valence(v) - 1 > 0) {
            auto inc = gr.half_edges_at(v);
            int slot = static_cast<int>(std::find(inc.begin(), inc.end(), h) - inc.begin());
            std::vector<int> psi;
            for (int e : inc) psi.push_back(d.psi[e]);
            auto [ng, nd0] = apply(gr, d, rb, marking);
            // half-edges at v in the rebuilt graph, in the same order minus h
            std::vector<int> new_inc;
            {
                int t = 0;
                for (int e = 0; e < gr.num_half_edges(); ++e) {
                    if (e == h) continue;
                    if (gr.vertex_of[e] == v) new_inc.push_back(t);
                    ++t;
                }
            }
            for (const auto& vt : push_vertex(gr.genus[v], d.kappa[v], psi, slot)) {
                Decoration nd = nd0;
                nd.kappa[v] = vt.kappa;
                for (std::size_t i = 0; i < new_inc.size(); ++i) nd.psi[new_inc[i]] = vt.psi[i];
                out.add(ng, nd, c * vt.coeff);
            }
            continue;
        }
        // Genus 0 vertex with three half-edges: it disappears.
        if (d.vertex_degree(gr, v) != 0) continue;
        std::vector<int> others;
        for (int e : gr.half_edges_at(v))
            if (e != h) others.push_back(e);
        int a = others[0], b = others[1];
        rb.drop_vertex = v;
        rb.drop_half[a] = rb.drop_half[b] = true;
        if (gr.is_leg(a) && gr.is_leg(b)) throw std::logic_error("forgetful_pushforward: unstable target");
        if (gr.is_leg(b)) std::swap(a, b);
        if (gr.is_leg(a)) {
            int bp = gr.partner[b];
            rb.new_partner[bp] = bp;
            rb.new_marking[bp] = gr.marking[a];
        } else {
            int ap = gr.partner[a], bp = gr.partner[b];
            if (ap == b) throw std::logic_error("forgetful_pushforward: unstable target");
            rb.new_partner[ap] = bp;
            rb.new_partner[bp] = ap;
        }
        auto [ng, nd] = apply(gr, d, rb, marking);
        out.add(ng, nd, c);
    }
    return out;
}

StrataElement forget_last(const StrataElement& x, int count) {
    StrataElement r = x;
    for (int i = 0; i < count; ++i) r = forgetful_pushforward(r, r.n());
    return r;
}

namespace {

std::mutex push_mutex;
std::map<std::vector<int>, KappaPoly> push_cache;

}  // namespace

KappaPoly pushforward_psi_powers(std::vector<int> ks) {
    for (int k : ks)
        if (k < 2) throw std::invalid_argument("pushforward_psi_powers: exponents must be at least 2");
    std::sort(ks.begin(), ks.end());
    {
        std::lock_guard lock(push_mutex);
        auto it = push_cache.find(ks);
        if (it != push_cache.end()) return it->second;
    }
    // Iterated single-point pushes; kappa_0 cannot arise since every k >= 2,
    // so the genus handed to push_vertex is irrelevant.
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> cur{{{{}, ks}, Rational(1)}};
    for (std::size_t step = 0; step < ks.size(); ++step) {
        std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> next;
        for (const auto& [key, c] : cur) {
            const auto& [kp, ps] = key;
            for (const auto& vt : push_vertex(0, kp, ps, static_cast<int>(ps.size()) - 1))
                next[{vt.kappa, vt.psi}] += c * vt.coeff;
        }
        cur.swap(next);
    }
    KappaPoly r;
    for (const auto& [key, c] : cur)
        if (c != 0) r[key.first] += c;
    std::lock_guard lock(push_mutex);
    push_cache.emplace(ks, r);
    return r;
}

KappaPoly kappa_of_f_poly(const std::vector<Rational>& f, int degree_bound) {
    if ((!f.empty() && f[0] != 0) || (f.size() > 1 && f[1] != 0))
        throw std::invalid_argument("kappa(f) needs f with vanishing constant and linear terms");
    KappaPoly out;
    out[{}] = 1;
    // multisets {k_j} with sum (k_j - 1) <= degree_bound, weight prod f_k / prod mult!
    std::vector<int> ks;
    std::function<void(int, int, Rational)> rec = [&](int min_k, int budget, Rational w) {
        for (int k = min_k; k - 1 <= budget && k < static_cast<int>(f.size()); ++k) {
            if (f[k] == 0) continue;
            int mult = 1 + static_cast<int>(std::count(ks.begin(), ks.end(), k));
            Rational nw = w * f[k] / mult;
            ks.push_back(k);
            for (const auto& [kp, c] : pushforward_psi_powers(ks)) {
                auto& slot = out[kp];
                slot += nw * c;
            }
            rec(k, budget - (k - 1), nw);
            ks.pop_back();
        }
    };
    rec(2, degree_bound, 1);
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

StrataElement kappa_of_f(const std::vector<Rational>& f, int g, int n, int degree_bound) {
    if (degree_bound > 3 * g - 3 + n) throw std::invalid_argument("kappa_of_f: degree bound exceeds dimension");
    StrataElement x(g, n);
    auto gr = StableGraph::single_vertex(g, n);
    for (const auto& [kp, c] : kappa_of_f_poly(f, degree_bound)) {
        Decoration d = Decoration::trivial(gr);
        d.kappa[0] = kp;
        x.add(gr, d, c);
    }
    return x;
}

StrataElement kappa_of_f(const Series& f, int g, int n, int degree_bound) {
    return kappa_of_f(univariate_coefficients(f, degree_bound + 1), g, n, degree_bound);
}

}  // namespace taut
