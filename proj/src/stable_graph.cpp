#include "taut/stable_graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace taut {

int StableGraph::num_legs() const {
    int n = 0;
    for (int h = 0; h < num_half_edges(); ++h) n += is_leg(h);
    return n;
}

std::vector<int> StableGraph::half_edges_at(int v) const {
    std::vector<int> r;
    for (int h = 0; h < num_half_edges(); ++h)
        if (vertex_of[h] == v) r.push_back(h);
    return r;
}

int StableGraph::valence(int v) const {
    return static_cast<int>(std::count(vertex_of.begin(), vertex_of.end(), v));
}

int StableGraph::total_genus() const {
    return std::accumulate(genus.begin(), genus.end(), 0) + h1();
}

std::vector<std::pair<int, int>> StableGraph::edges() const {
    std::vector<std::pair<int, int>> r;
    for (int h = 0; h < num_half_edges(); ++h)
        if (partner[h] > h) r.emplace_back(h, partner[h]);
    return r;
}

int StableGraph::leg_of_marking(int i) const {
    for (int h = 0; h < num_half_edges(); ++h)
        if (is_leg(h) && marking[h] == i) return h;
    throw std::out_of_range("no leg with marking " + std::to_string(i));
}

void StableGraph::validate() const {
    const int hn = num_half_edges();
    const int vn = num_vertices();
    if (vn == 0) throw std::invalid_argument("graph has no vertices");
    if (static_cast<int>(partner.size()) != hn || static_cast<int>(marking.size()) != hn)
        throw std::invalid_argument("half-edge arrays have different lengths");
    for (int g : genus)
        if (g < 0) throw std::invalid_argument("negative vertex genus");
    std::vector<int> seen;
    for (int h = 0; h < hn; ++h) {
        if (vertex_of[h] < 0 || vertex_of[h] >= vn) throw std::invalid_argument("half-edge on a missing vertex");
        if (partner[h] < 0 || partner[h] >= hn || partner[partner[h]] != h)
            throw std::invalid_argument("half-edge pairing is not an involution");
        if (is_leg(h)) {
            if (marking[h] < 1) throw std::invalid_argument("leg without a positive marking");
            seen.push_back(marking[h]);
        } else if (marking[h] != 0) {
            throw std::invalid_argument("edge half-edge carries a marking");
        }
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != static_cast<int>(i) + 1) throw std::invalid_argument("markings are not exactly 1..n");
    // connectivity
    std::vector<int> comp(vn);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (auto [a, b] : edges()) comp[find(vertex_of[a])] = find(vertex_of[b]);
    for (int v = 0; v < vn; ++v)
        if (find(v) != find(0)) throw std::invalid_argument("graph is not connected");
    for (int v = 0; v < vn; ++v)
        if (2 * genus[v] - 2 + valence(v) <= 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is unstable");
}

bool StableGraph::is_valid() const {
    try {
        validate();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

StableGraph StableGraph::from_edges(std::vector<int> genera, const std::vector<std::pair<int, int>>& edge_list,
                                    const std::vector<int>& leg_vertices) {
    StableGraph g;
    g.genus = std::move(genera);
    for (std::size_t i = 0; i < leg_vertices.size(); ++i) {
        int h = g.num_half_edges();
        g.vertex_of.push_back(leg_vertices[i]);
        g.partner.push_back(h);
        g.marking.push_back(static_cast<int>(i) + 1);
    }
    for (auto [a, b] : edge_list) {
        int h = g.num_half_edges();
        g.vertex_of.push_back(a);
        g.vertex_of.push_back(b);
        g.partner.push_back(h + 1);
        g.partner.push_back(h);
        g.marking.push_back(0);
        g.marking.push_back(0);
    }
    g.validate();
    return g;
}

StableGraph StableGraph::single_vertex(int g, int n) {
    return from_edges({g}, {}, std::vector<int>(n, 0));
}

int genus(const StableGraph& gr) { return gr.total_genus(); }

Decoration Decoration::trivial(const StableGraph& gr) {
    Decoration d;
    d.kappa.assign(gr.num_vertices(), {});
    d.psi.assign(gr.num_half_edges(), 0);
    return d;
}

int Decoration::vertex_degree(const StableGraph& gr, int v) const {
    int s = std::accumulate(kappa[v].begin(), kappa[v].end(), 0);
    for (int h = 0; h < gr.num_half_edges(); ++h)
        if (gr.vertex_of[h] == v) s += psi[h];
    return s;
}

int Decoration::degree() const {
    int s = std::accumulate(psi.begin(), psi.end(), 0);
    for (const auto& k : kappa) s = std::accumulate(k.begin(), k.end(), s);
    return s;
}

namespace {

std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sigs) {
    std::map<std::vector<int>, int> ranks;
    for (const auto& s : sigs) ranks.emplace(s, 0);
    int r = 0;
    for (auto& [s, x] : ranks) x = r++;
    std::vector<int> out(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i) out[i] = ranks[sigs[i]];
    return out;
}

int count_classes(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

struct Canonizer {
    const StableGraph& g;
    const Decoration& d;
    std::vector<std::vector<int>> inc;
    std::vector<int> legs;  // half-edge of marking i+1
    std::vector<int> best;
    std::vector<std::vector<int>> leaves;

    Canonizer(const StableGraph& gr, const Decoration& dec) : g(gr), d(dec), inc(gr.num_vertices()) {
        for (int h = 0; h < g.num_half_edges(); ++h) inc[g.vertex_of[h]].push_back(h);
        legs.assign(g.num_legs(), -1);
        for (int h = 0; h < g.num_half_edges(); ++h)
            if (g.is_leg(h)) legs[g.marking[h] - 1] = h;
    }

    std::vector<int> initial_colors() const {
        std::vector<std::vector<int>> sigs(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) {
            auto& s = sigs[v];
            s.push_back(g.genus[v]);
            s.push_back(static_cast<int>(inc[v].size()));
            s.push_back(static_cast<int>(d.kappa[v].size()));
            s.insert(s.end(), d.kappa[v].begin(), d.kappa[v].end());
            std::vector<std::pair<int, int>> lg, loops;
            for (int h : inc[v]) {
                int p = g.partner[h];
                if (p == h) lg.emplace_back(g.marking[h], d.psi[h]);
                else if (g.vertex_of[p] == v && h < p) loops.emplace_back(std::min(d.psi[h], d.psi[p]), std::max(d.psi[h], d.psi[p]));
            }
            std::sort(lg.begin(), lg.end());
            std::sort(loops.begin(), loops.end());
            s.push_back(static_cast<int>(lg.size()));
            for (auto [a, b] : lg) s.insert(s.end(), {a, b});
            s.push_back(static_cast<int>(loops.size()));
            for (auto [a, b] : loops) s.insert(s.end(), {a, b});
        }
        return rank_signatures(sigs);
    }

    std::vector<int> refine(std::vector<int> colors) const {
        int classes = count_classes(colors);
        while (true) {
            std::vector<std::vector<int>> sigs(g.num_vertices());
            for (int v = 0; v < g.num_vertices(); ++v) {
                std::vector<std::array<int, 3>> nb;
                for (int h : inc[v]) {
                    int p = g.partner[h];
                    if (p == h || g.vertex_of[p] == v) continue;
                    nb.push_back({colors[g.vertex_of[p]], d.psi[h], d.psi[p]});
                }
                std::sort(nb.begin(), nb.end());
                auto& s = sigs[v];
                s.push_back(colors[v]);
                for (const auto& t : nb) s.insert(s.end(), t.begin(), t.end());
            }
            auto next = rank_signatures(sigs);
            int c = count_classes(next);
            colors = std::move(next);
            if (c == classes) return colors;
            classes = c;
        }
    }

    // Edge records (pos_a, pos_b, psi_a, psi_b, h_a, h_b) under an ordering.
    std::vector<std::array<int, 6>> edge_records(const std::vector<int>& pos) const {
        std::vector<std::array<int, 6>> recs;
        for (int h = 0; h < g.num_half_edges(); ++h) {
            int p = g.partner[h];
            if (p <= h) continue;
            int a = h, b = p;
            int pa = pos[g.vertex_of[a]], pb = pos[g.vertex_of[b]];
            if (pa > pb || (pa == pb && d.psi[a] > d.psi[b])) {
                std::swap(a, b);
                std::swap(pa, pb);
            }
            recs.push_back({pa, pb, d.psi[a], d.psi[b], a, b});
        }
        std::sort(recs.begin(), recs.end(), [](const auto& x, const auto& y) {
            return std::lexicographical_compare(x.begin(), x.begin() + 4, y.begin(), y.begin() + 4);
        });
        return recs;
    }

    std::vector<int> code(const std::vector<int>& pos) const {
        const int vn = g.num_vertices();
        std::vector<int> at(vn);
        for (int v = 0; v < vn; ++v) at[pos[v]] = v;
        std::vector<int> c{vn, static_cast<int>(legs.size()), g.num_edges()};
        for (int p = 0; p < vn; ++p) {
            int v = at[p];
            c.push_back(g.genus[v]);
            c.push_back(static_cast<int>(d.kappa[v].size()));
            c.insert(c.end(), d.kappa[v].begin(), d.kappa[v].end());
        }
        for (int h : legs) {
            c.push_back(pos[g.vertex_of[h]]);
            c.push_back(d.psi[h]);
        }
        for (const auto& r : edge_records(pos)) c.insert(c.end(), r.begin(), r.begin() + 4);
        return c;
    }

    void search(std::vector<int> colors) {
        colors = refine(std::move(colors));
        const int vn = g.num_vertices();
        std::vector<int> size(vn, 0);
        for (int c : colors) ++size[c];
        int target = -1;
        for (int c = 0; c < vn; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            auto cd = code(colors);
            if (best.empty() || cd < best) {
                best = std::move(cd);
                leaves.assign(1, colors);
            } else if (cd == best) {
                leaves.push_back(colors);
            }
            return;
        }
        for (int w = 0; w < vn; ++w) {
            if (colors[w] != target) continue;
            std::vector<int> next(colors);
            for (int u = 0; u < vn; ++u) {
                if (colors[u] > target) ++next[u];
                else if (colors[u] == target && u != w) next[u] = target + 1;
            }
            search(std::move(next));
        }
    }
};

std::int64_t factorial64(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

CanonicalForm canonicalize(const StableGraph& gr, const Decoration& deco) {
    if (static_cast<int>(deco.kappa.size()) != gr.num_vertices() ||
        static_cast<int>(deco.psi.size()) != gr.num_half_edges())
        throw std::invalid_argument("decoration shape does not match graph");
    Canonizer cz(gr, deco);
    cz.search(cz.initial_colors());

    CanonicalForm cf;
    cf.code = cz.best;
    cf.min_orderings = cz.leaves;
    const auto& pos = cz.leaves.front();
    const int vn = gr.num_vertices();
    const int hn = gr.num_half_edges();
    const int n = static_cast<int>(cz.legs.size());

    StableGraph& c = cf.graph;
    c.genus.assign(vn, 0);
    c.vertex_of.assign(hn, 0);
    c.partner.assign(hn, 0);
    c.marking.assign(hn, 0);
    cf.deco.kappa.assign(vn, {});
    cf.deco.psi.assign(hn, 0);
    cf.vertex_map = pos;
    cf.half_edge_map.assign(hn, -1);
    for (int v = 0; v < vn; ++v) {
        c.genus[pos[v]] = gr.genus[v];
        cf.deco.kappa[pos[v]] = deco.kappa[v];
    }
    for (int i = 0; i < n; ++i) {
        int h = cz.legs[i];
        c.vertex_of[i] = pos[gr.vertex_of[h]];
        c.partner[i] = i;
        c.marking[i] = i + 1;
        cf.deco.psi[i] = deco.psi[h];
        cf.half_edge_map[h] = i;
    }
    auto recs = cz.edge_records(pos);
    for (std::size_t k = 0; k < recs.size(); ++k) {
        const auto& r = recs[k];
        int a = n + 2 * static_cast<int>(k), b = a + 1;
        c.vertex_of[a] = r[0];
        c.vertex_of[b] = r[1];
        c.partner[a] = b;
        c.partner[b] = a;
        cf.deco.psi[a] = r[2];
        cf.deco.psi[b] = r[3];
        cf.half_edge_map[r[4]] = a;
        cf.half_edge_map[r[5]] = b;
    }

    // Automorphisms fixing every vertex: permute identical parallel edges,
    // flip loops whose two ends look alike.
    std::int64_t fixers = 1;
    for (std::size_t k = 0; k < recs.size();) {
        std::size_t j = k;
        while (j < recs.size() && std::equal(recs[j].begin(), recs[j].begin() + 4, recs[k].begin())) ++j;
        fixers *= factorial64(static_cast<int>(j - k));
        if (recs[k][0] == recs[k][1] && recs[k][2] == recs[k][3]) fixers <<= (j - k);
        k = j;
    }
    cf.aut_order = static_cast<std::int64_t>(cz.leaves.size()) * fixers;
    return cf;
}

CanonicalForm canonicalize(const StableGraph& gr) { return canonicalize(gr, Decoration::trivial(gr)); }

std::int64_t aut_order(const StableGraph& gr) { return canonicalize(gr).aut_order; }

std::vector<std::vector<int>> isomorphisms(const StableGraph& a, const Decoration& da, const StableGraph& b,
                                           const Decoration& db) {
    std::vector<std::vector<int>> out;
    if (a.num_vertices() != b.num_vertices() || a.num_half_edges() != b.num_half_edges()) return out;
    CanonicalForm ca = canonicalize(a, da), cb = canonicalize(b, db);
    if (ca.code != cb.code) return out;
    const int vn = a.num_vertices();
    const int hn = a.num_half_edges();
    const auto& pa = ca.min_orderings.front();

    // half-edges of b grouped by their vertex
    std::vector<std::vector<int>> b_inc(vn);
    for (int h = 0; h < hn; ++h) b_inc[b.vertex_of[h]].push_back(h);
    std::vector<int> a_edge_half;  // one half-edge per edge of a
    for (int h = 0; h < hn; ++h)
        if (!a.is_leg(h) && a.partner[h] > h) a_edge_half.push_back(h);

    for (const auto& pb : cb.min_orderings) {
        std::vector<int> at_b(vn);
        for (int v = 0; v < vn; ++v) at_b[pb[v]] = v;
        std::vector<int> phi(vn);
        for (int v = 0; v < vn; ++v) phi[v] = at_b[pa[v]];

        std::vector<int> map(hn, -1);
        std::vector<bool> used(hn, false);
        bool ok = true;
        for (int h = 0; h < hn && ok; ++h) {
            if (!a.is_leg(h)) continue;
            int t = b.leg_of_marking(a.marking[h]);
            if (b.vertex_of[t] != phi[a.vertex_of[h]] || da.psi[h] != db.psi[t]) ok = false;
            map[h] = t;
            used[t] = true;
        }
        if (!ok) continue;
        std::function<void(std::size_t)> assign = [&](std::size_t k) {
            if (k == a_edge_half.size()) {
                out.push_back(map);
                return;
            }
            int h = a_edge_half[k], hp = a.partner[h];
            int tv = phi[a.vertex_of[h]], tw = phi[a.vertex_of[hp]];
            for (int t : b_inc[tv]) {
                if (used[t] || b.is_leg(t)) continue;
                int tp = b.partner[t];
                if (b.vertex_of[tp] != tw || used[tp]) continue;
                if (da.psi[h] != db.psi[t] || da.psi[hp] != db.psi[tp]) continue;
                map[h] = t;
                map[hp] = tp;
                used[t] = used[tp] = true;
                assign(k + 1);
                used[t] = used[tp] = false;
                map[h] = map[hp] = -1;
            }
        };
        assign(0);
    }
    return out;
}

std::vector<std::vector<int>> isomorphisms(const StableGraph& a, const StableGraph& b) {
    return isomorphisms(a, Decoration::trivial(a), b, Decoration::trivial(b));
}

Substitution insert_at_vertex(const StableGraph& gr, int v, const StableGraph& inner,
                              const std::vector<int>& leg_matching) {
    if (inner.total_genus() != gr.genus.at(v))
        throw std::invalid_argument("inserted graph has genus " + std::to_string(inner.total_genus()) +
                                    ", vertex has genus " + std::to_string(gr.genus[v]));
    auto at_v = gr.half_edges_at(v);
    if (inner.num_legs() != static_cast<int>(at_v.size()) || leg_matching.size() != at_v.size())
        throw std::invalid_argument("inserted graph leg count does not match vertex valence");
    {
        auto s = leg_matching;
        std::sort(s.begin(), s.end());
        if (s != at_v) throw std::invalid_argument("leg matching is not a bijection onto the vertex half-edges");
    }
    Substitution s;
    StableGraph& r = s.graph;
    r = gr;
    const int vn = gr.num_vertices();
    s.outer_vertex.resize(vn);
    for (int u = 0; u < vn; ++u) s.outer_vertex[u] = u == v ? -1 : u;
    s.inner_vertex.resize(inner.num_vertices());
    for (int j = 0; j < inner.num_vertices(); ++j) {
        if (j == 0) {
            s.inner_vertex[j] = v;
            r.genus[v] = inner.genus[0];
        } else {
            s.inner_vertex[j] = static_cast<int>(r.genus.size());
            r.genus.push_back(inner.genus[j]);
        }
    }
    s.inner_half_edge.assign(inner.num_half_edges(), -1);
    for (int h = 0; h < inner.num_half_edges(); ++h) {
        if (!inner.is_leg(h)) continue;
        int outer = leg_matching[inner.marking[h] - 1];
        s.inner_half_edge[h] = outer;
        r.vertex_of[outer] = s.inner_vertex[inner.vertex_of[h]];
    }
    for (int h = 0; h < inner.num_half_edges(); ++h) {
        if (inner.is_leg(h)) continue;
        s.inner_half_edge[h] = r.num_half_edges();
        r.vertex_of.push_back(s.inner_vertex[inner.vertex_of[h]]);
        r.partner.push_back(-1);
        r.marking.push_back(0);
    }
    for (int h = 0; h < inner.num_half_edges(); ++h)
        if (!inner.is_leg(h)) r.partner[s.inner_half_edge[h]] = s.inner_half_edge[inner.partner[h]];
    return s;
}

StableGraph glue_legs(const StableGraph& gr, int marking_a, int marking_b) {
    if (marking_a == marking_b) throw std::invalid_argument("cannot glue a leg to itself");
    int ha = gr.leg_of_marking(marking_a), hb = gr.leg_of_marking(marking_b);
    StableGraph r = gr;
    r.partner[ha] = hb;
    r.partner[hb] = ha;
    r.marking[ha] = r.marking[hb] = 0;
    for (int h = 0; h < r.num_half_edges(); ++h) {
        if (!r.is_leg(h)) continue;
        int m = gr.marking[h];
        r.marking[h] = m - (m > marking_a) - (m > marking_b);
    }
    return r;
}

Contraction contract_edges(const StableGraph& gr, const std::vector<bool>& contract) {
    auto es = gr.edges();
    if (contract.size() != es.size()) throw std::invalid_argument("contraction mask has wrong length");
    const int vn = gr.num_vertices();
    std::vector<int> parent(vn);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t k = 0; k < es.size(); ++k)
        if (contract[k]) {
            int a = find(gr.vertex_of[es[k].first]), b = find(gr.vertex_of[es[k].second]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    Contraction c;
    c.vertex_map.assign(vn, -1);
    std::vector<int> root_index(vn, -1);
    int next = 0;
    for (int v = 0; v < vn; ++v) {
        int r = find(v);
        if (root_index[r] < 0) root_index[r] = next++;
        c.vertex_map[v] = root_index[r];
    }
    c.graph.genus.assign(next, 0);
    std::vector<int> comp_vertices(next, 0), comp_edges(next, 0);
    for (int v = 0; v < vn; ++v) {
        c.graph.genus[c.vertex_map[v]] += gr.genus[v];
        ++comp_vertices[c.vertex_map[v]];
    }
    for (std::size_t k = 0; k < es.size(); ++k)
        if (contract[k]) ++comp_edges[c.vertex_map[gr.vertex_of[es[k].first]]];
    for (int i = 0; i < next; ++i) c.graph.genus[i] += comp_edges[i] - comp_vertices[i] + 1;

    std::vector<bool> dead(gr.num_half_edges(), false);
    for (std::size_t k = 0; k < es.size(); ++k)
        if (contract[k]) dead[es[k].first] = dead[es[k].second] = true;
    c.half_edge_map.assign(gr.num_half_edges(), -1);
    int hn = 0;
    for (int h = 0; h < gr.num_half_edges(); ++h)
        if (!dead[h]) c.half_edge_map[h] = hn++;
    c.graph.vertex_of.resize(hn);
    c.graph.partner.resize(hn);
    c.graph.marking.resize(hn);
    for (int h = 0; h < gr.num_half_edges(); ++h) {
        int t = c.half_edge_map[h];
        if (t < 0) continue;
        c.graph.vertex_of[t] = c.vertex_map[gr.vertex_of[h]];
        c.graph.partner[t] = c.half_edge_map[gr.partner[h]];
        c.graph.marking[t] = gr.marking[h];
    }
    return c;
}

std::string describe(const StableGraph& gr) {
    std::string s = "V[";
    for (int v = 0; v < gr.num_vertices(); ++v) s += (v ? "," : "") + std::string("g") + std::to_string(gr.genus[v]);
    s += "] E[";
    bool first = true;
    for (auto [a, b] : gr.edges()) {
        s += (first ? "" : ",") + std::to_string(gr.vertex_of[a]) + "-" + std::to_string(gr.vertex_of[b]);
        first = false;
    }
    s += "] L[";
    first = true;
    for (int h = 0; h < gr.num_half_edges(); ++h)
        if (gr.is_leg(h)) {
            s += (first ? "" : ",") + std::to_string(gr.marking[h]) + "@" + std::to_string(gr.vertex_of[h]);
            first = false;
        }
    return s + "]";
}

}  // namespace taut
