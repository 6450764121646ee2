#include "taut/dr.hpp"

#include "taut/graph_enum.hpp"
#include "taut/parallel.hpp"

#include <functional>
#include <numeric>

namespace taut {

namespace {

int mod(long long a, int r) { return static_cast<int>(((a % r) + r) % r); }

void check_ramification(const std::vector<int>& s) {
    if (std::accumulate(s.begin(), s.end(), 0LL) != 0) throw std::invalid_argument("ramification vector must sum to zero");
}

// Spanning tree data: weights on one half-edge of each non-tree edge are
// free, tree edges are then forced leaf-first.
struct WeightingSolver {
    const StableGraph& gr;
    std::vector<int> free_half;  // one half-edge per non-tree edge
    std::vector<int> order;      // BFS order of vertices
    std::vector<int> up;         // half-edge at v towards its parent, -1 at the root

    explicit WeightingSolver(const StableGraph& g) : gr(g) {
        const int vn = gr.num_vertices();
        up.assign(vn, -1);
        std::vector<bool> seen(vn, false), tree_half(gr.num_half_edges(), false);
        order.push_back(0);
        seen[0] = true;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int v = order[i];
            for (int h : gr.half_edges_at(v)) {
                if (gr.is_leg(h)) continue;
                int w = gr.vertex_of[gr.partner[h]];
                if (seen[w]) continue;
                seen[w] = true;
                up[w] = gr.partner[h];
                tree_half[h] = tree_half[gr.partner[h]] = true;
                order.push_back(w);
            }
        }
        if (static_cast<int>(order.size()) != vn) throw std::invalid_argument("weightings: graph is not connected");
        for (auto [h, hp] : gr.edges())
            if (!tree_half[h]) free_half.push_back(h);
    }

    void run(const std::vector<int>& s, int r, const std::function<void(const std::vector<int>&)>& fn) const {
        std::vector<int> w(gr.num_half_edges(), 0);
        for (int h = 0; h < gr.num_half_edges(); ++h)
            if (gr.is_leg(h)) w[h] = mod(s.at(gr.marking[h] - 1), r);
        std::vector<int> x(free_half.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                w[free_half[i]] = x[i];
                w[gr.partner[free_half[i]]] = mod(-x[i], r);
            }
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                int v = *it;
                if (up[v] < 0) continue;
                long long sum = 0;
                for (int h : gr.half_edges_at(v))
                    if (h != up[v]) sum += w[h];
                w[up[v]] = mod(-sum, r);
                w[gr.partner[up[v]]] = mod(sum, r);
            }
            fn(w);
            std::size_t i = 0;
            while (i < x.size() && ++x[i] == r) x[i++] = 0;
            if (i == x.size()) break;
        }
    }
};

// Exponent vectors j (one per edge) with sum <= m.
std::vector<std::vector<int>> exponent_vectors(int k, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> j(k, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k) {
            out.push_back(j);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            j[i] = x;
            rec(i + 1, left - x);
        }
        j[i] = 0;
    };
    rec(0, m);
    return out;
}

// sum over weightings mod r of prod_e (w w')^{j_e + 1}, divided by r^{h1}.
std::vector<Rational> moments(const StableGraph& gr, const WeightingSolver& solver,
                              const std::vector<std::vector<int>>& js, const std::vector<int>& s, int r, int m) {
    const auto es = gr.edges();
    std::vector<mpz_class> acc(js.size(), 0);
    std::vector<std::vector<mpz_class>> pw(es.size(), std::vector<mpz_class>(m + 2));
    solver.run(s, r, [&](const std::vector<int>& w) {
        for (std::size_t e = 0; e < es.size(); ++e) {
            mpz_class c = static_cast<long>(w[es[e].first]) * static_cast<long>(w[es[e].second]);
            pw[e][0] = 1;
            for (int p = 1; p <= m + 1; ++p) pw[e][p] = pw[e][p - 1] * c;
        }
        for (std::size_t t = 0; t < js.size(); ++t) {
            mpz_class prod = 1;
            for (std::size_t e = 0; e < es.size() && prod != 0; ++e) prod *= pw[e][js[t][e] + 1];
            acc[t] += prod;
        }
    });
    mpz_class scale = 1;
    for (int i = 0; i < gr.h1(); ++i) scale *= r;
    std::vector<Rational> out;
    for (auto& a : acc) {
        mpq_class q(a, scale);
        q.canonicalize();
        out.emplace_back(q);
    }
    return out;
}

Rational lagrange(const std::vector<int>& xs, const std::vector<Rational>& ys, int x) {
    Rational total = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rational term = ys[i];
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (j != i) term *= Rational(x - xs[j]) / Rational(xs[i] - xs[j]);
        total += term;
    }
    return total;
}

// Sum over exponent vectors of weight * prod_e (-1)^j/(j+1)! (psi + psi')^j, with
// the leg factors exp(s^2 psi), kept in exact decoration degree m.
DecoPoly graph_integrand(const StableGraph& gr, const std::vector<std::vector<int>>& js,
                         const std::vector<Rational>& weight, const std::vector<int>& s, int m) {
    const auto es = gr.edges();
    DecoPoly edges_part;
    for (std::size_t t = 0; t < js.size(); ++t) {
        if (weight[t] == 0) continue;
        Rational c = weight[t];
        DecoPoly acc{{Decoration::trivial(gr), 1}};
        for (std::size_t e = 0; e < es.size() && !acc.empty(); ++e) {
            int j = js[t][e];
            mpz_class fact = 1;
            for (int i = 2; i <= j + 1; ++i) fact *= i;
            c *= Rational(j % 2 ? -1 : 1) / Rational(mpq_class(fact));
            std::vector<std::vector<Rational>> binom(j + 1, std::vector<Rational>(j + 1, 0));
            mpz_class b = 1;
            for (int i = 0; i <= j; ++i) {
                binom[i][j - i] = mpq_class(b);
                b = b * (j - i) / (i + 1);
            }
            acc = deco_multiply(gr, acc, edge_factor(gr, es[e].first, es[e].second, binom), m);
        }
        for (const auto& [dec, x] : acc) deco_add(edges_part, dec, x * c);
    }
    DecoPoly total = edges_part;
    for (int h = 0; h < gr.num_half_edges() && !total.empty(); ++h) {
        if (!gr.is_leg(h)) continue;
        long s2 = static_cast<long>(s[gr.marking[h] - 1]) * s[gr.marking[h] - 1];
        if (s2 == 0) continue;
        std::vector<Rational> ex(m + 1);
        Rational term = 1;
        for (int i = 0; i <= m; ++i) {
            ex[i] = term;
            term *= Rational(s2) / Rational(i + 1);
        }
        total = deco_multiply(gr, total, psi_factor(gr, h, ex), m);
    }
    DecoPoly out;
    for (const auto& [dec, x] : total)
        if (dec.degree() == m) out.emplace(dec, x);
    return out;
}

}  // namespace

std::vector<std::vector<int>> weightings_mod_r(const StableGraph& gr, const std::vector<int>& s, int r) {
    if (r < 1) throw std::invalid_argument("weightings_mod_r: r must be positive");
    if (static_cast<int>(s.size()) != gr.num_legs()) throw std::invalid_argument("weightings_mod_r: wrong number of legs");
    check_ramification(s);
    std::vector<std::vector<int>> out;
    WeightingSolver(gr).run(s, r, [&](const std::vector<int>& w) { out.push_back(w); });
    return out;
}

long long brute_force_weighting_count(const StableGraph& gr, const std::vector<int>& s, int r) {
    const auto es = gr.edges();
    std::vector<int> x(es.size(), 0);
    long long count = 0;
    while (true) {
        std::vector<long long> vsum(gr.num_vertices(), 0);
        for (int h = 0; h < gr.num_half_edges(); ++h)
            if (gr.is_leg(h)) vsum[gr.vertex_of[h]] += s[gr.marking[h] - 1];
        for (std::size_t e = 0; e < es.size(); ++e) {
            vsum[gr.vertex_of[es[e].first]] += x[e];
            vsum[gr.vertex_of[es[e].second]] += r - x[e];
        }
        bool ok = true;
        for (auto v : vsum) ok = ok && mod(v, r) == 0;
        count += ok;
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == r) x[i++] = 0;
        if (i == x.size()) break;
    }
    return count;
}

StrataElement q_class(int g, const std::vector<int>& s, int d, int r) {
    const int n = static_cast<int>(s.size());
    if (2 * g - 2 + n <= 0) throw std::invalid_argument("q_class: unstable (g, n)");
    if (r < 1) throw std::invalid_argument("q_class: r must be positive");
    check_ramification(s);
    StrataElement out(g, n);
    if (d < 0 || d > 3 * g - 3 + n) return out;
    for (int k = 0; k <= d; ++k)
        for (const auto& gc : graphs_with_edges(g, n, k)) {
            const auto& gr = gc.graph;
            WeightingSolver solver(gr);
            auto js = exponent_vectors(k, d - k);
            auto mom = moments(gr, solver, js, s, r, d - k);
            Rational w = Rational(1) / Rational(static_cast<long>(gc.aut_order));
            for (const auto& [dec, c] : graph_integrand(gr, js, mom, s, d - k)) out.add(gr, dec, c * w);
        }
    return out;
}

StrataElement p_class(int g, const std::vector<int>& s, int d, InterpolationReport* report) {
    const int n = static_cast<int>(s.size());
    if (2 * g - 2 + n <= 0) throw std::invalid_argument("p_class: unstable (g, n)");
    check_ramification(s);
    StrataElement out(g, n);
    if (d < 0 || d > 3 * g - 3 + n) return out;
    int smax = 0;
    for (int x : s) smax = std::max(smax, std::abs(x));
    const int r0 = std::max(2 * smax, 2 * d) + 1;

    std::vector<const GraphClass*> graphs;
    for (int k = 0; k <= d; ++k)
        for (const auto& gc : graphs_with_edges(g, n, k)) graphs.push_back(&gc);
    struct Piece {
        DecoPoly poly;
        int fits = 0, max_r = 0;
    };
    std::vector<Piece> pieces(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) {
        const auto& gr = graphs[i]->graph;
        const int k = gr.num_edges(), m = d - k;
        WeightingSolver solver(gr);
        auto js = exponent_vectors(k, m);
        // moments are polynomials in r of degree <= 2d for large r; h1 extra samples as margin
        const int samples = 2 * d + gr.h1() + 1;
        std::vector<int> xs1, xs2;
        for (int t = 0; t < samples; ++t) {
            xs1.push_back(r0 + t);
            xs2.push_back(r0 + samples + t);
        }
        std::vector<std::vector<Rational>> y1, y2;
        for (int r : xs1) y1.push_back(moments(gr, solver, js, s, r, m));
        for (int r : xs2) y2.push_back(moments(gr, solver, js, s, r, m));
        std::vector<Rational> at0(js.size());
        for (std::size_t t = 0; t < js.size(); ++t) {
            std::vector<Rational> a, b;
            for (auto& y : y1) a.push_back(y[t]);
            for (auto& y : y2) b.push_back(y[t]);
            at0[t] = lagrange(xs1, a, 0);
            if (lagrange(xs2, b, 0) != at0[t])
                throw StabilizationError("p_class: constant term differs between sample windows on graph " +
                                         describe(gr));
            for (std::size_t u = 0; u < xs2.size(); ++u)
                if (lagrange(xs1, a, xs2[u]) != b[u])
                    throw StabilizationError("p_class: r-polynomial does not extend to the second window on graph " +
                                             describe(gr));
        }
        pieces[i].poly = graph_integrand(gr, js, at0, s, m);
        pieces[i].fits = static_cast<int>(js.size());
        pieces[i].max_r = xs2.back();
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        Rational w = Rational(1) / Rational(static_cast<long>(graphs[i]->aut_order));
        for (const auto& [dec, c] : pieces[i].poly) out.add(graphs[i]->graph, dec, c * w);
        if (report) {
            report->graphs++;
            report->interpolations += pieces[i].fits;
            report->max_r = std::max(report->max_r, pieces[i].max_r);
        }
    }
    return out;
}

StrataElement dr_cycle(int g, const std::vector<int>& s, InterpolationReport* report) {
    Rational scale = 1;
    for (int i = 0; i < g; ++i) scale /= 2;
    return p_class(g, s, g, report) * scale;
}

StrataElement lambda_class(int g, InterpolationReport* report) {
    if (g < 2) throw std::invalid_argument("lambda_class: genus must be at least 2");
    return dr_cycle(g, {}, report) * Rational(g % 2 ? -1 : 1);
}

StrataElement build_chi(int g, int r) {
    if (r % 2 != 0 || r < 2 || r > g - 1) throw std::invalid_argument("build_chi: need r even with 2 <= r <= g - 1");
    auto gr = StableGraph::single_vertex(g, 2);
    StrataElement out(g, 2);
    for (int a = 0; a <= 2 * g + r; ++a) {
        Decoration dec = Decoration::trivial(gr);
        dec.psi[gr.leg_of_marking(1)] = a;
        dec.psi[gr.leg_of_marking(2)] = 2 * g + r - a;
        out.add(gr, dec, a % 2 ? -1 : 1);
    }
    return out;
}

StrataElement delta_tilde(const StrataElement& x) {
    if (x.n() != 2) throw std::invalid_argument("delta_tilde: class must live on a space with two markings");
    StrataElement out(x.g() + 1, 0);
    for (const auto& [s, c] : x.terms()) out.add(glue_legs(s.graph, 1, 2), s.deco, c);
    return out;
}

}  // namespace taut
