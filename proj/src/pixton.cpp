#include "taut/pixton.hpp"

#include "taut/graph_enum.hpp"
#include "taut/hypergeometric.hpp"

#include <mutex>
#include <numeric>

namespace taut {

namespace {

bool in_locus(const StableGraph& gr, Locus locus) {
    switch (locus) {
        case Locus::smooth: return gr.num_edges() == 0;
        case Locus::compact_type: return gr.is_tree();
        case Locus::rational_tails: {
            if (!gr.is_tree()) return false;
            int big = 0;
            for (int v = 0; v < gr.num_vertices(); ++v) big += gr.genus[v] == gr.total_genus();
            return big == 1;
        }
    }
    return false;
}

// H_a(e T) e^a as coefficients of T^i.
std::vector<Rational> leg_coefficients(int a, int e, int degree) {
    auto h = a == 0 ? h0_coefficients(degree) : h1_coefficients(degree);
    std::vector<Rational> c(degree + 1);
    for (int i = 0; i <= degree; ++i) c[i] = h[i] * (((a + i) % 2 && e < 0) ? -1 : 1);
    return c;
}

std::mutex kappa_mutex;
std::map<std::pair<int, int>, KappaPoly> vertex_kappa_cache;

// kappa(T - T H0(e T)) up to the given degree.
const KappaPoly& vertex_kappa(int e, int degree) {
    std::lock_guard lock(kappa_mutex);
    auto key = std::make_pair(e, degree);
    if (auto it = vertex_kappa_cache.find(key); it != vertex_kappa_cache.end()) return it->second;
    auto h0 = h0_coefficients(degree);
    std::vector<Rational> f(degree + 2, 0);
    for (int k = 2; k <= degree + 1; ++k) f[k] = -h0[k - 1] * (((k - 1) % 2 && e < 0) ? -1 : 1);
    return vertex_kappa_cache.emplace(key, kappa_of_f_poly(f, degree)).first->second;
}

struct PixtonKey {
    int g;
    std::vector<int> a;
    int d;
    int locus;
    auto operator<=>(const PixtonKey&) const = default;
};

std::mutex pixton_mutex;
std::map<PixtonKey, StrataElement> pixton_cache;

}  // namespace

std::vector<std::vector<Rational>> edge_factor_coefficients(int e1, int e2, int degree) {
    const int m = degree + 1;  // numerator degree needed
    auto a1 = leg_coefficients(0, e1, m), b1 = leg_coefficients(1, e1, m);
    auto a2 = leg_coefficients(0, e2, m), b2 = leg_coefficients(1, e2, m);
    // numerator n[i][j]: e1 + e2 - H0(e1 x) e2 H1(e2 y) - e1 H1(e1 x) H0(e2 y); the
    // leg helper already includes the zeta power for H1, so undo it here.
    std::vector<std::vector<Rational>> num(m + 1, std::vector<Rational>(m + 1, 0));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) {
            Rational h1x = b1[i] * e1, h1y = b2[j] * e2;  // H1(e x) without the extra e
            num[i][j] -= a1[i] * e2 * h1y + e1 * h1x * a2[j];
        }
    num[0][0] += e1 + e2;
    std::vector<std::vector<Rational>> q(degree + 1, std::vector<Rational>(degree + 1, 0));
    for (int s = 1; s <= m; ++s) {
        // homogeneous part of degree s divided by (x + y)
        std::vector<Rational> quot(s);
        for (int i = 0; i < s; ++i) quot[i] = num[i][s - i] - (i > 0 ? quot[i - 1] : Rational(0));
        if (quot[s - 1] != num[s][0]) throw std::logic_error("edge numerator is not divisible by psi' + psi''");
        for (int i = 0; i < s; ++i) q[i][s - 1 - i] = quot[i];
    }
    if (num[0][0] != 0) throw std::logic_error("edge numerator has a constant term");
    return q;
}

StrataElement pixton_graph_sum(int g, const std::vector<int>& a, int d, std::optional<Locus> locus) {
    const int n = static_cast<int>(a.size());
    for (int x : a)
        if (x != 0 && x != 1) throw std::invalid_argument("pixton_R: entries of A must be 0 or 1");
    if (2 * g - 2 + n <= 0) throw std::invalid_argument("pixton_R: unstable (g, n)");
    StrataElement out(g, n);
    if (d < 0 || d > 3 * g - 3 + n) return out;
    PixtonKey key{g, a, d, locus ? static_cast<int>(*locus) : -1};
    {
        std::lock_guard lock(pixton_mutex);
        if (auto it = pixton_cache.find(key); it != pixton_cache.end()) return it->second;
    }
    for (int k = 0; k <= d; ++k)
        for (const auto& gc : graphs_with_edges(g, n, k)) {
            const auto& gr = gc.graph;
            if (locus && !in_locus(gr, *locus)) continue;
            const int room = d - k;
            const int nv = gr.num_vertices();
            const auto es = gr.edges();
            DecoPoly total;
            for (unsigned mask = 0; mask < (1u << nv); ++mask) {
                auto eps = [&](int v) { return (mask >> v) & 1u ? -1 : 1; };
                int sign = 1;
                for (int v = 0; v < nv; ++v)
                    if ((gr.genus[v] - 1) % 2 != 0 && eps(v) < 0) sign = -sign;
                DecoPoly acc{{Decoration::trivial(gr), Rational(1)}};
                for (int v = 0; v < nv && !acc.empty(); ++v) {
                    int vd = std::min(room, gr.vertex_dim(v));
                    acc = deco_multiply(gr, acc, kappa_factor(gr, v, vertex_kappa(eps(v), vd)), room);
                }
                for (int h = 0; h < gr.num_half_edges() && !acc.empty(); ++h) {
                    if (!gr.is_leg(h)) continue;
                    int al = a[gr.marking[h] - 1];
                    int e = eps(gr.vertex_of[h]);
                    acc = deco_multiply(gr, acc, psi_factor(gr, h, leg_coefficients(al, e, room)), room);
                }
                for (const auto& [h1, h2] : es) {
                    if (acc.empty()) break;
                    auto c = edge_factor_coefficients(eps(gr.vertex_of[h1]), eps(gr.vertex_of[h2]), room);
                    acc = deco_multiply(gr, acc, edge_factor(gr, h1, h2, c), room);
                }
                for (const auto& [dec, c] : acc)
                    if (dec.degree() == room) deco_add(total, dec, c * sign);
            }
            Rational w = Rational(1) / (Rational(static_cast<long>(gc.aut_order)) * (1L << nv) * (1L << gr.h1()));
            for (const auto& [dec, c] : total) out.add(gr, dec, c * w);
        }
    std::lock_guard lock(pixton_mutex);
    pixton_cache.emplace(std::move(key), out);
    return out;
}

StrataElement pixton_R(int g, const std::vector<int>& a, int d, std::optional<Locus> locus) {
    if (!pixton_parity(g, a, Partition{}, d)) {
        for (int x : a)
            if (x != 0 && x != 1) throw std::invalid_argument("pixton_R: entries of A must be 0 or 1");
        return StrataElement(g, static_cast<int>(a.size()));
    }
    return pixton_graph_sum(g, a, d, locus);
}

bool pixton_in_set(int g, const std::vector<int>& a, const Partition& sigma, int d) {
    return 3 * d > g - 1 + std::accumulate(a.begin(), a.end(), 0) + sigma.size();
}

bool pixton_parity(int g, const std::vector<int>& a, const Partition& sigma, int d) {
    return (g - d - 1 - std::accumulate(a.begin(), a.end(), 0) - sigma.size()) % 2 == 0;
}

StrataElement pixton_R_ext(int g, const std::vector<int>& a, const Partition& sigma, int d,
                           std::optional<Locus> locus) {
    const int n = static_cast<int>(a.size());
    const int l = sigma.length();
    std::vector<int> b;
    int dhat = d;
    for (int x : a) {
        if (x < 0 || x % 3 == 2) throw std::invalid_argument("pixton_R_ext: entries of A must be 0 or 1 mod 3");
        b.push_back(x % 3);
        dhat -= (x - x % 3) / 3;
    }
    for (int s : sigma.parts) {
        if (s % 3 == 2) throw std::invalid_argument("pixton_R_ext: parts of sigma must be 0 or 1 mod 3");
        b.push_back(s % 3);
        dhat -= (s - s % 3) / 3;
    }
    if (dhat < 0) return StrataElement(g, n);
    StrataElement x = pixton_R(g, b, dhat, locus);
    for (int j = 0; j < n; ++j)
        if (a[j] > 1) x = multiply_psi(x, j + 1, (a[j] - b[j]) / 3);
    for (int j = 0; j < l; ++j) x = multiply_psi(x, n + j + 1, 1 + (sigma.parts[j] - b[n + j]) / 3);
    return forget_last(x, l);
}

KappaPoly smooth_kappa_part(const StrataElement& x) {
    KappaPoly out;
    for (const auto& [s, c] : x.terms()) {
        if (s.graph.num_edges() != 0) continue;
        for (int p : s.deco.psi)
            if (p != 0) throw std::invalid_argument("smooth_kappa_part: class has psi decorations");
        out[s.deco.kappa[0]] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace taut
