#include "taut/decoration.hpp"

#include <algorithm>

namespace taut {

Decoration deco_mul(const Decoration& a, const Decoration& b) {
    Decoration r = a;
    for (std::size_t v = 0; v < r.kappa.size(); ++v) {
        if (b.kappa[v].empty()) continue;
        auto& k = r.kappa[v];
        k.insert(k.end(), b.kappa[v].begin(), b.kappa[v].end());
        std::sort(k.begin(), k.end());
    }
    for (std::size_t h = 0; h < r.psi.size(); ++h) r.psi[h] += b.psi[h];
    return r;
}

bool deco_fits(const StableGraph& gr, const Decoration& d) {
    for (int v = 0; v < gr.num_vertices(); ++v)
        if (d.vertex_degree(gr, v) > gr.vertex_dim(v)) return false;
    return true;
}

void deco_add(DecoPoly& into, const Decoration& d, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = into.try_emplace(d, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

DecoPoly deco_multiply(const StableGraph& gr, const DecoPoly& a, const DecoPoly& b, int max_degree) {
    DecoPoly r;
    for (const auto& [da, ca] : a) {
        int dega = da.degree();
        if (dega > max_degree) continue;
        for (const auto& [db, cb] : b) {
            if (dega + db.degree() > max_degree) continue;
            Decoration m = deco_mul(da, db);
            if (!deco_fits(gr, m)) continue;
            deco_add(r, m, ca * cb);
        }
    }
    return r;
}

DecoPoly psi_factor(const StableGraph& gr, int h, const std::vector<Rational>& c) {
    DecoPoly r;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Decoration d = Decoration::trivial(gr);
        d.psi[h] = static_cast<int>(i);
        deco_add(r, d, c[i]);
    }
    return r;
}

DecoPoly edge_factor(const StableGraph& gr, int h, int hp, const std::vector<std::vector<Rational>>& c) {
    DecoPoly r;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c[i].size(); ++j) {
            Decoration d = Decoration::trivial(gr);
            d.psi[h] = static_cast<int>(i);
            d.psi[hp] = static_cast<int>(j);
            deco_add(r, d, c[i][j]);
        }
    return r;
}

DecoPoly kappa_factor(const StableGraph& gr, int v, const std::map<std::vector<int>, Rational>& kp) {
    DecoPoly r;
    for (const auto& [k, c] : kp) {
        Decoration d = Decoration::trivial(gr);
        d.kappa[v] = k;
        deco_add(r, d, c);
    }
    return r;
}

}  // namespace taut
