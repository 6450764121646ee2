#include "taut/strata.hpp"

#include "taut/graph_enum.hpp"
#include "taut/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace taut {

DecoratedStratum DecoratedStratum::make(const StableGraph& gr, const Decoration& d) {
    auto cf = canonicalize(gr, d);
    return DecoratedStratum{std::move(cf.graph), std::move(cf.deco), std::move(cf.code)};
}

void StrataElement::check_ambient(const StrataElement& o) const {
    if (g_ != o.g_ || n_ != o.n_)
        throw std::invalid_argument("strata elements live on different spaces (" + std::to_string(g_) + "," +
                                    std::to_string(n_) + ") vs (" + std::to_string(o.g_) + "," +
                                    std::to_string(o.n_) + ")");
}

void StrataElement::add(const DecoratedStratum& s, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void StrataElement::add(const StableGraph& gr, const Decoration& d, const Rational& c) {
    if (c == 0 || !deco_fits(gr, d)) return;
    add(DecoratedStratum::make(gr, d), c);
}

Rational StrataElement::coeff(const DecoratedStratum& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

StrataElement& StrataElement::operator+=(const StrataElement& o) {
    check_ambient(o);
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

StrataElement& StrataElement::operator-=(const StrataElement& o) {
    check_ambient(o);
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

StrataElement& StrataElement::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [s, x] : terms_) x *= c;
    return *this;
}

bool StrataElement::operator==(const StrataElement& o) const {
    return g_ == o.g_ && n_ == o.n_ && terms_ == o.terms_;
}

StrataElement StrataElement::degree_part(int d) const {
    StrataElement r(g_, n_);
    for (const auto& [s, c] : terms_)
        if (s.degree() == d) r.terms_.emplace(s, c);
    return r;
}

int StrataElement::degree() const {
    int d = -1;
    for (const auto& [s, c] : terms_) {
        if (d == -1) d = s.degree();
        else if (d != s.degree()) return -2;
    }
    return d;
}

StrataElement fundamental_class(int g, int n) {
    StrataElement x(g, n);
    auto gr = StableGraph::single_vertex(g, n);
    x.add(gr, Decoration::trivial(gr), 1);
    return x;
}

namespace {

// All decorations of exactly the given degree with vertex degrees within dims.
void enumerate_decorations(const StableGraph& gr, int degree, const std::function<void(const Decoration&)>& emit) {
    Decoration d = Decoration::trivial(gr);
    std::vector<std::vector<int>> inc(gr.num_vertices());
    for (int v = 0; v < gr.num_vertices(); ++v) inc[v] = gr.half_edges_at(v);

    std::function<void(int, int)> per_vertex;
    // distribute `left` psi units over the half-edges inc[v][i..]
    std::function<void(int, std::size_t, int, int)> psi_rec = [&](int v, std::size_t i, int left, int rest) {
        if (i == inc[v].size()) {
            if (left == 0) per_vertex(v + 1, rest);
            return;
        }
        for (int e = (i + 1 == inc[v].size() ? left : 0); e <= left; ++e) {
            d.psi[inc[v][i]] = e;
            psi_rec(v, i + 1, left - e, rest);
        }
        d.psi[inc[v][i]] = 0;
    };
    per_vertex = [&](int v, int remaining) {
        if (v == gr.num_vertices()) {
            if (remaining == 0) emit(d);
            return;
        }
        int cap = std::min(remaining, gr.vertex_dim(v));
        for (int dv = 0; dv <= cap; ++dv) {
            if (v + 1 == gr.num_vertices() && dv != remaining) continue;
            for (int kd = 0; kd <= dv; ++kd) {
                if (inc[v].empty() && kd != dv) continue;
                for (const auto& p : partitions(kd)) {
                    d.kappa[v] = p.parts;
                    std::reverse(d.kappa[v].begin(), d.kappa[v].end());
                    psi_rec(v, 0, dv - kd, remaining - dv);
                }
            }
        }
        d.kappa[v].clear();
    };
    per_vertex(0, degree);
}

}  // namespace

std::vector<DecoratedStratum> basis(int g, int n, int d) {
    if (2 * g - 2 + n <= 0) throw std::invalid_argument("basis: unstable (g, n)");
    if (d < 0 || d > 3 * g - 3 + n)
        throw std::out_of_range("basis: degree " + std::to_string(d) + " outside 0.." + std::to_string(3 * g - 3 + n));
    std::map<std::vector<int>, DecoratedStratum> found;
    for (const auto& gc : enumerate_graph_classes(g, n, d)) {
        enumerate_decorations(gc.graph, d - gc.graph.num_edges(), [&](const Decoration& dec) {
            auto s = DecoratedStratum::make(gc.graph, dec);
            found.emplace(s.key, std::move(s));
        });
    }
    std::vector<DecoratedStratum> out;
    out.reserve(found.size());
    for (auto& [k, s] : found) out.push_back(std::move(s));
    return out;
}

std::map<std::vector<int>, int> basis_index(const std::vector<DecoratedStratum>& b) {
    std::map<std::vector<int>, int> idx;
    for (std::size_t i = 0; i < b.size(); ++i) idx.emplace(b[i].key, static_cast<int>(i));
    return idx;
}

StrataElement restrict(const StrataElement& x, Locus locus) {
    StrataElement r(x.g(), x.n());
    for (const auto& [s, c] : x.terms()) {
        const auto& gr = s.graph;
        bool keep = false;
        switch (locus) {
            case Locus::smooth: keep = gr.num_edges() == 0; break;
            case Locus::compact_type: keep = gr.is_tree(); break;
            case Locus::rational_tails:
                keep = gr.is_tree() && std::count(gr.genus.begin(), gr.genus.end(), x.g()) == 1;
                break;
        }
        if (keep) r.add(s, c);
    }
    return r;
}

StrataElement multiply_psi(const StrataElement& x, int marking, int power) {
    if (marking < 1 || marking > x.n()) throw std::out_of_range("multiply_psi: no marking " + std::to_string(marking));
    StrataElement r(x.g(), x.n());
    for (const auto& [s, c] : x.terms()) {
        Decoration d = s.deco;
        d.psi[s.graph.leg_of_marking(marking)] += power;
        r.add(s.graph, d, c);
    }
    return r;
}

DecoPoly pullback_monomial(const StableGraph& gr, const Monomial& mono) {
    const int n = gr.num_legs();
    if (static_cast<int>(mono.psi.size()) > n) throw std::invalid_argument("monomial has more psi factors than legs");
    DecoPoly cur;
    Decoration base = Decoration::trivial(gr);
    for (std::size_t i = 0; i < mono.psi.size(); ++i) base.psi[gr.leg_of_marking(static_cast<int>(i) + 1)] = mono.psi[i];
    cur[base] = 1;
    const Rational kappa0 = 2 * gr.total_genus() - 2 + n;
    for (int a : mono.kappa) {
        DecoPoly next;
        for (const auto& [d, c] : cur) {
            if (a == 0) {
                deco_add(next, d, c * kappa0);
                continue;
            }
            for (int v = 0; v < gr.num_vertices(); ++v) {
                Decoration e = d;
                e.kappa[v].push_back(a);
                std::sort(e.kappa[v].begin(), e.kappa[v].end());
                if (deco_fits(gr, e)) deco_add(next, e, c);
            }
        }
        cur.swap(next);
    }
    for (auto it = cur.begin(); it != cur.end();) it = deco_fits(gr, it->first) ? std::next(it) : cur.erase(it);
    return cur;
}

StrataElement monomial_class(int g, int n, const Monomial& mono) {
    StrataElement x(g, n);
    auto gr = StableGraph::single_vertex(g, n);
    for (const auto& [d, c] : pullback_monomial(gr, mono)) x.add(gr, d, c);
    return x;
}

StrataElement xi_pushforward(const StableGraph& gr, const std::vector<StrataElement>& vertex_classes) {
    const int vn = gr.num_vertices();
    if (static_cast<int>(vertex_classes.size()) != vn)
        throw std::invalid_argument("xi_pushforward: need one class per vertex");
    std::vector<std::vector<int>> inc(vn);
    for (int v = 0; v < vn; ++v) {
        inc[v] = gr.half_edges_at(v);
        if (vertex_classes[v].g() != gr.genus[v] || vertex_classes[v].n() != static_cast<int>(inc[v].size()))
            throw std::invalid_argument("xi_pushforward: class at vertex " + std::to_string(v) + " lives on the wrong space");
    }
    StrataElement out(gr.total_genus(), gr.num_legs());
    std::vector<std::pair<const DecoratedStratum*, Rational>> pick(vn);
    std::function<void(int)> rec = [&](int v) {
        if (v == vn) {
            StableGraph cur = gr;
            Decoration dec = Decoration::trivial(gr);
            Rational coeff = 1;
            // Substitute from the highest vertex down so lower indices stay put.
            for (int u = vn - 1; u >= 0; --u) {
                const auto& s = *pick[u].first;
                coeff *= pick[u].second;
                auto sub = insert_at_vertex(cur, u, s.graph, inc[u]);
                Decoration nd = Decoration::trivial(sub.graph);
                for (int w = 0; w < cur.num_vertices(); ++w)
                    if (w != u) nd.kappa[w] = dec.kappa[w];
                for (int h = 0; h < cur.num_half_edges(); ++h) nd.psi[h] = dec.psi[h];
                for (int j = 0; j < s.graph.num_vertices(); ++j) nd.kappa[sub.inner_vertex[j]] = s.deco.kappa[j];
                for (int h = 0; h < s.graph.num_half_edges(); ++h) nd.psi[sub.inner_half_edge[h]] += s.deco.psi[h];
                cur = std::move(sub.graph);
                dec = std::move(nd);
            }
            out.add(cur, dec, coeff);
            return;
        }
        for (const auto& [s, c] : vertex_classes[v].terms()) {
            pick[v] = {&s, c};
            rec(v + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace taut
