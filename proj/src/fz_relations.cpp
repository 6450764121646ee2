#include "taut/fz_relations.hpp"

#include "taut/hypergeometric.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace taut {

namespace {

struct SymbolicTable {
    int weight = -1;
    std::map<Partition, KappaPoly> by_sigma;
};

std::mutex table_mutex;
std::map<std::pair<Family, int>, SymbolicTable> tables;

std::vector<int> p_indices(Family f, int w) { return f == Family::fz ? fz_p_indices(w) : ct_p_indices(w); }

// Expands exp(-gamma) at t^d for every sigma of weight <= w.
SymbolicTable build_table(Family family, int d, int w) {
    const Series& lg = family == Family::fz ? log_psi_fz(d, w) : log_psi_ct(d, w);
    auto idx = p_indices(family, w);
    Series shape = lg.empty_like();
    // c_r(p): coefficient of t^r as a series in p alone
    std::vector<Series> c(d + 1, shape);
    for (const auto& [e, x] : lg.terms()) {
        if (e[0] > d) continue;
        auto f = e;
        f[0] = 0;
        c[e[0]].add_term(f, x);
    }
    // (-c_r)^k / k!
    auto powers = [&](const Series& s, int kmax) {
        std::vector<Series> out{shape.constant(1)};
        for (int k = 1; k <= kmax; ++k) out.push_back(out.back() * (-s) * Rational(1, k));
        return out;
    };
    std::vector<std::vector<Series>> pw(d + 1);
    for (int r = 1; r <= d; ++r) pw[r] = powers(c[r], d / r);
    auto e0 = powers(c[0], w);

    SymbolicTable t;
    t.weight = w;
    for (const auto& m : partitions(d)) {
        Series q = shape.constant(1);
        auto mult = m.multiplicities();
        for (int r = 1; r < static_cast<int>(mult.size()); ++r)
            if (mult[r] > 0) q = q * pw[r][mult[r]];
        std::vector<int> base(m.parts.rbegin(), m.parts.rend());
        for (int j = 0; j <= w; ++j) {
            Series prod = q * e0[j];
            for (const auto& [e, x] : prod.terms()) {
                if (e[0] != 0 || x == 0) continue;
                std::vector<int> parts;
                for (std::size_t k = 1; k < e.size(); ++k) parts.insert(parts.end(), e[k], idx[k - 1]);
                std::sort(parts.rbegin(), parts.rend());
                std::vector<int> key(j, 0);
                key.insert(key.end(), base.begin(), base.end());
                t.by_sigma[Partition(parts)][key] += x;
            }
        }
    }
    for (auto& [s, poly] : t.by_sigma)
        for (auto it = poly.begin(); it != poly.end();) it = it->second == 0 ? poly.erase(it) : std::next(it);
    return t;
}

KappaPolynomial make(Family f, int g, int n, int d, const Partition& sigma, const Rational& kappa0) {
    KappaPolynomial k;
    k.family = f;
    k.g = g;
    k.n = n;
    k.d = d;
    k.sigma = sigma;
    k.terms = substitute_kappa0(relation_symbolic(f, d, sigma), kappa0);
    return k;
}

KappaPoly times_monomial(const KappaPoly& p, const std::vector<int>& mono) {
    KappaPoly r;
    for (const auto& [k, c] : p) {
        auto key = k;
        key.insert(key.end(), mono.begin(), mono.end());
        std::sort(key.begin(), key.end());
        r[key] += c;
    }
    return r;
}

}  // namespace

std::vector<int> KappaPolynomial::exponents(const std::vector<int>& key, int d) {
    std::vector<int> e(std::max(d, key.empty() ? 0 : key.back()), 0);
    for (int i : key)
        if (i >= 1) ++e[i - 1];
    return e;
}

KappaPoly relation_symbolic(Family family, int d, const Partition& sigma) {
    if (d < 0) throw std::invalid_argument("relation degree must be nonnegative");
    if (family == Family::fz)
        for (int part : sigma.parts)
            if (!fz_part_allowed(part))
                throw std::invalid_argument("sigma part " + std::to_string(part) + " is congruent to 2 mod 3");
    const int w = sigma.size();
    std::lock_guard lock(table_mutex);
    auto& t = tables[{family, d}];
    if (t.weight < w) t = build_table(family, d, std::max(w, t.weight + 4));
    auto it = t.by_sigma.find(sigma);
    return it == t.by_sigma.end() ? KappaPoly{} : it->second;
}

KappaPoly substitute_kappa0(const KappaPoly& p, const Rational& kappa0) {
    KappaPoly r;
    for (const auto& [k, c] : p) {
        auto first = std::upper_bound(k.begin(), k.end(), 0);
        Rational f = c;
        for (auto it = k.begin(); it != first; ++it) f *= kappa0;
        if (f == 0) continue;
        r[std::vector<int>(first, k.end())] += f;
    }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

bool fz_valid(int g, int d, const Partition& sigma) {
    for (int part : sigma.parts)
        if (!fz_part_allowed(part)) return false;
    const int s = sigma.size();
    return 3 * d > g - 1 + s && (g - d - s - 1) % 2 == 0;
}

bool ct_valid(int g, int n, int d, const Partition& sigma) { return 2 * d > 2 * g - 2 + n + sigma.size(); }

KappaPolynomial fz_relation(int g, int d, const Partition& sigma) {
    for (int part : sigma.parts)
        if (!fz_part_allowed(part))
            throw std::invalid_argument("sigma part " + std::to_string(part) + " is congruent to 2 mod 3");
    const int s = sigma.size();
    if (3 * d <= g - 1 + s)
        throw std::invalid_argument("degree bound violated: need 3d > g - 1 + |sigma| (d=" + std::to_string(d) +
                                    ", g=" + std::to_string(g) + ", |sigma|=" + std::to_string(s) + ")");
    if ((g - d - s - 1) % 2 != 0)
        throw std::invalid_argument("parity violated: need g = d + |sigma| + 1 mod 2");
    return make(Family::fz, g, 0, d, sigma, 2 * g - 2);
}

KappaPolynomial ct_relation(int g, int n, int d, const Partition& sigma) {
    if (!ct_valid(g, n, d, sigma))
        throw std::invalid_argument("degree bound violated: need 2d > 2g - 2 + n + |sigma| (d=" + std::to_string(d) +
                                    ", 2g-2+n=" + std::to_string(2 * g - 2 + n) +
                                    ", |sigma|=" + std::to_string(sigma.size()) + ")");
    return make(Family::ct, g, n, d, sigma, 2 * g - 2 + n);
}

std::vector<KappaPolynomial> fz_relations_in_degree(int g, int d) {
    std::vector<KappaPolynomial> out;
    const int wmax = 3 * d - g;  // |sigma| < 3d - g + 1
    if (wmax < 0) return out;
    for (const auto& s : partitions_up_to(wmax, fz_part_allowed))
        if (fz_valid(g, d, s)) out.push_back(fz_relation(g, d, s));
    return out;
}

std::vector<KappaPolynomial> ct_relations_in_degree(int g, int n, int d) {
    std::vector<KappaPolynomial> out;
    const int wmax = 2 * d - (2 * g - 2 + n) - 1;
    if (wmax < 0) return out;
    for (const auto& s : partitions_up_to(wmax)) out.push_back(ct_relation(g, n, d, s));
    return out;
}

std::vector<KappaPolynomial> fz_relation_ideal(int g, int d_max) {
    std::vector<KappaPolynomial> out;
    std::set<KappaPoly> seen;
    std::vector<std::vector<KappaPolynomial>> gens;
    for (int d = 0; d <= d_max; ++d) gens.push_back(fz_relations_in_degree(g, d));
    for (int d = 0; d <= d_max; ++d)
        for (int dp = 0; dp <= d; ++dp) {
            auto monos = kappa_monomials(d - dp);
            for (const auto& gen : gens[dp])
                for (const auto& m : monos) {
                    KappaPolynomial r = gen;
                    r.d = d;
                    r.terms = times_monomial(gen.terms, m);
                    if (r.terms.empty() || !seen.insert(r.terms).second) continue;
                    out.push_back(std::move(r));
                }
        }
    return out;
}

std::vector<std::vector<int>> kappa_monomials(int d) {
    std::vector<std::vector<int>> out;
    for (const auto& p : partitions(d)) out.emplace_back(p.parts.rbegin(), p.parts.rend());
    return out;
}

SparseMatrix relation_matrix(const std::vector<KappaPolynomial>& rels, int d) {
    auto monos = kappa_monomials(d);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);
    SparseMatrix m(static_cast<int>(monos.size()));
    for (const auto& r : rels) {
        if (r.d != d) continue;
        SparseVector v;
        for (const auto& [k, c] : r.terms) {
            auto it = index.find(k);
            if (it == index.end()) throw std::logic_error("relation is not homogeneous of degree " + std::to_string(d));
            v[it->second] = c;
        }
        m.add_row(std::move(v));
    }
    return m;
}

std::vector<int> fz_betti(int g, int d_max) {
    auto rels = fz_relation_ideal(g, d_max);
    std::vector<int> out;
    for (int d = 0; d <= d_max; ++d) {
        auto m = relation_matrix(rels, d);
        out.push_back(quotient_dim(m.cols, m));
    }
    return out;
}

int ct_quotient_dim(int g, int n, int d) {
    auto m = relation_matrix(ct_relations_in_degree(g, n, d), d);
    return quotient_dim(m.cols, m);
}

std::string to_string(const KappaPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : p) {
        if (!s.empty()) s += " + ";
        s += "(" + taut::to_string(c) + ")";
        for (int i : k) s += "*k" + std::to_string(i);
    }
    return s;
}

}  // namespace taut
