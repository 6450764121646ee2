#include "taut/wk.hpp"

#include "taut/hypergeometric.hpp"
#include "taut/linalg.hpp"
#include "taut/partitions.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace taut {

namespace {

using Key = std::pair<int, std::vector<int>>;
// Linear form over unknown correlators; index -1 is the constant.
using Form = std::map<int, Rational>;

void form_add(Form& a, const Form& b, const Rational& s = 1) {
    for (const auto& [i, c] : b) {
        auto& x = a[i];
        x += s * c;
        if (x == 0) a.erase(i);
    }
}

Form form_mul(const Form& a, const Form& b) {
    auto constant = [](const Form& f) { return f.empty() || (f.size() == 1 && f.begin()->first == -1); };
    if (!constant(a) && !constant(b)) throw std::logic_error("KdV product of two unknown correlators");
    const Form& var = constant(a) ? b : a;
    const Form& con = constant(a) ? a : b;
    if (con.empty()) return {};
    Form r;
    const Rational s = con.begin()->second;
    for (const auto& [i, c] : var) r[i] = c * s;
    return r;
}

std::recursive_mutex wk_mutex;
std::map<Key, std::map<Key, Rational>> reduce_cache;
std::map<Key, Rational> base_values{{{0, {0, 0, 0}}, Rational(1)}};
int solved_genus = 0;

// Writes a correlator as a combination of base correlators using the
// string and dilaton equations. Bases: <tau_0^3>_0, <tau_1>_1 and, for
// g >= 2, correlators whose indices are all at least 2.
const std::map<Key, Rational>& reduce(int g, std::vector<int> ks) {
    std::sort(ks.rbegin(), ks.rend());
    Key key{g, ks};
    if (auto it = reduce_cache.find(key); it != reduce_cache.end()) return it->second;
    std::map<Key, Rational> out;
    const int n = static_cast<int>(ks.size());
    const int sum = std::accumulate(ks.begin(), ks.end(), 0);
    const bool live = n > 0 && g >= 0 && 2 * g - 2 + n > 0 && sum == 3 * g - 3 + n && (n == 0 || ks.back() >= 0);
    if (!live) {
    } else if ((g == 0 && n == 3) || (g == 1 && n == 1)) {
        out[key] = 1;
    } else if (ks.back() == 0) {
        std::vector<int> rest(ks.begin(), ks.end() - 1);
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] == 0) continue;
            auto r = rest;
            --r[j];
            for (const auto& [b, c] : reduce(g, r)) out[b] += c;
        }
    } else if (std::find(ks.begin(), ks.end(), 1) != ks.end()) {
        auto rest = ks;
        rest.erase(std::find(rest.begin(), rest.end(), 1));
        for (const auto& [b, c] : reduce(g, rest)) out[b] += c * (2 * g - 2 + n - 1);
    } else {
        out[key] = 1;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return reduce_cache.emplace(std::move(key), std::move(out)).first->second;
}

// genus forced by the dimension constraint, or -1
int implied_genus(const std::vector<int>& ks) {
    const int n = static_cast<int>(ks.size());
    const int s = std::accumulate(ks.begin(), ks.end(), 0);
    if ((s - n + 3) % 3 != 0 || s - n + 3 < 0) return -1;
    return (s - n + 3) / 3;
}

std::vector<int> with_counts(std::vector<int> prefix, const std::vector<int>& cnt) {
    for (std::size_t k = 0; k < cnt.size(); ++k) prefix.insert(prefix.end(), cnt[k], static_cast<int>(k));
    return prefix;
}

// All splittings of a count vector into parts, with multinomial weights.
void splits(const std::vector<int>& cnt, int parts,
            const std::function<void(const std::vector<std::vector<int>>&, const Rational&)>& fn) {
    std::vector<std::vector<int>> piece(parts, std::vector<int>(cnt.size(), 0));
    std::function<void(std::size_t, int, int, Rational)> rec = [&](std::size_t k, int p, int left, Rational w) {
        if (k == cnt.size()) {
            fn(piece, w);
            return;
        }
        if (p == parts - 1) {
            piece[p][k] = left;
            rec(k + 1, 0, k + 1 < cnt.size() ? cnt[k + 1] : 0, w);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            piece[p][k] = c;
            rec(k, p + 1, left - c, w * Rational(binomial(left, c)));
        }
    };
    rec(0, 0, cnt.empty() ? 0 : cnt[0], 1);
}

using CorrFn = std::function<Form(const std::vector<int>&)>;

// Residual of u_{t1} = u u_x + u_xxx / 12 at t^m / m!.
Form kdv1_residual(const std::vector<int>& m, const CorrFn& corr) {
    Form r = corr(with_counts({1, 0, 0}, m));
    splits(m, 2, [&](const std::vector<std::vector<int>>& p, const Rational& w) {
        form_add(r, form_mul(corr(with_counts({0, 0}, p[0])), corr(with_counts({0, 0, 0}, p[1]))), -w);
    });
    form_add(r, corr(with_counts({0, 0, 0, 0, 0}, m)), Rational(-1, 12));
    return r;
}

// Residual of u_{t2} = u^2 u_x / 2 + (2 u_x u_xx + u u_xxx) / 12 + u_xxxxx / 240.
Form kdv2_residual(const std::vector<int>& m, const CorrFn& corr) {
    Form r = corr(with_counts({2, 0, 0}, m));
    splits(m, 3, [&](const std::vector<std::vector<int>>& p, const Rational& w) {
        Form t = form_mul(form_mul(corr(with_counts({0, 0}, p[0])), corr(with_counts({0, 0}, p[1]))),
                          corr(with_counts({0, 0, 0}, p[2])));
        form_add(r, t, -w / 2);
    });
    splits(m, 2, [&](const std::vector<std::vector<int>>& p, const Rational& w) {
        form_add(r, form_mul(corr(with_counts({0, 0, 0}, p[0])), corr(with_counts({0, 0, 0, 0}, p[1]))), -w / 6);
        form_add(r, form_mul(corr(with_counts({0, 0}, p[0])), corr(with_counts({0, 0, 0, 0, 0}, p[1]))), -w / 12);
    });
    form_add(r, corr(with_counts(std::vector<int>(7, 0), m)), Rational(-1, 240));
    return r;
}

// Count vectors of multisets with `size` entries and sum(m_i - 1) = target.
std::vector<std::vector<int>> kdv_indices(int target, int size) {
    std::vector<std::vector<int>> out;
    const int total = target + size;
    if (total < 0) return out;
    for (const auto& p : partitions(total, size)) {
        std::vector<int> cnt(total + 1, 0);
        for (int x : p.parts) ++cnt[x];
        cnt[0] += size - p.length();
        out.push_back(cnt);
    }
    return out;
}

Rational value_of(int g, const std::vector<int>& ks) {
    Rational v = 0;
    for (const auto& [b, c] : reduce(g, ks)) v += c * base_values.at(b);
    return v;
}

void solve_genus(int g) {
    std::vector<Key> unknowns;
    if (g == 1) unknowns.push_back({1, {1}});
    else
        for (const auto& p : partitions(3 * g - 3)) {
            std::vector<int> ks;
            for (int x : p.parts) ks.push_back(x + 1);
            unknowns.push_back({g, ks});
        }
    std::map<Key, int> index;
    for (std::size_t i = 0; i < unknowns.size(); ++i) index[unknowns[i]] = static_cast<int>(i);
    const int u = static_cast<int>(unknowns.size());

    CorrFn corr = [&](const std::vector<int>& ks) -> Form {
        int h = implied_genus(ks);
        if (h < 0) return {};
        // Genus additivity means such a factor only meets a vanishing partner.
        if (h > g) return {};
        if (h < g) {
            Rational v = value_of(h, ks);
            return v == 0 ? Form{} : Form{{-1, v}};
        }
        Form f;
        for (const auto& [b, c] : reduce(h, ks)) f[index.at(b)] += c;
        return f;
    };

    RowEchelon ech(u + 1, u);
    auto feed = [&](const Form& f) {
        SparseVector v;
        for (const auto& [i, c] : f) v[i < 0 ? u : i] = c;
        SparseVector red = ech.reduce(v);
        if (!red.empty() && red.begin()->first == u)
            throw std::logic_error("KdV equations are inconsistent in genus " + std::to_string(g));
        ech.add(red);
    };
    for (int size = 1; size <= 3 * g + 3 && ech.rank() < u; ++size) {
        for (const auto& m : kdv_indices(3 * g - 1, size)) feed(kdv1_residual(m, corr));
        for (const auto& m : kdv_indices(3 * g - 2, size)) feed(kdv2_residual(m, corr));
    }
    if (ech.rank() < u) {
        std::vector<bool> pivot(u, false);
        for (const auto& [p, row] : ech.rows()) pivot[p] = true;
        int miss = static_cast<int>(std::find(pivot.begin(), pivot.end(), false) - pivot.begin());
        std::string s;
        for (int k : unknowns[miss].second) s += "tau_" + std::to_string(k) + " ";
        throw std::runtime_error("string and KdV leave <" + s + "> in genus " + std::to_string(g) + " undetermined");
    }
    for (const auto& [p, row] : ech.rows()) {
        auto it = row.find(u);
        base_values[unknowns[p]] = it == row.end() ? Rational(0) : Rational(-it->second);
    }
}

void ensure_genus(int g) {
    if (g > kWkMaxGenus)
        throw std::out_of_range("descendent integrals are available up to genus " + std::to_string(kWkMaxGenus) +
                                ", requested " + std::to_string(g));
    while (solved_genus < g) solve_genus(++solved_genus);
}

}  // namespace

Rational descendent_integral(int g, std::vector<int> k) {
    std::lock_guard lock(wk_mutex);
    ensure_genus(g);
    return value_of(g, k);
}

Rational WKTable::get(int g, std::vector<int> k) const {
    const int n = static_cast<int>(k.size());
    if (n == 0 || 2 * g - 2 + n <= 0) return 0;
    for (int x : k)
        if (x < 0) return 0;
    if (std::accumulate(k.begin(), k.end(), 0) != 3 * g - 3 + n) return 0;
    if (!in_bounds(g, n))
        throw std::out_of_range("WK table covers genus <= " + std::to_string(max_genus) + " and n <= " +
                                std::to_string(max_n));
    std::sort(k.rbegin(), k.rend());
    auto it = entries.find({g, k});
    return it == entries.end() ? Rational(0) : it->second;
}

WKTable build_wk_table(int max_genus, int max_n) {
    WKTable t;
    t.max_genus = max_genus;
    t.max_n = max_n;
    for (int g = 0; g <= max_genus; ++g)
        for (int n = 1; n <= max_n; ++n) {
            const int s = 3 * g - 3 + n;
            if (2 * g - 2 + n <= 0 || s < 0) continue;
            for (const auto& p : partitions(s, n)) {
                auto ks = p.parts;
                ks.resize(n, 0);
                t.entries[{g, ks}] = descendent_integral(g, ks);
            }
        }
    return t;
}

bool check_string(const WKTable& table) {
    for (const auto& [key, value] : table.entries) {
        const auto& [g, ks] = key;
        if (ks.back() != 0) continue;
        std::vector<int> rest(ks.begin(), ks.end() - 1);
        Rational rhs = (g == 0 && rest == std::vector<int>{0, 0}) ? 1 : 0;
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] == 0) continue;
            auto r = rest;
            --r[j];
            rhs += table.get(g, r);
        }
        if (rhs != value) return false;
    }
    return true;
}

bool check_kdv(const WKTable& table, int max_terms) {
    CorrFn corr = [&](const std::vector<int>& ks) -> Form {
        int h = implied_genus(ks);
        if (h < 0 || h > table.max_genus) return {};
        Rational v = table.get(h, ks);
        return v == 0 ? Form{} : Form{{-1, v}};
    };
    for (int g = 0; g <= table.max_genus; ++g)
        for (int size = 0; size <= max_terms; ++size) {
            if (size + 5 <= table.max_n)
                for (const auto& m : kdv_indices(3 * g - 1, size))
                    if (!kdv1_residual(m, corr).empty()) return false;
            if (size + 7 <= table.max_n)
                for (const auto& m : kdv_indices(3 * g - 2, size))
                    if (!kdv2_residual(m, corr).empty()) return false;
        }
    return true;
}

Series airy_specialize(const WKTable& table, int order) {
    const int top = order / 3;  // largest 2g-2+n that contributes
    if (table.max_n < top + 2 || 2 * table.max_genus < top + 1)
        throw std::invalid_argument("WK table too small for the Airy check through order " + std::to_string(order));
    Series f({"L"}, {{{1}, order}});
    for (const auto& [key, value] : table.entries) {
        const auto& [g, ks] = key;
        const int n = static_cast<int>(ks.size());
        if (3 * (2 * g - 2 + n) > order || value == 0) continue;
        Rational c = value;
        int power = 0;
        std::map<int, int> mult;
        for (int k : ks) {
            c *= -Rational(double_factorial_odd(k));
            power += 2 * k + 1;
            ++mult[k];
        }
        for (const auto& [k, m] : mult) c /= Rational(factorial(m));
        f.add_term({power}, c);
    }
    return exp(f);
}

Series airy_target(int order) {
    Series a = series_A(order / 3);
    Series r({"L"}, {{{1}, order}});
    Rational s = 1;
    for (int i = 0; 3 * i <= order; ++i) {
        r.add_term({3 * i}, a.coeff({i}) * s);
        s /= -288;
    }
    return r;
}

}  // namespace taut
