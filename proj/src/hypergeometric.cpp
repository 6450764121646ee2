#include "taut/hypergeometric.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace taut {

namespace {

Rational a_coeff(int i) {
    return Rational(factorial(6 * i)) / Rational(factorial(3 * i) * factorial(2 * i));
}

Rational b_coeff(int i) { return a_coeff(i) * rational(6 * i + 1, 6 * i - 1); }

Series univariate(const std::string& var, int order) {
    return Series({var}, {{{1}, order}});
}

}  // namespace

Series series_A(int order) {
    if (order < 0) throw std::invalid_argument("series_A: negative order");
    Series s = univariate("t", order);
    for (int i = 0; i <= order; ++i) s.add_term({i}, a_coeff(i));
    return s;
}

Series series_B(int order) {
    if (order < 0) throw std::invalid_argument("series_B: negative order");
    Series s = univariate("t", order);
    for (int i = 0; i <= order; ++i) s.add_term({i}, b_coeff(i));
    return s;
}

std::vector<Rational> h0_coefficients(int order) {
    return univariate_coefficients(series_A(order).scale_variable(0, -1), order);
}

std::vector<Rational> h1_coefficients(int order) {
    return univariate_coefficients(-series_B(order).scale_variable(0, -1), order);
}

bool check_pixton_identity(const Series& a, const Series& b, int order) {
    Series lhs = a.scale_variable(0, -1) * b + a * b.scale_variable(0, -1);
    for (int i = 0; i <= order; ++i)
        if (lhs.coeff({i}) != (i == 0 ? Rational(-2) : Rational(0))) return false;
    return true;
}

bool check_pixton_identity(int order) {
    return check_pixton_identity(series_A(order), series_B(order), order);
}

bool check_h_reflection(int order) {
    Series h0 = series_A(order).scale_variable(0, -1);
    Series h1 = -series_B(order).scale_variable(0, -1);
    Series lhs = h0 * h1.scale_variable(0, -1) + h0.scale_variable(0, -1) * h1;
    for (int i = 0; i <= order; ++i)
        if (lhs.coeff({i}) != (i == 0 ? Rational(2) : Rational(0))) return false;
    return true;
}

bool check_hypergeometric_odes(const Series& a, const Series& b, int order) {
    // Rewrite in z = 288 t, i.e. t -> z/288.
    const Rational inv = rational(1, 288);
    Series az = a.scale_variable(0, inv);
    Series bz = b.scale_variable(0, inv);
    Series z = az.variable(0);
    Series d1 = az.derivative(0);
    Series d2 = d1.derivative(0);
    Series ode = z * z * d2 * Rational(3) + (z * Rational(6) - az.constant(2)) * d1 + az * rational(5, 12);
    Series rel = z * z * d1 * Rational(3) + (z * rational(1, 2) - az.constant(1)) * az - bz;
    for (int i = 0; i <= order; ++i)
        if (ode.coeff({i}) != 0 || rel.coeff({i}) != 0) return false;
    return true;
}

bool check_hypergeometric_odes(int order) {
    // Derivatives lose precision at the top, so build two extra terms.
    return check_hypergeometric_odes(series_A(order + 2), series_B(order + 2), order);
}

bool fz_part_allowed(int part) { return part > 0 && part % 3 != 2; }

std::vector<int> fz_p_indices(int max_weight) {
    std::vector<int> v;
    for (int j = 1; j <= max_weight; ++j)
        if (fz_part_allowed(j)) v.push_back(j);
    return v;
}

std::vector<int> ct_p_indices(int max_weight) {
    std::vector<int> v;
    for (int j = 1; j <= max_weight; ++j) v.push_back(j);
    return v;
}

namespace {

Series p_shape(const std::vector<int>& idx, int t_order, int sigma_bound) {
    std::vector<std::string> vars{"t"};
    std::vector<int> tw{1}, pw{0}, grading{1};
    for (int j : idx) {
        vars.push_back("p" + std::to_string(j));
        tw.push_back(0);
        pw.push_back(j);
        grading.push_back(j);
    }
    return Series(vars, {{tw, t_order}, {pw, sigma_bound}}, {}, grading);
}

Series::Exponents shape_exponents(const std::vector<int>& idx, int r, const Partition& sigma) {
    Series::Exponents e(idx.size() + 1, 0);
    e[0] = r;
    for (int part : sigma.parts) {
        bool found = false;
        for (std::size_t k = 0; k < idx.size(); ++k)
            if (idx[k] == part) {
                ++e[k + 1];
                found = true;
            }
        if (!found) throw std::invalid_argument("partition part " + std::to_string(part) + " not in the p alphabet");
    }
    return e;
}

// sum_{j>=0} t^j p_{step*j+offset}, with p_0 read as 1
Series p_tail(const Series& shape, const std::vector<int>& idx, int step, int offset) {
    Series s = shape.empty_like();
    if (offset == 0) s.add_term(Series::Exponents(idx.size() + 1, 0), 1);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        int j = idx[k];
        if (j < offset || (j - offset) % step != 0) continue;
        Series::Exponents e(idx.size() + 1, 0);
        e[0] = (j - offset) / step;
        e[k + 1] = 1;
        s.add_term(e, 1);
    }
    return s;
}

Series t_series(const Series& shape, const std::vector<Rational>& c) {
    Series s = shape.empty_like();
    Series::Exponents e(shape.num_variables(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        e[0] = static_cast<int>(i);
        s.add_term(e, c[i]);
    }
    return s;
}

}  // namespace

Series psi_fz(int t_order, int sigma_bound) {
    if (t_order < 0 || sigma_bound < 0) throw std::invalid_argument("psi_fz: negative bound");
    auto idx = fz_p_indices(sigma_bound);
    Series shape = p_shape(idx, t_order, sigma_bound);
    std::vector<Rational> a, b;
    for (int i = 0; i <= t_order; ++i) {
        a.push_back(a_coeff(i));
        b.push_back(b_coeff(i));
    }
    return p_tail(shape, idx, 3, 0) * t_series(shape, a) + p_tail(shape, idx, 3, 1) * t_series(shape, b);
}

Series psi_ct(int t_order, int sigma_bound) {
    if (t_order < 0 || sigma_bound < 0) throw std::invalid_argument("psi_ct: negative bound");
    auto idx = ct_p_indices(sigma_bound);
    Series shape = p_shape(idx, t_order, sigma_bound);
    std::vector<Rational> df;
    for (int i = 0; i <= t_order; ++i) df.push_back(Rational(double_factorial_odd(i)));
    return p_tail(shape, idx, 2, 0) * t_series(shape, df) + p_tail(shape, idx, 2, 1);
}

Series::Exponents fz_exponents(int r, const Partition& sigma, int sigma_bound) {
    return shape_exponents(fz_p_indices(sigma_bound), r, sigma);
}

Series::Exponents ct_exponents(int r, const Partition& sigma, int sigma_bound) {
    return shape_exponents(ct_p_indices(sigma_bound), r, sigma);
}

namespace {

std::mutex log_mutex;
std::map<std::pair<int, int>, Series> fz_logs, ct_logs;

}  // namespace

const Series& log_psi_fz(int t_order, int sigma_bound) {
    std::lock_guard lock(log_mutex);
    auto key = std::make_pair(t_order, sigma_bound);
    auto it = fz_logs.find(key);
    if (it == fz_logs.end()) it = fz_logs.emplace(key, log(psi_fz(t_order, sigma_bound))).first;
    return it->second;
}

const Series& log_psi_ct(int t_order, int sigma_bound) {
    std::lock_guard lock(log_mutex);
    auto key = std::make_pair(t_order, sigma_bound);
    auto it = ct_logs.find(key);
    if (it == ct_logs.end()) it = ct_logs.emplace(key, log(psi_ct(t_order, sigma_bound))).first;
    return it->second;
}

Rational fz_constants(int r, const Partition& sigma) {
    for (int part : sigma.parts)
        if (!fz_part_allowed(part))
            throw std::invalid_argument("sigma part " + std::to_string(part) + " is congruent to 2 mod 3");
    const int w = sigma.size();
    return log_psi_fz(r, w).coeff(fz_exponents(r, sigma, w));
}

Rational ct_constants(int r, const Partition& sigma) {
    const int w = sigma.size();
    return log_psi_ct(r, w).coeff(ct_exponents(r, sigma, w));
}

}  // namespace taut
