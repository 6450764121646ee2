#include "taut/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace taut {

Series::Series(std::vector<std::string> variables, std::vector<Bound> bounds,
               std::vector<bool> involutive, std::vector<int> grading)
    : vars_(std::move(variables)), bounds_(std::move(bounds)),
      involutive_(std::move(involutive)), grading_(std::move(grading)) {
    const auto n = vars_.size();
    if (involutive_.empty()) involutive_.assign(n, false);
    if (grading_.empty()) {
        grading_.resize(n);
        for (std::size_t i = 0; i < n; ++i) grading_[i] = involutive_[i] ? 0 : 1;
    }
    if (involutive_.size() != n || grading_.size() != n)
        throw std::invalid_argument("series: flag vectors do not match variable count");
    for (const auto& b : bounds_)
        if (b.weights.size() != n) throw std::invalid_argument("series: bound has wrong arity");
}

Series Series::empty_like() const {
    Series s;
    s.vars_ = vars_;
    s.bounds_ = bounds_;
    s.involutive_ = involutive_;
    s.grading_ = grading_;
    return s;
}

Series Series::constant(const Rational& c) const {
    return monomial(Exponents(vars_.size(), 0), c);
}

Series Series::variable(std::size_t i) const {
    Exponents e(vars_.size(), 0);
    e.at(i) = 1;
    return monomial(e, 1);
}

Series Series::monomial(const Exponents& e, const Rational& c) const {
    Series s = empty_like();
    s.add_term(e, c);
    return s;
}

std::size_t Series::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::out_of_range("series: no variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

void Series::normalize(Exponents& e) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (involutive_[i]) e[i] &= 1;
}

bool Series::admissible(const Exponents& e) const {
    for (int x : e)
        if (x < 0) return false;
    for (const auto& b : bounds_) {
        long s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<long>(b.weights[i]) * e[i];
        if (s > b.max) return false;
    }
    return true;
}

void Series::add_term(Exponents e, const Rational& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("series: exponent arity mismatch");
    normalize(e);
    if (c == 0 || !admissible(e)) return;
    auto [it, fresh] = terms_.try_emplace(std::move(e), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Series::coeff(const Exponents& e) const {
    Exponents n = e;
    normalize(n);
    auto it = terms_.find(n);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Series::grade(const Exponents& e) const {
    int g = 0;
    for (std::size_t i = 0; i < e.size(); ++i) g += grading_[i] * e[i];
    return g;
}

int Series::max_grade() const {
    // Per-variable exponent caps from the bounds give a crude but safe cap.
    long total = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (grading_[i] == 0) continue;
        long cap = -1;
        for (const auto& b : bounds_)
            if (b.weights[i] > 0) {
                long c = b.max / b.weights[i];
                cap = cap < 0 ? c : std::min(cap, c);
            }
        if (cap < 0) throw std::domain_error("series: variable '" + vars_[i] + "' has no truncation bound");
        total += cap * grading_[i];
    }
    return static_cast<int>(total);
}

void Series::check_compatible(const Series& o) const {
    if (vars_ != o.vars_ || involutive_ != o.involutive_ || grading_ != o.grading_)
        throw std::invalid_argument("series: incompatible variable sets");
}

Series& Series::operator+=(const Series& o) {
    check_compatible(o);
    for (const auto& b : o.bounds_)
        if (std::find(bounds_.begin(), bounds_.end(), b) == bounds_.end()) bounds_.push_back(b);
    std::map<Exponents, Rational> old;
    old.swap(terms_);
    for (auto& [e, c] : old) add_term(e, c);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series& Series::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    a.check_compatible(b);
    Series r = a.empty_like();
    for (const auto& bd : b.bounds_)
        if (std::find(r.bounds_.begin(), r.bounds_.end(), bd) == r.bounds_.end()) r.bounds_.push_back(bd);
    Series::Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Series Series::derivative(std::size_t var) const {
    if (involutive_.at(var)) throw std::invalid_argument("series: cannot differentiate an involutive variable");
    Series r = empty_like();
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * e[var]);
    }
    return r;
}

Series Series::scale_variable(std::size_t var, const Rational& c) const {
    Series r = empty_like();
    for (const auto& [e, v] : terms_) {
        Rational f = 1;
        for (int k = 0; k < e.at(var); ++k) f *= c;
        r.add_term(e, v * f);
    }
    return r;
}

Series Series::set_zero(std::size_t var) const {
    Series r = empty_like();
    for (const auto& [e, c] : terms_)
        if (e.at(var) == 0) r.add_term(e, c);
    return r;
}

Series Series::graded_part(int g) const {
    Series r = empty_like();
    for (const auto& [e, c] : terms_)
        if (grade(e) == g) r.terms_.emplace(e, c);
    return r;
}

Series Series::truncated(const Bound& b) const {
    Series r = empty_like();
    r.bounds_.push_back(b);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

namespace {

std::vector<Series> split_by_grade(const Series& s, int top) {
    std::vector<Series> parts(top + 1, s.empty_like());
    for (const auto& [e, c] : s.terms()) {
        int g = s.grade(e);
        if (g <= top) parts[g].add_term(e, c);
    }
    return parts;
}

}  // namespace

Series exp(const Series& s) {
    if (s.constant_term() != 0)
        throw std::domain_error("exp: constant term must be 0, got " + to_string(s.constant_term()));
    const int top = s.max_grade();
    auto x = split_by_grade(s, top);
    if (!x[0].is_zero()) throw std::domain_error("exp: argument has non-constant terms of grade 0");
    // n E_n = sum_k k X_k E_{n-k}
    std::vector<Series> e(top + 1, s.empty_like());
    e[0] = s.constant(1);
    Series result = e[0];
    for (int n = 1; n <= top; ++n) {
        Series acc = s.empty_like();
        for (int k = 1; k <= n; ++k)
            if (!x[k].is_zero() && !e[n - k].is_zero()) acc += x[k] * e[n - k] * Rational(k);
        e[n] = acc * Rational(1, n);
        result += e[n];
    }
    return result;
}

Series log(const Series& s) {
    if (s.constant_term() != 1)
        throw std::domain_error("log: constant term must be 1, got " + to_string(s.constant_term()));
    const int top = s.max_grade();
    auto p = split_by_grade(s, top);
    if (p[0] != s.constant(1)) throw std::domain_error("log: argument has non-constant terms of grade 0");
    // n L_n = n P_n - sum_{k<n} k L_k P_{n-k}
    std::vector<Series> l(top + 1, s.empty_like());
    Series result = s.empty_like();
    for (int n = 1; n <= top; ++n) {
        Series acc = p[n] * Rational(n);
        for (int k = 1; k < n; ++k)
            if (!l[k].is_zero() && !p[n - k].is_zero()) acc -= l[k] * p[n - k] * Rational(k);
        l[n] = acc * Rational(1, n);
        result += l[n];
    }
    return result;
}

std::vector<Rational> univariate_coefficients(const Series& s, int order) {
    if (s.num_variables() != 1) throw std::invalid_argument("series is not univariate");
    std::vector<Rational> c(order + 1);
    for (int i = 0; i <= order; ++i) c[i] = s.coeff({i});
    return c;
}

}  // namespace taut
