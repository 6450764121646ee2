#pragma once

#include "taut/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace taut {

// Truncated multivariate power series with exact coefficients.
//
// Every variable has a grading weight (used by exp/log) and may be flagged
// involutive, meaning x^2 = 1 so its exponent is kept mod 2. Truncation is a
// list of linear bounds sum_i w_i e_i <= max; a monomial violating any bound
// is dropped on insertion.
class Series {
public:
    using Exponents = std::vector<int>;
    struct Bound {
        std::vector<int> weights;
        int max = 0;
        bool operator==(const Bound&) const = default;
    };

    Series() = default;
    explicit Series(std::vector<std::string> variables, std::vector<Bound> bounds = {},
                    std::vector<bool> involutive = {}, std::vector<int> grading = {});

    // Same variables, bounds and grading; no terms.
    Series empty_like() const;
    Series constant(const Rational& c) const;
    Series variable(std::size_t i) const;
    Series monomial(const Exponents& e, const Rational& c) const;

    std::size_t num_variables() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<Bound>& bounds() const { return bounds_; }
    const std::vector<int>& grading() const { return grading_; }
    bool involutive(std::size_t i) const { return involutive_[i]; }
    std::size_t index_of(const std::string& name) const;

    bool admissible(const Exponents& e) const;
    void add_term(Exponents e, const Rational& c);
    Rational coeff(const Exponents& e) const;
    Rational constant_term() const { return coeff(Exponents(vars_.size(), 0)); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int grade(const Exponents& e) const;
    int max_grade() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rational& c);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Series& a, const Series& b);
    Series operator-() const { return *this * Rational(-1); }
    bool operator==(const Series& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    Series derivative(std::size_t var) const;
    // x_var -> c * x_var
    Series scale_variable(std::size_t var, const Rational& c) const;
    // Keep only terms with exponent 0 in var.
    Series set_zero(std::size_t var) const;
    // Part of grade exactly g.
    Series graded_part(int g) const;
    // Adds a bound; terms violating it are dropped.
    Series truncated(const Bound& b) const;

private:
    void check_compatible(const Series& o) const;
    void normalize(Exponents& e) const;

    std::vector<std::string> vars_;
    std::vector<Bound> bounds_;
    std::vector<bool> involutive_;
    std::vector<int> grading_;
    std::map<Exponents, Rational> terms_;
};

// exp requires zero constant term; log requires constant term 1. Both need
// the remaining terms to have positive grade so the graded recursion ends.
Series exp(const Series& s);
Series log(const Series& s);

// Univariate convenience: coefficients c_0..c_order of a series in one variable.
std::vector<Rational> univariate_coefficients(const Series& s, int order);

}  // namespace taut
