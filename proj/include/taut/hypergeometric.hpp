#pragma once

#include "taut/partitions.hpp"
#include "taut/series.hpp"

#include <vector>

namespace taut {

// Univariate series in t.
Series series_A(int order);
Series series_B(int order);

// H0(T) = A(-T), H1(T) = -B(-T) as coefficient lists through T^order.
std::vector<Rational> h0_coefficients(int order);
std::vector<Rational> h1_coefficients(int order);

bool check_pixton_identity(const Series& a, const Series& b, int order);
bool check_pixton_identity(int order);
bool check_h_reflection(int order);
bool check_hypergeometric_odes(const Series& a, const Series& b, int order);
bool check_hypergeometric_odes(int order);

// Variables: t, then p_j for the admissible indices j in increasing order.
// Grading is t-degree plus p-weight (weight of p_j is j).
Series psi_fz(int t_order, int sigma_bound);
Series psi_ct(int t_order, int sigma_bound);

// Coefficient of t^r p^sigma in log(Psi).
Rational fz_constants(int r, const Partition& sigma);
Rational ct_constants(int r, const Partition& sigma);

// The p-index alphabets.
bool fz_part_allowed(int part);
std::vector<int> fz_p_indices(int max_weight);
std::vector<int> ct_p_indices(int max_weight);

// Exponent vector for t^r p^sigma in a psi_fz / psi_ct shaped series.
Series::Exponents fz_exponents(int r, const Partition& sigma, int sigma_bound);
Series::Exponents ct_exponents(int r, const Partition& sigma, int sigma_bound);

// Memoized log(Psi) for the given truncation.
const Series& log_psi_fz(int t_order, int sigma_bound);
const Series& log_psi_ct(int t_order, int sigma_bound);

}  // namespace taut
