#pragma once

#include "taut/partitions.hpp"
#include "taut/strata.hpp"

#include <optional>
#include <vector>

namespace taut {

// c[i][j] multiplies psi'^i psi''^j in the edge factor with the zeta
// variables of the two ends evaluated at e1, e2 in {1, -1}; i + j <= degree.
std::vector<std::vector<Rational>> edge_factor_coefficients(int e1, int e2, int degree);

// Degree d part of the graph sum defining R^d_{g,A}, A in {0,1}^n. With a
// locus, only graphs in that locus are summed (the result then agrees with
// the full class after restriction to the locus).
StrataElement pixton_R(int g, const std::vector<int>& a, int d, std::optional<Locus> locus = std::nullopt);

// The same graph sum without the parity shortcut (for checking that it vanishes).
StrataElement pixton_graph_sum(int g, const std::vector<int>& a, int d, std::optional<Locus> locus = std::nullopt);

// R^d_{g,A,sigma}: entries of A and parts of sigma must be 0 or 1 mod 3.
StrataElement pixton_R_ext(int g, const std::vector<int>& a, const Partition& sigma, int d,
                           std::optional<Locus> locus = std::nullopt);

// d > (g - 1 + sum A + |sigma|) / 3
bool pixton_in_set(int g, const std::vector<int>& a, const Partition& sigma, int d);
// g = d + 1 + sum A + |sigma| mod 2
bool pixton_parity(int g, const std::vector<int>& a, const Partition& sigma, int d);

// Kappa polynomial of a class supported on the smooth locus (single-vertex terms only).
KappaPoly smooth_kappa_part(const StrataElement& x);

}  // namespace taut
