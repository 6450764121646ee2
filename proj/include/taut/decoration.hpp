#pragma once

#include "taut/rational.hpp"
#include "taut/stable_graph.hpp"

#include <map>
#include <vector>

namespace taut {

// Polynomial in the kappa/psi decorations of one fixed graph.
using DecoPoly = std::map<Decoration, Rational>;

// kappa multisets merge, psi exponents add
Decoration deco_mul(const Decoration& a, const Decoration& b);
bool deco_fits(const StableGraph& gr, const Decoration& d);

// Product truncated to total degree <= max_degree; terms exceeding a vertex
// dimension are dropped since they vanish.
DecoPoly deco_multiply(const StableGraph& gr, const DecoPoly& a, const DecoPoly& b, int max_degree);
void deco_add(DecoPoly& into, const Decoration& d, const Rational& c);

// Factor living on one half-edge: sum_i c[i] psi_h^i.
DecoPoly psi_factor(const StableGraph& gr, int h, const std::vector<Rational>& c);
// Factor on an edge: sum c[i][j] psi_h^i psi_h'^j.
DecoPoly edge_factor(const StableGraph& gr, int h, int hp, const std::vector<std::vector<Rational>>& c);
// Factor on a vertex: sum over kappa multisets.
DecoPoly kappa_factor(const StableGraph& gr, int v, const std::map<std::vector<int>, Rational>& kp);

}  // namespace taut
