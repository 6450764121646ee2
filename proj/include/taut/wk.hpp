#pragma once

#include "taut/rational.hpp"
#include "taut/series.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace taut {

// Genus limit for descendent integrals; the table is solved lazily up to it.
inline constexpr int kWkMaxGenus = 8;

// <tau_{k_1} ... tau_{k_n}>_g. Zero off the dimension constraint and for
// unstable (g, n). Throws std::out_of_range above kWkMaxGenus.
Rational descendent_integral(int g, std::vector<int> k);

// Explicit table of every entry with g <= max_genus and n <= max_n that
// satisfies the dimension constraint. Keys hold k sorted descending.
struct WKTable {
    int max_genus = -1;
    int max_n = 0;
    std::map<std::pair<int, std::vector<int>>, Rational> entries;

    // 0 off the dimension constraint or when unstable; throws std::out_of_range
    // outside the bounds.
    Rational get(int g, std::vector<int> k) const;
    bool in_bounds(int g, int n) const { return g <= max_genus && n <= max_n; }
};

WKTable build_wk_table(int max_genus, int max_n);

bool check_string(const WKTable& table);
// Both displayed KdV equations at every t-monomial of at most max_terms
// factors whose correlators stay inside the table.
bool check_kdv(const WKTable& table, int max_terms);

// exp(F) at t_i = -(2i-1)!! L^(2i+1), L standing for 1/lambda, through L^order.
Series airy_specialize(const WKTable& table, int order);
// A(-L^3/288) through L^order, the right side of the Airy identity.
Series airy_target(int order);

}  // namespace taut
