#pragma once

#include "taut/strata.hpp"

#include <stdexcept>
#include <vector>

namespace taut {

// Raised when the r-interpolation does not reproduce on a second sample window.
class StabilizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All admissible weightings mod r, as values per half-edge.
std::vector<std::vector<int>> weightings_mod_r(const StableGraph& gr, const std::vector<int>& s, int r);
// Same count by trying every assignment of one value per edge.
long long brute_force_weighting_count(const StableGraph& gr, const std::vector<int>& s, int r);

StrataElement q_class(int g, const std::vector<int>& s, int d, int r);

struct InterpolationReport {
    int graphs = 0;
    int interpolations = 0;  // scalar polynomials fitted and certified
    int max_r = 0;
};

// Constant term in r of q_class, fitted per graph and checked against a
// disjoint window of larger r. Throws StabilizationError on disagreement.
StrataElement p_class(int g, const std::vector<int>& s, int d, InterpolationReport* report = nullptr);

StrataElement dr_cycle(int g, const std::vector<int>& s, InterpolationReport* report = nullptr);
StrataElement lambda_class(int g, InterpolationReport* report = nullptr);

// sum_{a+b=2g+r} (-1)^a [single vertex, psi_1^a psi_2^b] on (g, 2)
StrataElement build_chi(int g, int r);
// Glues markings 1 and 2 of every term into a nonseparating edge.
StrataElement delta_tilde(const StrataElement& x);

}  // namespace taut
