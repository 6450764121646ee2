#pragma once

#include "taut/strata.hpp"

namespace taut {

// Integral over M_{g,n} of a kappa monomial times psi powers on the markings.
Rational integrate_vertex(int g, std::vector<int> kappa, std::vector<int> psi);

// Sum of coefficients times the integral over each stratum; every term must
// have degree 3g-3+n.
Rational integrate(const StrataElement& x);

// integrate(product(x, y)) restricted to complementary degrees, evaluated
// without canonicalizing the intermediate product.
Rational pairing(const StrataElement& x, const StrataElement& y);

}  // namespace taut
