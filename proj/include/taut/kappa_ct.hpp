#pragma once

#include "taut/fz_relations.hpp"
#include "taut/partitions.hpp"

#include <vector>

namespace taut {

// P(d, 2g-2+n-d): indexes a basis {kappa_p} of kappa^d on compact type, n > 0.
std::vector<Partition> partition_basis(int g, int n, int d);
int ct_betti(int g, int n, int d);

// The ring isomorphism to genus 0 with 2g+n markings sends kappa_i to kappa_i,
// so only the metadata changes. Requires n > 0.
KappaPolynomial genus0_transport(const KappaPolynomial& x);

// n = 0: genus-0 Betti numbers (2g markings) against the quotient by the
// compact-type relations written for (g, 0). Observed numbers only.
struct SurjectionRow {
    int d;
    int genus0_betti;
    int relation_quotient;
};
std::vector<SurjectionRow> n0_surjection_report(int g);

}  // namespace taut
