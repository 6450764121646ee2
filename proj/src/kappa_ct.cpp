#include "taut/kappa_ct.hpp"

#include <stdexcept>

namespace taut {

std::vector<Partition> partition_basis(int g, int n, int d) {
    if (n <= 0) throw std::invalid_argument("partition_basis: needs at least one marking (n = 0 only has a surjection)");
    if (g < 0 || d < 0) throw std::invalid_argument("partition_basis: negative genus or degree");
    const int k = 2 * g - 2 + n - d;
    if (k < 0) return {};
    return partitions_at_most(d, k);
}

int ct_betti(int g, int n, int d) { return static_cast<int>(partition_basis(g, n, d).size()); }

KappaPolynomial genus0_transport(const KappaPolynomial& x) {
    if (x.n <= 0) throw std::invalid_argument("genus0_transport: n = 0 only has a surjection from genus 0, no inverse");
    KappaPolynomial out = x;
    out.n = x.n + 2 * x.g;
    out.g = 0;
    return out;
}

std::vector<SurjectionRow> n0_surjection_report(int g) {
    if (g < 2) throw std::invalid_argument("n0_surjection_report: genus must be at least 2");
    std::vector<SurjectionRow> rows;
    for (int d = 0; d <= 2 * g - 2; ++d) rows.push_back({d, ct_betti(0, 2 * g, d), ct_quotient_dim(g, 0, d)});
    return rows;
}

}  // namespace taut
