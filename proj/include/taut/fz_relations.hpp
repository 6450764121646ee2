#pragma once

#include "taut/linalg.hpp"
#include "taut/partitions.hpp"
#include "taut/strata.hpp"

#include <string>
#include <vector>

namespace taut {

enum class Family { fz, ct };

// A polynomial in kappa_1, kappa_2, ... (keys are sorted index multisets)
// with the data that produced it.
struct KappaPolynomial {
    KappaPoly terms;
    Family family = Family::fz;
    int g = 0, n = 0, d = 0;
    Partition sigma;

    bool is_zero() const { return terms.empty(); }
    // exponent vector over kappa_1..kappa_d for a key
    static std::vector<int> exponents(const std::vector<int>& key, int d);
};

// [exp(-gamma)]_{t^d p^sigma} with kappa_0 kept as the index 0 in each key.
KappaPoly relation_symbolic(Family family, int d, const Partition& sigma);
KappaPoly substitute_kappa0(const KappaPoly& p, const Rational& kappa0);

// Validity of (g, d, sigma) for each family.
bool fz_valid(int g, int d, const Partition& sigma);
bool ct_valid(int g, int n, int d, const Partition& sigma);

// Throw std::invalid_argument naming the violated condition.
KappaPolynomial fz_relation(int g, int d, const Partition& sigma);
KappaPolynomial ct_relation(int g, int n, int d, const Partition& sigma);

// Every valid sigma for the degree, ordered by (|sigma|, parts descending).
std::vector<KappaPolynomial> fz_relations_in_degree(int g, int d);
std::vector<KappaPolynomial> ct_relations_in_degree(int g, int n, int d);

// Generators of degree <= d_max and their products with kappa monomials up
// to degree d_max, deduplicated.
std::vector<KappaPolynomial> fz_relation_ideal(int g, int d_max);

// Kappa monomials of degree d (column order for rank computations).
std::vector<std::vector<int>> kappa_monomials(int d);
SparseMatrix relation_matrix(const std::vector<KappaPolynomial>& rels, int d);

// dim R^d_FZ(M_g) for d = 0..d_max.
std::vector<int> fz_betti(int g, int d_max);
// Quotient of the degree d kappa monomials by the span of the compact-type relations.
int ct_quotient_dim(int g, int n, int d);

std::string to_string(const KappaPoly& p);

}  // namespace taut
