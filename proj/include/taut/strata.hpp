#pragma once

#include "taut/decoration.hpp"
#include "taut/rational.hpp"
#include "taut/series.hpp"
#include "taut/stable_graph.hpp"

#include <map>
#include <vector>

namespace taut {

// A canonical pair [graph, decoration]. It stands for the push-forward of
// the decoration along the gluing map of the graph, with no 1/|Aut| factor.
struct DecoratedStratum {
    StableGraph graph;
    Decoration deco;
    std::vector<int> key;  // canonical code, identifies the isomorphism class

    static DecoratedStratum make(const StableGraph& gr, const Decoration& d);
    int degree() const { return graph.num_edges() + deco.degree(); }
    bool operator<(const DecoratedStratum& o) const { return key < o.key; }
    bool operator==(const DecoratedStratum& o) const { return key == o.key; }
};

class StrataElement {
public:
    StrataElement() = default;
    StrataElement(int g, int n) : g_(g), n_(n) {}

    int g() const { return g_; }
    int n() const { return n_; }
    const std::map<DecoratedStratum, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const DecoratedStratum& s, const Rational& c);
    // Canonicalizes; terms whose decoration exceeds a vertex dimension vanish.
    void add(const StableGraph& gr, const Decoration& d, const Rational& c);
    Rational coeff(const DecoratedStratum& s) const;

    StrataElement& operator+=(const StrataElement& o);
    StrataElement& operator-=(const StrataElement& o);
    StrataElement& operator*=(const Rational& c);
    friend StrataElement operator+(StrataElement a, const StrataElement& b) { return a += b; }
    friend StrataElement operator-(StrataElement a, const StrataElement& b) { return a -= b; }
    friend StrataElement operator*(StrataElement a, const Rational& c) { return a *= c; }
    bool operator==(const StrataElement& o) const;

    StrataElement degree_part(int d) const;
    // -1 if empty, -2 if mixed
    int degree() const;

private:
    void check_ambient(const StrataElement& o) const;
    int g_ = 0, n_ = 0;
    std::map<DecoratedStratum, Rational> terms_;
};

StrataElement fundamental_class(int g, int n);

std::vector<DecoratedStratum> basis(int g, int n, int d);
// Column index lookup for a basis.
std::map<std::vector<int>, int> basis_index(const std::vector<DecoratedStratum>& b);

enum class Locus { smooth, compact_type, rational_tails };
StrataElement restrict(const StrataElement& x, Locus locus);

// x * psi_i^power, where psi_i pulls back to the leg carrying marking i.
StrataElement multiply_psi(const StrataElement& x, int marking, int power = 1);

// Push-forward along the map forgetting the given marking; later markings
// shift down by one.
StrataElement forgetful_pushforward(const StrataElement& x, int marking);
StrataElement forget_last(const StrataElement& x, int count = 1);

// One forgetful push on a single vertex: genus g, psi exponents on its
// half-edges, kappa multiset; forgets half-edge slot j. kappa_0 is replaced
// by 2g-2+(valence after forgetting).
struct VertexTerm {
    std::vector<int> kappa;
    std::vector<int> psi;
    Rational coeff;
};
std::vector<VertexTerm> push_vertex(int g, const std::vector<int>& kappa, const std::vector<int>& psi, int slot);

// Polynomials in kappa_1, kappa_2, ... as sorted multisets of indices.
using KappaPoly = std::map<std::vector<int>, Rational>;

// p_{m*}(psi_{n+1}^{k_1} ... psi_{n+m}^{k_m}) with every k_j >= 2.
KappaPoly pushforward_psi_powers(std::vector<int> ks);
// kappa(f) truncated at degree_bound, f given by T-coefficients with f_0 = f_1 = 0.
KappaPoly kappa_of_f_poly(const std::vector<Rational>& f, int degree_bound);
StrataElement kappa_of_f(const std::vector<Rational>& f, int g, int n, int degree_bound);
StrataElement kappa_of_f(const Series& f, int g, int n, int degree_bound);

// kappa/psi monomial on the ambient space: kappa indices (>= 0) and psi
// exponents per marking.
struct Monomial {
    std::vector<int> kappa;
    std::vector<int> psi;
};
DecoPoly pullback_monomial(const StableGraph& gr, const Monomial& mono);
StrataElement monomial_class(int g, int n, const Monomial& mono);

StrataElement xi_pushforward(const StableGraph& gr, const std::vector<StrataElement>& vertex_classes);

// Generic (A,B)-structures for the excess intersection product.
struct GenericStructure {
    StableGraph gamma;
    Rational weight;
    std::vector<int> a_vertex;     // gamma vertex -> A vertex
    std::vector<int> b_vertex;     // gamma vertex -> B vertex
    std::vector<int> a_half_edge;  // A half-edge -> gamma half-edge
    std::vector<int> b_half_edge;  // B half-edge -> gamma half-edge
    std::vector<int> excess;       // one half-edge per edge lying in both A and B
};
// A and B must be canonical graphs of the same ambient space. Cached.
const std::vector<GenericStructure>& generic_structures(const StableGraph& a, const StableGraph& b);

// Decoration pulled back along the A (or B) structure.
DecoPoly structure_pullback(const GenericStructure& s, const Decoration& d, bool side_a);
DecoPoly excess_factor(const GenericStructure& s, int max_degree);

StrataElement product(const StrataElement& x, const StrataElement& y);

}  // namespace taut
