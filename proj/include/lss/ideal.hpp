#ifndef LSS_IDEAL_HPP
#define LSS_IDEAL_HPP

#include <set>
#include <string>
#include <vector>

#include "lss/forest.hpp"
#include "lss/polynomial.hpp"

namespace lss {

using PolynomialSet = std::set<Polynomial>;

/// Ascending chain of generator sets produced by iterated row substitution.
struct GeneratorSet {
    std::vector<PolynomialSet> levels; // levels[j] is X_j, X_{j-1} subset of X_j
    int depth = 0;

    const PolynomialSet& top() const { return levels.back(); }
    std::vector<size_t> level_counts() const;
};

/// One quadric sum_k x_{i,k} x_{j,k} per edge.
std::vector<Polynomial> edge_generators(const Forest& f, int d);

/// det of the d x d symbolic matrix with the given variable rows.
Polynomial symbolic_det(const std::vector<Vertex>& rows, int d);

/// The d signed maximal minors of the (d-1) x d variable matrix with the given
/// rows: entry j (1-based) is (-1)^j det of the submatrix deleting column j.
std::vector<Polynomial> signed_minors(const std::vector<Vertex>& rows, int d);

/// Replaces every x_{i,j} in p by minors[j-1]; result is canonicalized.
Polynomial substitute_row(const Polynomial& p, Vertex i,
                          const std::vector<Polynomial>& minors);

/// X_0 = edge generators; each level applies every single-row substitution
/// (i with deg(i) >= d-1, T a (d-1)-subset of N(i)) to every polynomial of the
/// previous level. All polynomials are canonical and deduplicated.
GeneratorSet ideal_closure(const Forest& f, int d, int depth,
                           size_t level_cap = 10000);

/// Generators of the ideal of V_S: the linear forms x_{i,j} for i in S plus
/// the closure of the induced complement forest. The closure part generates
/// the ideal only up to radical.
struct ComponentIdeal {
    VertexSet S;
    int d = 0;
    std::vector<Variable> linear_generators;
    GeneratorSet closure;
    bool closure_up_to_radical = true;
};

ComponentIdeal component_ideal(const Forest& f, int d, const VertexSet& s,
                               int depth);

enum class ExportFormat { M2, Singular, Json };
ExportFormat parse_export_format(const std::string& name);

/// Self-contained CAS script (or JSON document) declaring the ring over QQ in
/// the variables x_{i,j}, i in [n], j in [d], and the generators. Output is
/// byte-deterministic.
std::string export_generators(const std::vector<Polynomial>& gens, int n, int d,
                              ExportFormat format);
std::string export_component_ideal(const ComponentIdeal& ideal, int n,
                                   ExportFormat format);

} // namespace lss

#endif
