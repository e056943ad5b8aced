#ifndef LSS_DECOMPOSITION_HPP
#define LSS_DECOMPOSITION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lss/forest.hpp"
#include "lss/matroid.hpp"

namespace lss {

/// One irreducible component: the admissible set S together with the
/// dimension d(n-|S|) - |E(G restricted to the complement)|.
struct ComponentReport {
    VertexSet S;
    int dim = 0;
    int induced_edge_count = 0;
    /// For each i in S, a d-subset of N(i) inside the complement whose rank in
    /// the induced matroid is d.
    std::map<Vertex, VertexSet> witness;
};

struct DecompositionResult {
    int n = 0;
    int d = 0;
    std::vector<ComponentReport> components; // ordered by (|S|, lex)
    int variety_dim = 0;

    std::string to_json() const;
};

/// Combinatorial admissibility: every i in S keeps >= d neighbors in the
/// complement and its surviving neighborhood is contained in no surviving
/// vertex's surviving neighborhood.
bool is_admissible(const Forest& f, int d, const VertexSet& s);

/// Matroid form: every i in S has rank(N(i) in complement) = d in the matroid
/// of the induced complement forest.
bool is_admissible_rank(const Forest& f, int d, const VertexSet& s);

int component_dimension(const Forest& f, int d, const VertexSet& s);

/// All admissible subsets with their dimensions. Candidates are restricted to
/// vertices of degree >= d; more than `candidate_cap` of them is an error.
DecompositionResult enumerate_admissible(const Forest& f, int d,
                                         int candidate_cap = 24);

// Closed forms for the classical families; each agrees with
// enumerate_admissible on the explicitly built graph.
DecompositionResult star_oracle(int n, int d);
DecompositionResult caterpillar_oracle(int k, const std::vector<int>& t, int d);
DecompositionResult binary_tree_oracle(const Forest& f, int d);

// Explicit graphs behind the oracles.
Forest star_graph(int n);
Forest caterpillar_graph(int k, const std::vector<int>& t);

} // namespace lss

#endif
