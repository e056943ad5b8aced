#ifndef LSS_FOREST_HPP
#define LSS_FOREST_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lss/errors.hpp"

namespace lss {

using Vertex = int;
using VertexSet = std::set<Vertex>;
using Edge = std::pair<Vertex, Vertex>; // stored with first < second

/// A simple acyclic graph on vertices 1..n. Immutable after construction.
class Forest {
public:
    Forest(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const VertexSet& neighborhood(Vertex i) const;
    int degree(Vertex i) const;
    int max_degree() const;
    bool has_edge(Vertex i, Vertex j) const;
    bool is_tree() const; // connected forest

    /// Edges of the subgraph induced on `keep`; vertex labels are preserved.
    Forest induced_subgraph(const VertexSet& keep) const;

    /// Order in which each vertex has degree <= 1 among the vertices not yet
    /// listed. Smallest eligible vertex first.
    std::vector<Vertex> peeling_order() const;

    std::string serialize() const;
    std::string to_json() const;

    bool operator==(const Forest& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

    void check_vertex(Vertex i) const;

private:
    int n_;
    std::vector<Edge> edges_; // sorted lexicographically
    std::vector<VertexSet> adj_; // 1-based
};

/// Parses the edge-list format "n=<int>; i-j i-j ..." (with '#' comments) or
/// a JSON object {"n": int, "edges": [[i,j],...]}.
Forest parse_forest(const std::string& text);

} // namespace lss

#endif
