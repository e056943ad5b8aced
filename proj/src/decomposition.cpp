#include "lss/decomposition.hpp"

#include <algorithm>

#include "json.hpp"

namespace lss {

namespace {

VertexSet complement_of(const Forest& f, const VertexSet& s) {
    VertexSet comp;
    for (Vertex i = 1; i <= f.vertex_count(); ++i)
        if (!s.count(i)) comp.insert(i);
    return comp;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

bool is_admissible(const Forest& f, int d, const VertexSet& s) {
    for (Vertex i : s) f.check_vertex(i);
    VertexSet comp = complement_of(f, s);
    for (Vertex i : s) {
        VertexSet surviving = intersect(f.neighborhood(i), comp);
        if (static_cast<int>(surviving.size()) < d) return false;
        for (Vertex j : comp)
            if (is_subset(surviving, intersect(f.neighborhood(j), comp)))
                return false;
    }
    return true;
}

bool is_admissible_rank(const Forest& f, int d, const VertexSet& s) {
    for (Vertex i : s) f.check_vertex(i);
    VertexSet comp = complement_of(f, s);
    PavingMatroid m = matroid_of_forest(f.induced_subgraph(comp), d);
    for (Vertex i : s) {
        VertexSet surviving = intersect(f.neighborhood(i), comp);
        if (m.rank(surviving) != d) return false;
    }
    return true;
}

int component_dimension(const Forest& f, int d, const VertexSet& s) {
    if (!is_admissible(f, d, s))
        throw NotAdmissible("subset is not admissible");
    VertexSet comp = complement_of(f, s);
    int induced_edges = f.induced_subgraph(comp).edge_count();
    return d * (f.vertex_count() - static_cast<int>(s.size())) - induced_edges;
}

namespace {

ComponentReport make_report(const Forest& f, int d, const VertexSet& s) {
    ComponentReport rep;
    rep.S = s;
    VertexSet comp = complement_of(f, s);
    rep.induced_edge_count = f.induced_subgraph(comp).edge_count();
    rep.dim = d * (f.vertex_count() - static_cast<int>(s.size())) -
              rep.induced_edge_count;
    // Greedy rank-d witness per removed vertex, from the paving rank oracle.
    PavingMatroid m = matroid_of_forest(f.induced_subgraph(comp), d);
    for (Vertex i : s) {
        VertexSet surviving = intersect(f.neighborhood(i), comp);
        VertexSet picked;
        for (Vertex a : surviving) {
            if (static_cast<int>(picked.size()) == d) break;
            VertexSet trial = picked;
            trial.insert(a);
            if (m.rank(trial) > m.rank(picked)) picked = trial;
        }
        rep.witness[i] = picked;
    }
    return rep;
}

void finalize(DecompositionResult& res) {
    std::sort(res.components.begin(), res.components.end(),
              [](const ComponentReport& a, const ComponentReport& b) {
                  if (a.S.size() != b.S.size()) return a.S.size() < b.S.size();
                  return a.S < b.S;
              });
    res.variety_dim = 0;
    for (const auto& c : res.components)
        res.variety_dim = std::max(res.variety_dim, c.dim);
}

} // namespace

DecompositionResult enumerate_admissible(const Forest& f, int d,
                                         int candidate_cap) {
    if (d < 3) throw DimensionTooSmall("d must be at least 3");
    std::vector<Vertex> high;
    for (Vertex i = 1; i <= f.vertex_count(); ++i)
        if (f.degree(i) >= d) high.push_back(i);
    if (static_cast<int>(high.size()) > candidate_cap)
        throw SearchSpaceTooLarge(
            std::to_string(high.size()) +
            " high-degree candidates exceed the cap of " +
            std::to_string(candidate_cap));

    DecompositionResult res;
    res.n = f.vertex_count();
    res.d = d;
    const size_t count = size_t{1} << high.size();
    for (size_t mask = 0; mask < count; ++mask) {
        VertexSet s;
        for (size_t b = 0; b < high.size(); ++b)
            if (mask & (size_t{1} << b)) s.insert(high[b]);
        if (is_admissible(f, d, s))
            res.components.push_back(make_report(f, d, s));
    }
    finalize(res);
    return res;
}

Forest star_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex i = 2; i <= n; ++i) edges.emplace_back(1, i);
    return Forest(n, std::move(edges));
}

DecompositionResult star_oracle(int n, int d) {
    if (n < 2) throw VertexOutOfRange("star graph needs n >= 2");
    if (d < 3) throw DimensionTooSmall("d must be at least 3");
    DecompositionResult res;
    res.n = n;
    res.d = d;
    ComponentReport empty;
    empty.induced_edge_count = n - 1;
    empty.dim = d * n - (n - 1);
    res.components.push_back(empty);
    if (n - 1 >= d) {
        ComponentReport center;
        center.S = {1};
        center.induced_edge_count = 0;
        center.dim = d * n - d;
        res.components.push_back(center);
    }
    finalize(res);
    return res;
}

Forest caterpillar_graph(int k, const std::vector<int>& t) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
    int next = k + 1;
    for (int i = 1; i <= k; ++i)
        for (int leaf = 0; leaf < t[i - 1]; ++leaf) edges.emplace_back(i, next++);
    return Forest(next - 1, std::move(edges));
}

DecompositionResult caterpillar_oracle(int k, const std::vector<int>& t, int d) {
    if (k < 1 || static_cast<int>(t.size()) != k)
        throw VertexOutOfRange("need one leaf count per spine vertex");
    if (d < 3) throw DimensionTooSmall("d must be at least 3");
    int n = k;
    for (int ti : t) n += ti;

    auto spine_neighbors_outside = [&](int i, unsigned long long mask) {
        int count = 0;
        if (i > 1 && !(mask & (1ull << (i - 2)))) ++count;
        if (i < k && !(mask & (1ull << i))) ++count;
        return count;
    };

    // Candidates need t_i >= d-2; spine vertices contribute at most 2 more.
    std::vector<int> cand;
    for (int i = 1; i <= k; ++i)
        if (t[i - 1] >= d - 2) cand.push_back(i);
    if (cand.size() > 24)
        throw SearchSpaceTooLarge("too many candidate spine vertices");

    DecompositionResult res;
    res.n = n;
    res.d = d;
    for (size_t mask = 0; mask < (size_t{1} << cand.size()); ++mask) {
        unsigned long long spine_mask = 0; // bit i-1 set iff spine vertex i in S
        VertexSet s;
        for (size_t b = 0; b < cand.size(); ++b)
            if (mask & (size_t{1} << b)) {
                s.insert(cand[b]);
                spine_mask |= 1ull << (cand[b] - 1);
            }
        bool ok = true;
        for (Vertex i : s)
            if (t[i - 1] + spine_neighbors_outside(i, spine_mask) < d) {
                ok = false;
                break;
            }
        if (!ok) continue;
        ComponentReport rep;
        rep.S = s;
        int spine_edges = 0;
        for (int i = 1; i < k; ++i)
            if (!(spine_mask & (1ull << (i - 1))) && !(spine_mask & (1ull << i)))
                ++spine_edges;
        int leaf_edges = 0;
        for (int i = 1; i <= k; ++i)
            if (!(spine_mask & (1ull << (i - 1)))) leaf_edges += t[i - 1];
        rep.induced_edge_count = spine_edges + leaf_edges;
        rep.dim = d * (n - static_cast<int>(s.size())) - rep.induced_edge_count;
        res.components.push_back(rep);
    }
    finalize(res);
    return res;
}

DecompositionResult binary_tree_oracle(const Forest& f, int d) {
    if (d < 3) throw DimensionTooSmall("d must be at least 3");
    if (!f.is_tree() || f.max_degree() > 3)
        throw NotBinaryTree("graph is not a binary tree");
    const int n = f.vertex_count();
    DecompositionResult res;
    res.n = n;
    res.d = d;
    if (d >= 4) {
        ComponentReport empty;
        empty.induced_edge_count = f.edge_count();
        empty.dim = d * n - f.edge_count();
        res.components.push_back(empty);
        finalize(res);
        return res;
    }
    // d = 3: components are the independent sets of degree-3 vertices.
    std::vector<Vertex> deg3;
    for (Vertex i = 1; i <= n; ++i)
        if (f.degree(i) == 3) deg3.push_back(i);
    if (deg3.size() > 24)
        throw SearchSpaceTooLarge("too many degree-3 vertices");
    for (size_t mask = 0; mask < (size_t{1} << deg3.size()); ++mask) {
        VertexSet s;
        for (size_t b = 0; b < deg3.size(); ++b)
            if (mask & (size_t{1} << b)) s.insert(deg3[b]);
        bool independent = true;
        for (Vertex i : s) {
            for (Vertex j : s)
                if (i < j && f.has_edge(i, j)) { independent = false; break; }
            if (!independent) break;
        }
        if (!independent) continue;
        ComponentReport rep;
        rep.S = s;
        rep.induced_edge_count = f.edge_count() - 3 * static_cast<int>(s.size());
        rep.dim = 2 * n + 1;
        res.components.push_back(rep);
    }
    finalize(res);
    return res;
}

std::string DecompositionResult::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["d"] = d;
    j["components"] = nlohmann::json::array();
    for (const auto& c : components) {
        nlohmann::json jc;
        jc["S"] = std::vector<Vertex>(c.S.begin(), c.S.end());
        jc["dim"] = c.dim;
        jc["induced_edges"] = c.induced_edge_count;
        j["components"].push_back(jc);
    }
    j["variety_dim"] = variety_dim;
    return j.dump();
}

} // namespace lss
