#include "lss/forest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace lss {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // Returns false if x and y were already connected.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

} // namespace

Forest::Forest(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw VertexOutOfRange("vertex count must be nonnegative");
    for (auto& [a, b] : edges) {
        if (a == b) throw SelfLoop("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n)
            throw VertexOutOfRange("edge " + std::to_string(a) + "-" +
                                   std::to_string(b) + " outside 1.." +
                                   std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    for (size_t k = 1; k < edges.size(); ++k)
        if (edges[k] == edges[k - 1])
            throw DuplicateEdge("duplicate edge " + std::to_string(edges[k].first) +
                                "-" + std::to_string(edges[k].second));
    UnionFind uf(n);
    for (const auto& [a, b] : edges)
        if (!uf.unite(a, b))
            throw CycleDetected("edge " + std::to_string(a) + "-" +
                                std::to_string(b) + " closes a cycle");
    edges_ = std::move(edges);
    adj_.assign(n + 1, {});
    for (const auto& [a, b] : edges_) {
        adj_[a].insert(b);
        adj_[b].insert(a);
    }
}

void Forest::check_vertex(Vertex i) const {
    if (i < 1 || i > n_)
        throw VertexOutOfRange("vertex " + std::to_string(i) + " outside 1.." +
                               std::to_string(n_));
}

const VertexSet& Forest::neighborhood(Vertex i) const {
    check_vertex(i);
    return adj_[i];
}

int Forest::degree(Vertex i) const {
    check_vertex(i);
    return static_cast<int>(adj_[i].size());
}

int Forest::max_degree() const {
    int m = 0;
    for (Vertex i = 1; i <= n_; ++i)
        m = std::max(m, static_cast<int>(adj_[i].size()));
    return m;
}

bool Forest::has_edge(Vertex i, Vertex j) const {
    check_vertex(i);
    check_vertex(j);
    return adj_[i].count(j) > 0;
}

bool Forest::is_tree() const {
    return edge_count() == n_ - 1;
}

Forest Forest::induced_subgraph(const VertexSet& keep) const {
    for (Vertex v : keep) check_vertex(v);
    std::vector<Edge> kept;
    for (const auto& e : edges_)
        if (keep.count(e.first) && keep.count(e.second)) kept.push_back(e);
    return Forest(n_, std::move(kept));
}

std::vector<Vertex> Forest::peeling_order() const {
    std::vector<int> deg(n_ + 1);
    for (Vertex i = 1; i <= n_; ++i) deg[i] = static_cast<int>(adj_[i].size());
    std::vector<bool> removed(n_ + 1, false);
    std::set<Vertex> eligible;
    for (Vertex i = 1; i <= n_; ++i)
        if (deg[i] <= 1) eligible.insert(i);
    std::vector<Vertex> order;
    order.reserve(n_);
    while (!eligible.empty()) {
        Vertex v = *eligible.begin();
        eligible.erase(eligible.begin());
        removed[v] = true;
        order.push_back(v);
        for (Vertex u : adj_[v]) {
            if (removed[u]) continue;
            if (--deg[u] == 1) eligible.insert(u);
        }
    }
    return order;
}

std::string Forest::serialize() const {
    std::ostringstream os;
    os << "n=" << n_ << ";";
    for (const auto& [a, b] : edges_) os << " " << a << "-" << b;
    return os.str();
}

std::string Forest::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : edges_) j["edges"].push_back({a, b});
    return j.dump();
}

namespace {

Forest parse_forest_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw SyntaxError("JSON graph needs an integer field \"n\"");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw SyntaxError("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw SyntaxError("each edge must be a pair of integers");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    return Forest(j["n"].get<int>(), std::move(edges));
}

} // namespace

Forest parse_forest(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_forest_json(text);

    int n = -1;
    std::vector<Edge> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            std::string where = "line " + std::to_string(lineno);
            if (tok.rfind("n=", 0) == 0) {
                if (n >= 0) throw SyntaxError(where + ": repeated n= header");
                std::string body = tok.substr(2);
                if (!body.empty() && body.back() == ';') body.pop_back();
                try {
                    size_t pos = 0;
                    n = std::stoi(body, &pos);
                    if (pos != body.size()) throw std::invalid_argument(body);
                } catch (const std::exception&) {
                    throw SyntaxError(where + ": bad vertex count '" + tok + "'");
                }
                continue;
            }
            size_t dash = tok.find('-');
            if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
                throw SyntaxError(where + ": bad token '" + tok + "'");
            int a = 0, b = 0;
            try {
                size_t p1 = 0, p2 = 0;
                a = std::stoi(tok.substr(0, dash), &p1);
                b = std::stoi(tok.substr(dash + 1), &p2);
                if (p1 != dash || p2 != tok.size() - dash - 1)
                    throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw SyntaxError(where + ": bad token '" + tok + "'");
            }
            edges.emplace_back(a, b);
        }
    }
    if (n < 0) throw SyntaxError("missing n=<int>; header");
    return Forest(n, std::move(edges));
}

} // namespace lss
