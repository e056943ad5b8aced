#include "lss/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "json.hpp"

namespace lss {

namespace {

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

PavingMatroid::PavingMatroid(VertexSet ground, int rank_d,
                             std::vector<VertexSet> hyperplanes)
    : ground_(std::move(ground)), rank_d_(rank_d),
      hyperplanes_(std::move(hyperplanes)) {
    if (rank_d_ < 3) throw DimensionTooSmall("rank must be at least 3");
    std::sort(hyperplanes_.begin(), hyperplanes_.end());
    for (const auto& h : hyperplanes_) {
        if (static_cast<int>(h.size()) < rank_d_)
            throw Error("hyperplane smaller than the rank");
        if (!is_subset(h, ground_))
            throw ElementOutsideGround("hyperplane not contained in ground set");
    }
    // Paving condition: pairwise intersections of size <= d-2.
    for (size_t a = 0; a < hyperplanes_.size(); ++a)
        for (size_t b = a + 1; b < hyperplanes_.size(); ++b) {
            VertexSet inter;
            std::set_intersection(hyperplanes_[a].begin(), hyperplanes_[a].end(),
                                  hyperplanes_[b].begin(), hyperplanes_[b].end(),
                                  std::inserter(inter, inter.begin()));
            if (static_cast<int>(inter.size()) > rank_d_ - 2)
                throw Error("hyperplanes intersect in more than d-2 elements");
        }
}

int PavingMatroid::rank(const VertexSet& subset) const {
    if (!is_subset(subset, ground_))
        throw ElementOutsideGround("subset not contained in ground set");
    if (static_cast<int>(subset.size()) <= rank_d_ - 1)
        return static_cast<int>(subset.size());
    int hits = 0;
    for (const auto& h : hyperplanes_)
        if (is_subset(subset, h)) ++hits;
    // A set of size >= d fits in at most one hyperplane.
    assert(hits <= 1);
    return hits > 0 ? rank_d_ - 1 : rank_d_;
}

std::string PavingMatroid::to_json() const {
    nlohmann::json j;
    j["ground"] = std::vector<Vertex>(ground_.begin(), ground_.end());
    j["rank"] = rank_d_;
    j["hyperplanes"] = nlohmann::json::array();
    for (const auto& h : hyperplanes_)
        j["hyperplanes"].push_back(std::vector<Vertex>(h.begin(), h.end()));
    return j.dump();
}

PavingMatroid matroid_of_forest(const Forest& f, int d) {
    if (d < 3) throw DimensionTooSmall("d must be at least 3");
    VertexSet ground;
    for (Vertex i = 1; i <= f.vertex_count(); ++i) ground.insert(i);
    std::vector<VertexSet> hyperplanes;
    for (Vertex i = 1; i <= f.vertex_count(); ++i)
        if (f.degree(i) >= d) hyperplanes.push_back(f.neighborhood(i));
    return PavingMatroid(std::move(ground), d, std::move(hyperplanes));
}

bool realized_matroid_equals(const RationalMatrix& v, const PavingMatroid& m) {
    const int n = static_cast<int>(m.ground().size());
    const int d = m.rank_d();
    if (v.rows() != n || v.cols() != d)
        throw ShapeMismatch("matrix shape does not match ground set and rank");
    std::map<Vertex, int> row_of; // ground element -> 1-based row
    int r = 1;
    for (Vertex g : m.ground()) row_of[g] = r++;

    auto rank_of = [&](const VertexSet& s) {
        std::vector<int> rows;
        for (Vertex g : s) rows.push_back(row_of.at(g));
        return vector_rank(v, rows);
    };

    for (const auto& h : m.hyperplanes())
        if (rank_of(h) != d - 1) return false;

    // Every d-subset not inside a hyperplane must be independent.
    std::vector<Vertex> g(m.ground().begin(), m.ground().end());
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    if (n < d) return true;
    while (true) {
        VertexSet s;
        for (int i = 0; i < d; ++i) s.insert(g[pick[i]]);
        bool in_hyperplane = false;
        for (const auto& h : m.hyperplanes())
            if (std::includes(h.begin(), h.end(), s.begin(), s.end())) {
                in_hyperplane = true;
                break;
            }
        if (!in_hyperplane && rank_of(s) != d) return false;
        int i = d - 1;
        while (i >= 0 && pick[i] == n - d + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int k = i + 1; k < d; ++k) pick[k] = pick[k - 1] + 1;
    }
    return true;
}

} // namespace lss
