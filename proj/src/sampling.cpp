#include "lss/sampling.hpp"

#include <algorithm>

namespace lss {

bool Point::row_is_zero(Vertex i) const {
    for (int j = 1; j <= d(); ++j)
        if (value(i, j) != 0) return false;
    return true;
}

Rational Point::dot(Vertex i, Vertex j) const {
    Rational sum = 0;
    for (int k = 1; k <= d(); ++k) sum += value(i, k) * value(j, k);
    return sum;
}

SampleConfig SampleConfig::with_subtask(uint64_t task_id) const {
    SampleConfig out = *this;
    out.seed = seed ^ (0x9e3779b97f4a7c15ull * (task_id + 1));
    return out;
}

Rational RationalRng::draw(int pool) {
    auto pick = [&](uint64_t span) { return eng_() % span; };
    long num = static_cast<long>(pick(2ull * pool + 1)) - pool;
    long den = static_cast<long>(pick(pool)) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational RationalRng::draw_nonzero(int pool) {
    Rational r = draw(pool);
    while (r == 0) r = draw(pool);
    return r;
}

namespace {

VertexSet complement_of(const Forest& f, const VertexSet& s) {
    VertexSet comp;
    for (Vertex i = 1; i <= f.vertex_count(); ++i)
        if (!s.count(i)) comp.insert(i);
    return comp;
}

// Peeling order of the induced subgraph restricted to the active vertices.
std::vector<Vertex> peeling_of_subset(const Forest& f, const VertexSet& active) {
    std::vector<Vertex> full = f.induced_subgraph(active).peeling_order();
    std::vector<Vertex> out;
    for (Vertex v : full)
        if (active.count(v)) out.push_back(v);
    return out;
}

// Random nonzero vector orthogonal to v_j: random rational combination of a
// kernel basis of the single row v_j.
void fill_orthogonal_row(Point& p, Vertex target, Vertex anchor, int d,
                         RationalRng& rng, int pool) {
    RationalMatrix row(1, d);
    for (int j = 1; j <= d; ++j) row.at(0, j - 1) = p.value(anchor, j);
    auto basis = row.nullspace(); // d-1 vectors (anchor row is nonzero)
    while (true) {
        std::vector<Rational> v(d, Rational(0));
        for (const auto& b : basis) {
            Rational c = rng.draw(pool);
            for (int j = 0; j < d; ++j) v[j] += c * b[j];
        }
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || x != 0;
        if (!nonzero) continue;
        for (int j = 1; j <= d; ++j) p.value(target, j) = v[j - 1];
        return;
    }
}

bool faithful_on_subset(const Point& p, const Forest& f,
                        const VertexSet& active) {
    for (Vertex i : active)
        for (Vertex j : active) {
            if (i >= j || f.has_edge(i, j)) continue;
            if (p.dot(i, j) == 0) return false;
        }
    return true;
}

bool realizes_on_subset(const Point& p, const Forest& f, int d,
                        const VertexSet& active) {
    Forest induced = f.induced_subgraph(active);
    std::vector<VertexSet> hyperplanes;
    for (Vertex i : active)
        if (induced.degree(i) >= d) hyperplanes.push_back(induced.neighborhood(i));
    PavingMatroid m(active, d, std::move(hyperplanes));
    RationalMatrix rows(static_cast<int>(active.size()), d);
    int r = 0;
    for (Vertex i : active) {
        for (int j = 1; j <= d; ++j) rows.at(r, j - 1) = p.value(i, j);
        ++r;
    }
    return realized_matroid_equals(rows, m);
}

} // namespace

Point sample_VS(const Forest& f, int d, const VertexSet& s,
                const SampleConfig& cfg) {
    if (d < 3) throw DimensionTooSmall("d must be at least 3");
    for (Vertex i : s) f.check_vertex(i);
    const int n = f.vertex_count();
    VertexSet active = complement_of(f, s);
    Point p;
    p.m = RationalMatrix(n, d);
    if (active.empty()) return p; // S = [n]: the zero tuple

    RationalRng rng(cfg.seed);
    std::vector<Vertex> peel = peeling_of_subset(f, active);
    std::string last_failure = "draw";
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        // Build from the last peeled vertex backwards; each vertex sees at
        // most one already placed neighbor.
        VertexSet placed;
        for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
            Vertex v = *it;
            Vertex anchor = 0;
            for (Vertex u : f.neighborhood(v))
                if (placed.count(u)) anchor = u;
            if (anchor == 0) {
                while (true) {
                    bool nonzero = false;
                    for (int j = 1; j <= d; ++j) {
                        p.value(v, j) = rng.draw(cfg.pool);
                        nonzero = nonzero || p.value(v, j) != 0;
                    }
                    if (nonzero) break;
                }
            } else {
                fill_orthogonal_row(p, v, anchor, d, rng, cfg.pool);
            }
            placed.insert(v);
        }
        if (!faithful_on_subset(p, f, active)) {
            last_failure = "faithfulness";
            continue;
        }
        if (!realizes_on_subset(p, f, d, active)) {
            last_failure = "matroid realization";
            continue;
        }
        return p;
    }
    throw SamplingFailed("no sample after " + std::to_string(cfg.max_retries) +
                         " attempts; last failed check: " + last_failure);
}

Point sample_UG(const Forest& f, int d, const SampleConfig& cfg) {
    return sample_VS(f, d, {}, cfg);
}

std::vector<OrthogonalityViolation> check_orthogonality(const Point& p,
                                                        const Forest& f) {
    if (p.n() != f.vertex_count())
        throw ShapeMismatch("point has wrong number of rows");
    std::vector<OrthogonalityViolation> out;
    for (const auto& e : f.edges()) {
        Rational r = p.dot(e.first, e.second);
        if (r != 0) out.push_back({e, r});
    }
    return out;
}

bool check_faithful(const Point& p, const Forest& f) {
    if (p.n() != f.vertex_count())
        throw ShapeMismatch("point has wrong number of rows");
    for (Vertex i = 1; i <= p.n(); ++i)
        if (p.row_is_zero(i))
            throw ZeroRowPresent("row " + std::to_string(i) + " is zero");
    VertexSet all;
    for (Vertex i = 1; i <= p.n(); ++i) all.insert(i);
    return faithful_on_subset(p, f, all);
}

bool check_realizes(const Point& p, const Forest& f, int d) {
    if (p.n() != f.vertex_count() || p.d() != d)
        throw ShapeMismatch("point shape does not match graph and d");
    VertexSet all;
    for (Vertex i = 1; i <= p.n(); ++i) all.insert(i);
    return realizes_on_subset(p, f, d, all);
}

} // namespace lss
