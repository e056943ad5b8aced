#include "lss/verify.hpp"

#include <algorithm>

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

RationalMatrix rows_of(const Point& p, const VertexSet& vertices) {
    RationalMatrix m(static_cast<int>(vertices.size()), p.d());
    int r = 0;
    for (Vertex v : vertices) {
        for (int j = 1; j <= p.d(); ++j) m.at(r, j - 1) = p.value(v, j);
        ++r;
    }
    return m;
}

} // namespace

RationalMatrix edge_jacobian(const Forest& f, const Point& p) {
    const int n = f.vertex_count(), d = p.d();
    RationalMatrix jac(f.edge_count(), n * d);
    int row = 0;
    for (const auto& [i, j] : f.edges()) {
        for (int k = 1; k <= d; ++k) {
            jac.at(row, (i - 1) * d + (k - 1)) = p.value(j, k);
            jac.at(row, (j - 1) * d + (k - 1)) = p.value(i, k);
        }
        ++row;
    }
    return jac;
}

JacobianCheck jacobian_dimension_check(const Forest& f, int d,
                                       const VertexSet& s,
                                       const SampleConfig& cfg) {
    JacobianCheck out;
    out.expected_dim = component_dimension(f, d, s); // throws if not admissible
    const int nd = f.vertex_count() * d;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Point p = sample_VS(f, d, s, cfg.with_subtask(attempt));
        int r = edge_jacobian(f, p).rank();
        out.jacobian_rank = r;
        out.retries = attempt;
        if (nd - r == out.expected_dim) {
            out.confirmed = true;
            return out;
        }
    }
    return out; // inconclusive
}

bool degeneration_test(const Forest& f, int d, const VertexSet& s,
                       const SampleConfig& cfg) {
    VertexSet comp = complement_of(f, s);
    PavingMatroid m = matroid_of_forest(f.induced_subgraph(comp), d);
    Vertex witness = 0;
    for (Vertex i : s) {
        VertexSet surviving = intersect(f.neighborhood(i), comp);
        if (static_cast<int>(surviving.size()) < d || m.rank(surviving) < d) {
            witness = i;
            break;
        }
    }
    if (witness == 0)
        throw WitnessNotFound("every vertex of S has full surviving rank");

    Point p = sample_VS(f, d, s, cfg);
    VertexSet surviving = intersect(f.neighborhood(witness), comp);
    auto kernel = rows_of(p, surviving).nullspace();
    if (kernel.empty()) return false; // rank was d after all
    const auto& w = kernel.front();

    Point moved = p;
    for (int j = 1; j <= d; ++j) moved.value(witness, j) = w[j - 1];

    if (!check_orthogonality(moved, f).empty()) return false;
    VertexSet expected_zeros = s;
    expected_zeros.erase(witness);
    for (Vertex i = 1; i <= f.vertex_count(); ++i)
        if (moved.row_is_zero(i) != (expected_zeros.count(i) > 0)) return false;
    return true;
}

IrredundancyReport irredundancy_test(const Forest& f, int d,
                                     const SampleConfig& cfg) {
    IrredundancyReport report;
    DecompositionResult dec = enumerate_admissible(f, d);
    std::vector<Point> samples;
    for (size_t k = 0; k < dec.components.size(); ++k)
        samples.push_back(
            sample_VS(f, d, dec.components[k].S, cfg.with_subtask(k)));

    for (size_t a = 0; a < dec.components.size(); ++a) {
        for (size_t b = 0; b < dec.components.size(); ++b) {
            if (a == b) continue;
            const VertexSet& s = dec.components[a].S;
            const VertexSet& s_other = dec.components[b].S;
            const Point& p = samples[a];
            PairCertificate cert;
            cert.S = s;
            cert.S_other = s_other;
            if (!std::includes(s.begin(), s.end(), s_other.begin(),
                               s_other.end())) {
                // Some vertex of S' \ S must have a nonzero row in p, which
                // rules out membership in V_{S'}.
                cert.witness = PairCertificate::Witness::ZeroPattern;
                cert.ok = false;
                for (Vertex j : s_other)
                    if (!s.count(j) && !p.row_is_zero(j)) cert.ok = true;
            } else {
                // S' is a proper subset of S: exhibit d linearly independent
                // rows inside a surviving neighborhood of some i in S \ S'.
                cert.witness = PairCertificate::Witness::RankWitness;
                cert.ok = false;
                for (Vertex i : s) {
                    if (s_other.count(i)) continue;
                    const VertexSet& witness_set =
                        dec.components[a].witness.at(i);
                    if (rows_of(p, witness_set).rank() == d) {
                        cert.ok = true;
                        break;
                    }
                }
            }
            report.pairs.push_back(cert);
            report.all_ok = report.all_ok && cert.ok;
        }
    }
    return report;
}

bool vanishing_test(const GeneratorSet& gens, const Forest& f, int d,
                    int samples, const SampleConfig& cfg) {
    for (int k = 0; k < samples; ++k) {
        Point p = sample_UG(f, d, cfg.with_subtask(k));
        auto value_of = [&](Variable v) { return p.value(v.i, v.j); };
        for (const auto& poly : gens.top())
            if (poly.evaluate(value_of) != 0) return false;
    }
    return true;
}

} // namespace lss
