#ifndef LSS_SAMPLING_HPP
#define LSS_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lss/forest.hpp"
#include "lss/matroid.hpp"
#include "lss/rational_matrix.hpp"

namespace lss {

/// n x d matrix of exact rationals; row i is the vector of vertex i.
struct Point {
    RationalMatrix m;

    int n() const { return m.rows(); }
    int d() const { return m.cols(); }
    const Rational& value(Vertex i, int j) const { return m.at(i - 1, j - 1); }
    Rational& value(Vertex i, int j) { return m.at(i - 1, j - 1); }
    bool row_is_zero(Vertex i) const;
    Rational dot(Vertex i, Vertex j) const;
};

struct SampleConfig {
    uint64_t seed = 0;
    int pool = 100;      // numerators/denominators drawn from [-pool, pool]
    int max_retries = 50;

    SampleConfig with_subtask(uint64_t task_id) const;
};

/// Deterministic rational draws for a fixed seed.
class RationalRng {
public:
    explicit RationalRng(uint64_t seed) : eng_(seed) {}
    Rational draw(int pool);          // numerator in [-pool,pool], denominator in [1,pool]
    Rational draw_nonzero(int pool);

private:
    std::mt19937_64 eng_;
};

/// Exact point of U_G: orthogonality holds by construction, faithfulness and
/// matroid realization are enforced by retrying the whole draw.
Point sample_UG(const Forest& f, int d, const SampleConfig& cfg);

/// Point of F(S): rows in S are zero, the rest sample U of the induced
/// complement forest.
Point sample_VS(const Forest& f, int d, const VertexSet& s,
                const SampleConfig& cfg);

struct OrthogonalityViolation {
    Edge edge;
    Rational residual;
};

/// Edges whose dot product is nonzero; empty list means membership.
std::vector<OrthogonalityViolation> check_orthogonality(const Point& p,
                                                        const Forest& f);

/// True iff every non-edge pair has nonzero dot product. All rows must be
/// nonzero.
bool check_faithful(const Point& p, const Forest& f);

/// True iff the rows of p realize the paving matroid of f in rank d.
bool check_realizes(const Point& p, const Forest& f, int d);

} // namespace lss

#endif
