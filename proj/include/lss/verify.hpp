#ifndef LSS_VERIFY_HPP
#define LSS_VERIFY_HPP

#include <string>
#include <vector>

#include "lss/decomposition.hpp"
#include "lss/ideal.hpp"
#include "lss/sampling.hpp"

namespace lss {

struct JacobianCheck {
    bool confirmed = false;
    int jacobian_rank = -1;
    int expected_dim = 0;
    int retries = 0;
};

/// Samples a point of F(S) and compares nd minus the exact rank of the edge
/// Jacobian with the predicted component dimension. Resamples on mismatch.
JacobianCheck jacobian_dimension_check(const Forest& f, int d,
                                       const VertexSet& s,
                                       const SampleConfig& cfg);

/// For a non-admissible S: finds i in S with deficient surviving rank,
/// replaces row i by an exact kernel vector, and checks the modified point
/// lies in the variety with zero rows exactly S \ {i}.
bool degeneration_test(const Forest& f, int d, const VertexSet& s,
                       const SampleConfig& cfg);

struct PairCertificate {
    VertexSet S;       // the component whose sample is tested
    VertexSet S_other; // the component it is shown not to lie in
    enum class Witness { ZeroPattern, RankWitness } witness;
    bool ok = false;
};

struct IrredundancyReport {
    std::vector<PairCertificate> pairs;
    bool all_ok = true;
};

/// Certifies, for every ordered pair of distinct admissible sets (S, S'),
/// that a sampled point of F(S) does not lie in V_{S'}.
IrredundancyReport irredundancy_test(const Forest& f, int d,
                                     const SampleConfig& cfg);

/// Every generator of every level evaluates to exactly zero at `samples`
/// independently sampled points of U_G.
bool vanishing_test(const GeneratorSet& gens, const Forest& f, int d,
                    int samples, const SampleConfig& cfg);

/// Jacobian of the edge quadrics at p: one row per edge, nd columns.
RationalMatrix edge_jacobian(const Forest& f, const Point& p);

} // namespace lss

#endif
