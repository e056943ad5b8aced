#ifndef LSS_MATROID_HPP
#define LSS_MATROID_HPP

#include <string>
#include <vector>

#include "lss/forest.hpp"
#include "lss/rational_matrix.hpp"

namespace lss {

/// Rank-d paving matroid given by its dependent hyperplanes. Every set of
/// size <= d-1 is independent; a larger set is dependent iff it lies in a
/// hyperplane.
class PavingMatroid {
public:
    PavingMatroid(VertexSet ground, int rank_d,
                  std::vector<VertexSet> hyperplanes);

    const VertexSet& ground() const { return ground_; }
    int rank_d() const { return rank_d_; }
    const std::vector<VertexSet>& hyperplanes() const { return hyperplanes_; }

    int rank(const VertexSet& subset) const;

    std::string to_json() const;

private:
    VertexSet ground_;
    int rank_d_;
    std::vector<VertexSet> hyperplanes_; // sorted
};

/// The paving matroid whose dependent hyperplanes are the neighborhoods of
/// size >= d. Ground set is all of [n].
PavingMatroid matroid_of_forest(const Forest& f, int d);

/// True iff the rows of V (one vector in Q^d per ground element, in increasing
/// ground order) have exactly the dependencies of M: every hyperplane has rank
/// d-1 and every d-subset outside all hyperplanes has rank d.
bool realized_matroid_equals(const RationalMatrix& v, const PavingMatroid& m);

} // namespace lss

#endif
