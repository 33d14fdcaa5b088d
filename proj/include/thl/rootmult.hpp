#pragma once

#include "thl/grading.hpp"
#include "thl/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thl {

struct RootTable {
    std::string spec_id;
    int cutoff = 0;                                 // height bound (0 if bounded by a grading coefficient)
    std::map<std::vector<int>, BigInt> mult;        // positive roots in simple-root coordinates

    BigInt multiplicity(const std::vector<int>& root) const;
};

// Peterson recursion for all positive roots of height <= cutoff.
RootTable peterson_multiplicities(const CartanSpec& spec, int cutoff);
// Same, for all positive roots whose coefficient at node is <= max_coeff;
// the set must be finite (true for the gl gradings used here).
RootTable peterson_multiplicities_graded(const CartanSpec& spec, int node, int max_coeff);

enum class AdjointMethod { Peterson, Denominator };

// adj[m] = gl(d) content of the degree -m root spaces, labelled like branchings
// (highest weights, charge slope*m); adj[0] is the gl(d) adjoint.
MSeries adjoint_gl_grading(const GlGrading& g, int max_degree, AdjointMethod method = AdjointMethod::Denominator);

// gl weight with the given labels and charge; nullopt if not integral.
std::optional<std::vector<int>> gl_weight(const std::vector<int>& labels, int charge);

}  // namespace thl
