#pragma once

#include "thl/branching.hpp"
#include "thl/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thl {

struct BorcherdsLevels {
    std::string spec_id;
    int grading_node = 0;
    int d = 0;
    int max_level = 0;
    int max_degree = 0;
    std::vector<MSeries> levels;          // levels[l] for l = 1..L; levels[0] unused
    std::optional<GradedRepSeries> z_b;   // filled by the peeling route

    const MSeries& level(int l) const;
    BorcherdsLevels truncated(int max_level, int max_degree) const;
};

// Z_mu = sum_p branch(p lambda) t^p
GradedRepSeries minimal_orbit_partition(const GlGrading& g, int max_level, int max_degree,
                                        const ResultCache* cache = nullptr);

// Level-by-level peeling of 1/Z_mu into fermionic and bosonic factors.
BorcherdsLevels extract_levels(const GradedRepSeries& z_mu);

// Same levels through the logarithmic derivative of Z_mu and Adams operations;
// this avoids exterior powers and is the route used by the pipeline.
BorcherdsLevels compute_levels(const GlGrading& g, int max_level, int max_degree,
                               const ResultCache* cache = nullptr);

// prod_q z_F(B_{2q-1}, t^{2q-1}) z_B(B_{2q}, t^{2q}) through the window
GradedRepSeries rebuild_z_b(const BorcherdsLevels& b);

}  // namespace thl
