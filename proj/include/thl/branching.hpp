#pragma once

#include "thl/cache.hpp"
#include "thl/grading.hpp"
#include "thl/series.hpp"
#include "thl/weyl.hpp"

#include <string>
#include <vector>

namespace thl {

struct BranchResult {
    std::string spec_id;
    std::vector<long long> lambda;
    int grading_node = 0;
    int max_degree = 0;
    MSeries content;                      // content[m] = gl(d) content at degree m
    std::vector<ShiftedImage> provenance; // the numerator terms
};

// Signed sum of (-1)^|w| over the gl-dominant shifted images of lambda, by degree.
MSeries gl_numerator(const GlGrading& g, const std::vector<long long>& lambda, int max_degree,
                     std::vector<ShiftedImage>* terms = nullptr);
// Inverse of the lambda = 0 numerator; memoized per grading.
MSeries denominator_inverse(const GlGrading& g, int max_degree);

BranchResult branch(const GlGrading& g, const std::vector<long long>& lambda, int max_degree,
                    const ResultCache* cache = nullptr);

// Throws std::logic_error unless every irrep at degree m has charge q0 + slope*m.
void check_charge_law(const MSeries& s, int q0, int slope, const std::string& what);

void clear_branching_caches();

}  // namespace thl
