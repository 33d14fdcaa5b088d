#pragma once

#include "thl/tha.hpp"

#include <cstdint>
#include <string>

namespace thl::props {

struct Outcome {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0 && cases > 0; }
    void fail(const std::string& what);
    std::string summary() const;
};

Outcome fermionic_bosonic_inverse(uint32_t seed, int cases);
Outcome koszul_round_trip(const GlGrading& g, int max_level, int max_degree);
// LR products, alt/sym powers and Adams operations against tableau characters
Outcome glrep_oracle(uint32_t seed, int cases);
// (wx|wy) = (x|y) and (uv)x = u(vx), plain and shifted
Outcome weyl_properties(uint32_t seed, int cases);
Outcome charge_law(const BiGradedContent& c, int slope);
// content = rebuild + leftover; fitting the rebuild returns the same tops
Outcome column_fit_properties(uint32_t seed, int cases);

}  // namespace thl::props
