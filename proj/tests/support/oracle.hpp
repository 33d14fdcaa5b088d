#pragma once

#include "thl/glrep.hpp"

#include <map>
#include <random>
#include <vector>

namespace thl::oracle {

// Full weight multiset of a gl(d) module, every weight (not only dominant ones).
using Character = std::map<std::vector<int>, BigInt>;

Character irrep_character(const GlIrrep& x);  // semistandard tableaux count
Character character(const Rep& r);
Rep decompose(Character c);                     // peel lexicographically highest weights
Character product(const Character& a, const Character& b);
Character alt(const Character& c, int k);       // k-subsets of the weight list
Character sym(const Character& c, int k);       // k-multisets of the weight list
Character adams(const Character& c, int k);

GlIrrep random_irrep(std::mt19937& rng, int d, int max_label, int charge_lo = -2, int charge_hi = 2);

}  // namespace thl::oracle
