#pragma once

#include "thl/cartan.hpp"
#include "thl/glrep.hpp"

#include <string>
#include <vector>

namespace thl {

// A gl(d) grading of g^(n): the A_{d-1} chain of bosonic nodes plus one
// grading node.  The chain is listed so that chain[0] carries the first label.
struct GlGrading {
    CartanSpec spec;           // bosonic g^(n)
    std::vector<int> chain;
    int grading_node = 0;
    int d = 0;
    int slope = 0;             // charge added per unit of degree
    int mu = 0;                // grading coefficient of the affine null root (0 if none)
    int n = 0;
    BaseSeries series = BaseSeries::Explicit;
    int r = 0;
    int lambda_node = 0;       // node the fermionic node attaches to
    std::string name;

    std::vector<int> chain_labels(const std::vector<long long>& labels) const;
    // gl(1) charge of the degree-0 piece of L(lambda); lambda must vanish on the grading node
    int charge0(const std::vector<long long>& lambda) const;
    GlIrrep irrep(const std::vector<long long>& labels, long long degree, int charge0) const;
    // lambda = k times the fundamental weight of lambda_node
    std::vector<long long> level_weight(int k) const;
    std::string id() const;
};

GlGrading make_grading(const CartanSpec& spec, const std::vector<int>& chain, int grading_node);
// g^(n) for the E8 or A_r series with the standard chain and grading node.
GlGrading series_grading(BaseSeries base, int r, int n);
// "e10", "e9", "e11", "a1++", "a1+", "a2++", ...; throws std::invalid_argument
GlGrading grading_preset(const std::string& name);

}  // namespace thl
