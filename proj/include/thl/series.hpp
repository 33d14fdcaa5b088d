#pragma once

#include "thl/glrep.hpp"

#include <string>
#include <vector>

namespace thl {

// Single-variable series in the degree m: entry m is the coefficient of u^m.
using MSeries = std::vector<Rep>;

MSeries mseries_zero(int d, int max_degree);
MSeries mseries_one(int d, int max_degree);
MSeries mseries_mul(const MSeries& a, const MSeries& b);
// b with a*b = 1; a[0] must be the trivial module
MSeries mseries_inverse(const MSeries& a);
// u^m -> u^{km} together with psi^k on coefficients
MSeries mseries_adams(const MSeries& a, int k);
MSeries mseries_truncate(const MSeries& a, int max_degree);
bool mseries_nonnegative(const MSeries& a);

// Bigraded series in (level l, degree m) with a hard window 0..L x 0..P.
class GradedRepSeries {
public:
    GradedRepSeries() = default;
    GradedRepSeries(int d, int max_level, int max_degree);
    static GradedRepSeries one(int d, int max_level, int max_degree);

    int rank() const { return d_; }
    int max_level() const { return L_; }
    int max_degree() const { return P_; }
    Rep& at(int l, int m);
    const Rep& at(int l, int m) const;
    const MSeries& level(int l) const { return c_[l]; }
    MSeries& level(int l) { return c_[l]; }

    bool operator==(const GradedRepSeries& o) const;
    bool operator!=(const GradedRepSeries& o) const { return !(*this == o); }
    bool is_one() const;
    std::string dump() const;

private:
    int d_ = 0, L_ = 0, P_ = 0;
    std::vector<MSeries> c_;
};

GradedRepSeries multiply(const GradedRepSeries& a, const GradedRepSeries& b);
GradedRepSeries invert(const GradedRepSeries& a);

// z_F(R, t^l0) = sum_i (-1)^i wedge^i R t^{l0 i}, resp. z_B with symmetric
// powers; R is m-graded and must be a genuine module.
GradedRepSeries fermionic_factor(const MSeries& r, int l0, int max_level, int max_degree);
GradedRepSeries bosonic_factor(const MSeries& r, int l0, int max_level, int max_degree);

}  // namespace thl
