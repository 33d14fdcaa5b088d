#include "thl/series.hpp"

#include <sstream>
#include <stdexcept>

namespace thl {

MSeries mseries_zero(int d, int max_degree)
{
    return MSeries(size_t(max_degree + 1), Rep(d));
}

MSeries mseries_one(int d, int max_degree)
{
    MSeries s = mseries_zero(d, max_degree);
    s[0] = Rep::one(d);
    return s;
}

MSeries mseries_mul(const MSeries& a, const MSeries& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("series windows differ");
    int P = int(a.size()) - 1;
    int d = a.empty() ? 0 : a[0].rank();
    MSeries out = mseries_zero(d, P);
    for (int i = 0; i <= P; ++i) {
        if (a[i].empty())
            continue;
        for (int j = 0; i + j <= P; ++j)
            if (!b[j].empty())
                out[i + j] += tensor(a[i], b[j]);
    }
    return out;
}

MSeries mseries_inverse(const MSeries& a)
{
    int P = int(a.size()) - 1;
    int d = a[0].rank();
    if (a[0] != Rep::one(d))
        throw std::invalid_argument("constant term is not the trivial module");
    MSeries b = mseries_one(d, P);
    for (int m = 1; m <= P; ++m) {
        Rep acc(d);
        for (int i = 1; i <= m; ++i)
            if (!a[i].empty() && !b[m - i].empty())
                acc += tensor(a[i], b[m - i]);
        b[m] = -acc;
    }
    return b;
}

MSeries mseries_adams(const MSeries& a, int k)
{
    int P = int(a.size()) - 1;
    MSeries out = mseries_zero(a[0].rank(), P);
    for (int m = 0; m * k <= P; ++m)
        if (!a[m].empty())
            out[m * k] = adams(a[m], k);
    return out;
}

MSeries mseries_truncate(const MSeries& a, int max_degree)
{
    if (int(a.size()) < max_degree + 1)
        throw std::invalid_argument("cannot extend a truncated series");
    return MSeries(a.begin(), a.begin() + max_degree + 1);
}

bool mseries_nonnegative(const MSeries& a)
{
    for (auto& r : a)
        if (!r.is_nonnegative())
            return false;
    return true;
}

GradedRepSeries::GradedRepSeries(int d, int max_level, int max_degree) : d_(d), L_(max_level), P_(max_degree)
{
    if (max_level < 0 || max_degree < 0)
        throw std::invalid_argument("negative truncation");
    c_.assign(size_t(L_ + 1), mseries_zero(d, P_));
}

GradedRepSeries GradedRepSeries::one(int d, int max_level, int max_degree)
{
    GradedRepSeries s(d, max_level, max_degree);
    s.at(0, 0) = Rep::one(d);
    return s;
}

Rep& GradedRepSeries::at(int l, int m)
{
    if (l < 0 || l > L_ || m < 0 || m > P_)
        throw std::out_of_range("exponent outside the series window");
    return c_[l][m];
}

const Rep& GradedRepSeries::at(int l, int m) const
{
    if (l < 0 || l > L_ || m < 0 || m > P_)
        throw std::out_of_range("exponent outside the series window");
    return c_[l][m];
}

bool GradedRepSeries::operator==(const GradedRepSeries& o) const
{
    if (d_ != o.d_ || L_ != o.L_ || P_ != o.P_)
        return false;
    for (int l = 0; l <= L_; ++l)
        for (int m = 0; m <= P_; ++m)
            if (c_[l][m] != o.c_[l][m])
                return false;
    return true;
}

bool GradedRepSeries::is_one() const
{
    return *this == one(d_, L_, P_);
}

std::string GradedRepSeries::dump() const
{
    std::ostringstream os;
    for (int l = 0; l <= L_; ++l)
        for (int m = 0; m <= P_; ++m)
            if (!c_[l][m].empty())
                os << "t^" << l << " u^" << m << ": " << c_[l][m].str_with_charges() << "\n";
    return os.str();
}

namespace {

void check_window(const GradedRepSeries& a, const GradedRepSeries& b)
{
    if (a.rank() != b.rank())
        throw std::invalid_argument("series over different gl ranks");
    if (a.max_level() != b.max_level() || a.max_degree() != b.max_degree())
        throw std::invalid_argument("series windows differ");
}

GradedRepSeries power_factor(const MSeries& r, int l0, int L, int P, bool fermionic)
{
    if (l0 < 1)
        throw std::invalid_argument("level step must be positive");
    if (!mseries_nonnegative(r))
        throw std::invalid_argument("powers of virtual modules are not supported");
    int d = r.empty() ? 0 : r[0].rank();
    GradedRepSeries out = GradedRepSeries::one(d, L, P);
    for (int m = 0; m < int(r.size()) && m <= P; ++m) {
        if (r[m].empty())
            continue;
        GradedRepSeries f = GradedRepSeries::one(d, L, P);
        for (int i = 1; i * l0 <= L && i * m <= P; ++i) {
            Rep p = fermionic ? alt_power(r[m], i) : sym_power(r[m], i);
            if (fermionic && i % 2)
                p = -p;
            f.at(i * l0, i * m) = p;
            if (fermionic && p.empty())
                break;
        }
        out = multiply(out, f);
    }
    return out;
}

}  // namespace

GradedRepSeries multiply(const GradedRepSeries& a, const GradedRepSeries& b)
{
    check_window(a, b);
    int L = a.max_level(), P = a.max_degree();
    GradedRepSeries out(a.rank(), L, P);
    for (int l1 = 0; l1 <= L; ++l1)
        for (int m1 = 0; m1 <= P; ++m1) {
            const Rep& x = a.at(l1, m1);
            if (x.empty())
                continue;
            for (int l2 = 0; l1 + l2 <= L; ++l2)
                for (int m2 = 0; m1 + m2 <= P; ++m2) {
                    const Rep& y = b.at(l2, m2);
                    if (!y.empty())
                        out.at(l1 + l2, m1 + m2) += tensor(x, y);
                }
        }
    return out;
}

GradedRepSeries invert(const GradedRepSeries& a)
{
    int d = a.rank(), L = a.max_level(), P = a.max_degree();
    if (a.at(0, 0) != Rep::one(d))
        throw std::invalid_argument("constant term is not the trivial module");
    GradedRepSeries b = GradedRepSeries::one(d, L, P);
    for (int l = 0; l <= L; ++l)
        for (int m = 0; m <= P; ++m) {
            if (l == 0 && m == 0)
                continue;
            Rep acc(d);
            for (int i = 0; i <= l; ++i)
                for (int j = 0; j <= m; ++j) {
                    if ((i == 0 && j == 0) || a.at(i, j).empty() || b.at(l - i, m - j).empty())
                        continue;
                    acc += tensor(a.at(i, j), b.at(l - i, m - j));
                }
            b.at(l, m) = -acc;
        }
    return b;
}

GradedRepSeries fermionic_factor(const MSeries& r, int l0, int max_level, int max_degree)
{
    return power_factor(r, l0, max_level, max_degree, true);
}

GradedRepSeries bosonic_factor(const MSeries& r, int l0, int max_level, int max_degree)
{
    return power_factor(r, l0, max_level, max_degree, false);
}

}  // namespace thl
