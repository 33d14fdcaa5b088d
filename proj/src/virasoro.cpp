#include "thl/virasoro.hpp"

#include <stdexcept>

namespace thl {

QSeries::QSeries(int order_) : coefficients(size_t(order_ < 0 ? 0 : order_ + 1)), order(order_)
{
    if (order_ < 0)
        throw std::invalid_argument("series order must be non-negative");
}

QSeries QSeries::substitute_power(int k) const
{
    if (k < 1)
        throw std::invalid_argument("substitution power must be positive");
    QSeries out(order);
    for (int i = 0; i * k <= order; ++i)
        out.coefficients[size_t(i * k)] = coefficients[size_t(i)];
    return out;
}

QSeries QSeries::inverse() const
{
    if (coefficients[0] != 1)
        throw std::invalid_argument("series inverse needs constant term 1");
    QSeries out(order);
    out.coefficients[0] = 1;
    for (int n = 1; n <= order; ++n) {
        BigInt s = 0;
        for (int k = 1; k <= n; ++k)
            s += coefficients[size_t(k)] * out.coefficients[size_t(n - k)];
        out.coefficients[size_t(n)] = -s;
    }
    return out;
}

QSeries QSeries::operator*(const QSeries& o) const
{
    if (order != o.order)
        throw std::invalid_argument("series orders differ");
    QSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (coefficients[size_t(i)] == 0)
            continue;
        for (int j = 0; i + j <= order; ++j)
            out.coefficients[size_t(i + j)] += coefficients[size_t(i)] * o.coefficients[size_t(j)];
    }
    return out;
}

QSeries QSeries::operator-(const QSeries& o) const
{
    if (order != o.order)
        throw std::invalid_argument("series orders differ");
    QSeries out = *this;
    for (int i = 0; i <= order; ++i)
        out.coefficients[size_t(i)] -= o.coefficients[size_t(i)];
    return out;
}

QSeries QSeries::shifted(int k) const
{
    QSeries out(order);
    for (int i = 0; i + k <= order; ++i)
        out.coefficients[size_t(i + k)] = coefficients[size_t(i)];
    return out;
}

std::string QSeries::csv() const
{
    std::string s;
    for (size_t i = 0; i < coefficients.size(); ++i) {
        if (i)
            s += ",";
        s += coefficients[i].str();
    }
    return s;
}

QSeries euler_phi(int order)
{
    QSeries p(order);
    p.coefficients[0] = 1;
    for (int n = 1; n <= order; ++n)
        for (int i = order; i >= n; --i)
            p.coefficients[size_t(i)] -= p.coefficients[size_t(i - n)];
    return p;
}

QSeries coset_character(int order)
{
    QSeries phi = euler_phi(order);
    return phi.substitute_power(2) * phi.inverse();
}

ShiftReport check_nonneg_shift(const QSeries& chi)
{
    ShiftReport rep;
    QSeries one(chi.order);
    one.coefficients[0] = 1;
    rep.difference = chi - one - chi.shifted(1);
    for (int k = 0; k <= chi.order; ++k)
        if (rep.difference[k] < 0) {
            rep.first_negative = k;
            break;
        }
    for (int k = 1; k <= chi.order; ++k)
        if (chi[k] < chi[k - 1]) {
            rep.first_decrease = k;
            break;
        }
    return rep;
}

}  // namespace thl
