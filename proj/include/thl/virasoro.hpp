#pragma once

#include "thl/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thl {

// Power series in q truncated at q^order; always order+1 coefficients.
struct QSeries {
    std::vector<BigInt> coefficients;
    int order = 0;

    explicit QSeries(int order);
    BigInt operator[](int k) const { return coefficients[size_t(k)]; }
    QSeries substitute_power(int k) const;  // q -> q^k, same order
    QSeries inverse() const;                // constant term must be 1
    QSeries operator*(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries shifted(int k) const;           // multiply by q^k
    bool operator==(const QSeries& o) const { return order == o.order && coefficients == o.coefficients; }
    std::string csv() const;
};

QSeries euler_phi(int order);
QSeries coset_character(int order);

struct ShiftReport {
    QSeries difference{0};                // chi - 1 - q chi
    std::optional<int> first_negative;
    std::optional<int> first_decrease;    // first k with chi_k < chi_{k-1}
    bool pass() const { return !first_negative; }
};

ShiftReport check_nonneg_shift(const QSeries& chi);

}  // namespace thl
