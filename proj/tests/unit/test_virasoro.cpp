#include "thl/virasoro.hpp"

#include <doctest.h>

#include <functional>

using namespace thl;

namespace {

std::vector<BigInt> to_big(std::vector<int> v)
{
    return {v.begin(), v.end()};
}

// partitions of n into distinct parts, by brute force
long distinct_partitions(int n, int max_part)
{
    if (n == 0)
        return 1;
    long s = 0;
    for (int p = std::min(n, max_part); p >= 1; --p)
        s += distinct_partitions(n - p, p - 1);
    return s;
}

}  // namespace

TEST_CASE("Euler function")
{
    CHECK(euler_phi(0).coefficients == to_big({1}));
    CHECK(euler_phi(6).coefficients == to_big({1, -1, -1, 0, 0, 1, 0}));
    CHECK(euler_phi(4).substitute_power(2).coefficients == to_big({1, 0, -1, 0, -1}));
    QSeries p = euler_phi(40);
    CHECK((p * p.inverse()).coefficients == [] {
        QSeries one(40);
        one.coefficients[0] = 1;
        return one.coefficients;
    }());
}

TEST_CASE("coset character")
{
    QSeries chi = coset_character(60);
    CHECK(chi[0] == 1);
    for (int k = 0; k <= 40; ++k)
        CHECK(chi[k] == distinct_partitions(k, k));
    CHECK((chi * euler_phi(60)) == euler_phi(60).substitute_power(2));
    for (int k = 0; k <= 50; ++k)
        CHECK(chi[k] > 0);
    CHECK(coset_character(12).coefficients == to_big({1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15}));
}

TEST_CASE("shifted difference")
{
    ShiftReport r = check_nonneg_shift(coset_character(200));
    CHECK(r.pass());
    CHECK_FALSE(r.first_decrease);
    CHECK(check_nonneg_shift(coset_character(0)).difference.coefficients == to_big({0}));
    QSeries bad(3);
    bad.coefficients = to_big({1, 3, 1, 0});
    ShiftReport b = check_nonneg_shift(bad);
    CHECK(b.first_negative == 2);
    CHECK(b.first_decrease == 2);
    CHECK_THROWS(QSeries(-1));
}
