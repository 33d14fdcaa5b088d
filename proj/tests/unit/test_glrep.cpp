#include "../support/oracle.hpp"
#include "../support/properties.hpp"
#include "thl/glrep.hpp"

#include <doctest.h>

using namespace thl;

namespace {

GlIrrep irr(std::vector<int> labels, int charge)
{
    return GlIrrep::from_labels(labels, charge);
}

}  // namespace

TEST_CASE("irrep conventions")
{
    GlIrrep one_form = form_irrep(3, 1);
    CHECK(one_form.labels() == std::vector<int>{0, 1});
    CHECK(one_form.charge() == 1);
    CHECK(form_irrep(10, 3).labels() == std::vector<int>{0, 0, 0, 0, 0, 0, 1, 0, 0});
    CHECK(form_irrep(4, 0).is_trivial());
    CHECK(dim(irr({1, 1}, 0)) == 8);
    CHECK(dim(irr({0, 0, 0, 0, 0, 0, 1, 0, 0}, 3)) == 120);
    GlIrrep x = irr({2, 1}, 5);
    CHECK(x.dual().labels() == std::vector<int>{1, 2});
    CHECK(x.dual().charge() == -5);
    CHECK(x.twist(1).charge() == 5 - 3);
    CHECK(x.twist(1).labels() == x.labels());
    CHECK_FALSE(GlIrrep::congruent({1, 0}, 0));
    CHECK_THROWS(GlIrrep::from_labels({1, 0}, 0));
}

TEST_CASE("small tensor products")
{
    Rep v = Rep::irrep(form_irrep(3, 1));
    Rep vv = tensor(v, v);
    CHECK(vv == Rep::irrep(irr({0, 2}, 2)) + Rep::irrep(irr({1, 0}, 2)));
    CHECK(sym_power(v, 2) == Rep::irrep(irr({0, 2}, 2)));
    CHECK(alt_power(v, 2) == Rep::irrep(irr({1, 0}, 2)));
    CHECK(alt_power(v, 4).empty());
    Rep sq = Rep::irrep(GlIrrep::from_weight({4, 2, 0}));
    CHECK(tensor(sq, sq).coeff(GlIrrep::from_weight({6, 3, 3})) == 1);
}

TEST_CASE("ring against the tableau oracle")
{
    auto o = props::glrep_oracle(2024, 260);
    INFO(o.summary());
    CHECK(o.cases >= 500);
    CHECK(o.ok());
}

TEST_CASE("character round trip")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 60; ++i) {
        int d = 2 + i % 3;
        Rep r = Rep::irrep(oracle::random_irrep(rng, d, 3)) + Rep::irrep(oracle::random_irrep(rng, d, 2)) * BigInt(2);
        CHECK(from_character(to_character(r)) == r);
        CHECK(oracle::decompose(oracle::character(r)) == r);
        CHECK(dim(r) == [&] {
            BigInt s = 0;
            for (auto& [w, m] : oracle::character(r))
                s += m;
            return s;
        }());
    }
}

TEST_CASE("exact division and signs")
{
    Rep r = Rep::irrep(irr({1, 0}, 2), 6) - Rep::irrep(irr({0, 1}, 1), 3);
    CHECK(r.divided_exact(3) == Rep::irrep(irr({1, 0}, 2), 2) - Rep::irrep(irr({0, 1}, 1)));
    CHECK_THROWS(r.divided_exact(4));
    CHECK_FALSE(r.is_nonnegative());
    CHECK((-r).dual().dual() == -r);
}

TEST_CASE("label parsing")
{
    auto t = parse_label_terms("20(01) (12) 2(0,10)");
    REQUIRE(t.size() == 3);
    CHECK(t[0].first == 20);
    CHECK(t[0].second == std::vector<int>{0, 1});
    CHECK(t[2].second == std::vector<int>{0, 10});
}
