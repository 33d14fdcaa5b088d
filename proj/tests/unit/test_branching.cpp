#include "../support/properties.hpp"
#include "thl/borcherds.hpp"
#include "thl/branching.hpp"

#include <doctest.h>

using namespace thl;

namespace {

Rep parse_rep(int d, int charge, const std::string& s)
{
    Rep r(d);
    for (auto& [k, labels] : parse_label_terms(s))
        r.add(GlIrrep::from_labels(labels, charge), k);
    return r;
}

}  // namespace

TEST_CASE("series inverse and Adams")
{
    GlGrading g = grading_preset("a1++");
    MSeries n = gl_numerator(g, g.level_weight(0), 6);
    MSeries inv = mseries_inverse(n);
    MSeries one = mseries_mul(n, inv);
    CHECK(one == mseries_one(3, 6));
    MSeries a = mseries_adams(n, 2);
    CHECK(a.size() == n.size());
    CHECK(a[1].empty());
    CHECK(a[2] == adams(n[1], 2));
}

TEST_CASE("trivial weight branches to the trivial module")
{
    GlGrading g = grading_preset("e10");
    BranchResult b = branch(g, g.level_weight(0), 4);
    CHECK(b.content[0] == Rep::one(10));
    for (int m = 1; m <= 4; ++m)
        CHECK(b.content[m].empty());
}

TEST_CASE("level one branchings")
{
    GlGrading a = grading_preset("a1++");
    BranchResult b = branch(a, a.level_weight(1), 1);
    CHECK(b.content[0].str() == "(10)");
    CHECK(b.content[1].str() == "(01)");
    GlGrading e = grading_preset("e10");
    BranchResult c = branch(e, e.level_weight(1), 3);
    CHECK(c.content[0].str() == "(100000000)");
    CHECK(c.provenance.size() == 5);
}

TEST_CASE("z_F z_B = 1 on random genuine input")
{
    auto o = props::fermionic_bosonic_inverse(11, 25);
    INFO(o.summary());
    CHECK(o.ok());
}

TEST_CASE("Koszul round trip")
{
    for (auto [name, L, P] : {std::tuple{"a1++", 7, 7}, std::tuple{"a1+", 6, 6}, std::tuple{"e10", 3, 3},
                              std::tuple{"e9", 3, 3}}) {
        auto o = props::koszul_round_trip(grading_preset(name), L, P);
        INFO(o.summary());
        CHECK(o.ok());
    }
}

TEST_CASE("first Borcherds levels of A1++")
{
    GlGrading g = grading_preset("a1++");
    BorcherdsLevels b = compute_levels(g, 3, 4);
    CHECK(b.level(1)[0].str() == "(10)");
    CHECK(b.level(1)[1].str() == "(01)");
    MSeries chi1 = branch(g, g.level_weight(1), 4).content;
    MSeries chi2 = branch(g, g.level_weight(2), 4).content;
    for (int m = 0; m <= 4; ++m)
        CHECK(b.level(1)[m] == chi1[m]);
    // B_2 = sym^2 B_1 - chi_2, computed gradewise
    for (int m = 0; m <= 4; ++m) {
        Rep s(3);
        for (int a = 0; a <= m; ++a) {
            int c = m - a;
            if (a < c)
                s += tensor(chi1[a], chi1[c]);
            else if (a == c)
                s += sym_power(chi1[a], 2);
        }
        CHECK(b.level(2)[m] == s - chi2[m]);
    }
    CHECK(b.level(2)[2] == parse_rep(3, 2 * 2 - 2, "(02)"));
}

TEST_CASE("windows are monotone")
{
    GlGrading g = grading_preset("a1++");
    BorcherdsLevels big = compute_levels(g, 7, 7);
    BorcherdsLevels small = compute_levels(g, 4, 5);
    for (int l = 1; l <= 4; ++l)
        for (int m = 0; m <= 5; ++m)
            CHECK(big.level(l)[m] == small.level(l)[m]);
    BorcherdsLevels cut = big.truncated(4, 5);
    for (int l = 1; l <= 4; ++l)
        CHECK(cut.level(l) == small.level(l));
}

TEST_CASE("charge law violations are reported")
{
    MSeries s = mseries_zero(3, 1);
    s[1].add(GlIrrep::from_labels({1, 0}, 2), 1);
    CHECK_NOTHROW(check_charge_law(s, 0, 2, "test"));
    CHECK_THROWS_AS(check_charge_law(s, 0, 3, "test"), std::logic_error);
}
