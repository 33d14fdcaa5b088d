#include "../support/properties.hpp"
#include "thl/rootmult.hpp"
#include "thl/tha.hpp"

#include <doctest.h>

using namespace thl;

namespace {

Rep rep(int d, int charge, const std::string& s)
{
    Rep r(d);
    for (auto& [k, labels] : parse_label_terms(s))
        r.add(GlIrrep::from_labels(labels, charge), k);
    return r;
}

struct A1Fixture {
    GlGrading g = grading_preset("a1++");
    BorcherdsLevels levels = compute_levels(g, 9, 8);
    MSeries adj = adjoint_gl_grading(g, 8);
    BiGradedContent content = assemble_content(g, levels, &adj, AssemblyMode::Conjecture, 8);
};

}  // namespace

TEST_CASE("column fit on synthetic input")
{
    auto o = props::column_fit_properties(99, 200);
    INFO(o.summary());
    CHECK(o.ok());
}

TEST_CASE("single top spreads over forms")
{
    BiGradedContent c;
    c.d = 3;
    c.slope = 2;
    c.lmin = -3;
    c.lmax = 2;
    c.max_degree = 1;
    Rep top = rep(3, 2 * 1 - 2, "(11)");
    for (int p = 0; p <= 3; ++p)
        c.add(2 - p, 1, tensor(top, Rep::irrep(form_irrep(3, p))));
    ColumnFit fit = column_fit(c);
    CHECK(fit.tops.size() == 1);
    CHECK(fit.top(2, 1) == top);
    CHECK(fit.clean());
    c.add(0, 1, rep(3, 2, "(10)"));
    ColumnFit extra = column_fit(c);
    CHECK(extra.top(0, 1) == rep(3, 2, "(10)"));
    c.add(1, 1, -rep(3, 1, "(01)") * BigInt(5));
    ColumnFit bad = column_fit(c);
    CHECK(bad.surplus.size() == 1);
    CHECK_FALSE(bad.clean());
}

TEST_CASE("A1++ conjecture content")
{
    A1Fixture f;
    auto law = props::charge_law(f.content, 2);
    CHECK(law.ok());
    CHECK(f.content.lmin == -5);
    ColumnFit fit;
    CheckReport rep = verify_conjecture(f.content, &fit);
    CHECK(rep.pass);
    CHECK(fit.top(1, 0).str() == "(10)");
    CHECK(fit.top(2, 2).str() == "(02)");
    CHECK(fit.top(3, 3).str() == "(11)");
    CHECK(f.content.cell(-2, 1) == f.content.cell(1, 0).dual().twist(-1));
    CHECK(f.content.cell(-2, 1).str() == "(01)");
    CHECK(check_reflection(f.content, f.g).pass);
    CHECK(check_column_tops(fit, f.adj, f.g).pass);
    CheckReport diag = check_free_diagonal(f.content, 1);
    CHECK(diag.pass);
    CHECK(diag.checked == 8);
}

TEST_CASE("free Lie pieces on one odd generator triple")
{
    Rep v = rep(3, 1, "(01)");
    auto pieces = free_lie_pieces(v, 4, true);
    CHECK(pieces[1] == v);
    CHECK(pieces[2].str() == "(02)");
    CHECK(pieces[3].str() == "(11)");
    CHECK(pieces[4].str() == "(01) (12)");
    auto even = free_lie_pieces(v, 2, false);
    CHECK(even[2].str() == "(10)");
    CHECK(free_lie_pieces(Rep(3), 3, true)[3].empty());
}

TEST_CASE("broken content fails the checks")
{
    A1Fixture f;
    BiGradedContent c = f.content;
    c.add(4, 5, rep(3, 6, "(00)"));
    bool both = verify_conjecture(c).pass && check_reflection(c, f.g).pass;
    CHECK_FALSE(both);
    BiGradedContent d = f.content;
    d.set(3, 3, Rep(3));
    CHECK_FALSE(check_free_diagonal(d, 1).pass);
}

TEST_CASE("A1+ has a single extra singlet")
{
    GlGrading g = grading_preset("a1+");
    BorcherdsLevels levels = compute_levels(g, 10, 8);
    MSeries adj = adjoint_gl_grading(g, 8);
    BiGradedContent c = assemble_content(g, levels, &adj, AssemblyMode::BorcherdsOnly, 10);
    CHECK(props::charge_law(c, g.slope).ok());
    ExtrasReport ex = detect_extras(c);
    CHECK(ex.ok());
    REQUIRE(ex.extras.size() == 1);
    CHECK(ex.extras[0].module.str() == "(0)");
    CHECK(ex.extras[0].module.total_multiplicity() == 1);
    CHECK_THROWS_AS(assemble_content(g, levels, &adj, AssemblyMode::Conjecture, 8), std::invalid_argument);
}
