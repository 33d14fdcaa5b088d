#include "properties.hpp"

#include "oracle.hpp"
#include "thl/weyl.hpp"

#include <random>
#include <sstream>

namespace thl::props {

void Outcome::fail(const std::string& what)
{
    if (failures++ == 0)
        first_failure = what;
}

std::string Outcome::summary() const
{
    std::ostringstream s;
    s << name << ": " << cases << " cases, " << failures << " failures";
    if (failures)
        s << " (first: " << first_failure << ")";
    return s.str();
}

namespace {

MSeries random_mseries(std::mt19937& rng, int d, int P)
{
    MSeries r = mseries_zero(d, P);
    std::uniform_int_distribution<int> count(0, 2);
    for (int m = 0; m <= P; ++m) {
        int k = count(rng);
        for (int i = 0; i < k; ++i)
            r[m].add(oracle::random_irrep(rng, d, 1, -1, 1), 1);
    }
    return r;
}

}  // namespace

Outcome fermionic_bosonic_inverse(uint32_t seed, int cases)
{
    Outcome o{"z_F(R) z_B(R) = 1"};
    std::mt19937 rng(seed);
    for (int c = 0; c < cases; ++c) {
        int d = 2 + int(rng() % 2);
        int P = 2 + int(rng() % 2);
        int l0 = 1 + int(rng() % 2);
        MSeries r = random_mseries(rng, d, P);
        ++o.cases;
        GradedRepSeries prod = multiply(fermionic_factor(r, l0, 4, P), bosonic_factor(r, l0, 4, P));
        if (!prod.is_one())
            o.fail("seed case " + std::to_string(c));
    }
    return o;
}

Outcome koszul_round_trip(const GlGrading& g, int max_level, int max_degree)
{
    Outcome o{"Z_mu Z_B = 1 for " + g.name};
    GradedRepSeries z = minimal_orbit_partition(g, max_level, max_degree);
    BorcherdsLevels b = compute_levels(g, max_level, max_degree);
    ++o.cases;
    if (!multiply(z, rebuild_z_b(b)).is_one())
        o.fail("product is not one");
    ++o.cases;
    BorcherdsLevels peeled = extract_levels(z);
    for (int l = 1; l <= max_level; ++l)
        if (peeled.level(l) != b.level(l))
            o.fail("peeling and log routes differ at level " + std::to_string(l));
    return o;
}

Outcome glrep_oracle(uint32_t seed, int cases)
{
    Outcome o{"gl(d) ring vs tableau characters"};
    std::mt19937 rng(seed);
    for (int c = 0; c < cases; ++c) {
        int d = 2 + int(rng() % 3);
        GlIrrep a = oracle::random_irrep(rng, d, 3);
        GlIrrep b = oracle::random_irrep(rng, d, 3);
        Rep ra = Rep::irrep(a), rb = Rep::irrep(b);
        std::string tag = a.label_string() + "[" + std::to_string(a.charge()) + "] " + b.label_string() + "[" +
                          std::to_string(b.charge()) + "]";
        if (dim(ra) * dim(rb) > 6000)
            continue;
        ++o.cases;
        if (tensor(ra, rb) != oracle::decompose(oracle::product(oracle::character(ra), oracle::character(rb))))
            o.fail("tensor " + tag);
        int k = 2 + int(rng() % 2);
        ++o.cases;
        if (adams(ra, k) != oracle::decompose(oracle::adams(oracle::character(ra), k)))
            o.fail("adams " + std::to_string(k) + " " + tag);
        GlIrrep s = oracle::random_irrep(rng, d, 2);
        Rep rs = Rep::irrep(s);
        if (dim(rs) > 20)
            continue;
        auto ch = oracle::character(rs);
        for (int p = 2; p <= 3; ++p) {
            o.cases += 2;
            if (alt_power(rs, p) != (dim(rs) < p ? Rep(d) : oracle::decompose(oracle::alt(ch, p))))
                o.fail("alt " + std::to_string(p) + " " + s.label_string());
            if (sym_power(rs, p) != oracle::decompose(oracle::sym(ch, p)))
                o.fail("sym " + std::to_string(p) + " " + s.label_string());
        }
    }
    return o;
}

Outcome weyl_properties(uint32_t seed, int cases)
{
    Outcome o{"Weyl invariance and composition"};
    std::mt19937 rng(seed);
    std::vector<CartanSpec> specs{grading_preset("e10").spec, grading_preset("a1++").spec,
                                  grading_preset("e11").spec};
    std::uniform_int_distribution<int> lab(-3, 3), len(0, 8);
    for (int c = 0; c < cases; ++c) {
        const CartanSpec& spec = specs[size_t(c) % specs.size()];
        auto letters = spec.bosonic_nodes();
        auto word = [&] {
            WeylWord w;
            int n = len(rng);
            for (int i = 0; i < n; ++i)
                w.letters.push_back(letters[rng() % letters.size()]);
            return w;
        };
        auto vec = [&] {
            std::vector<long long> v(size_t(spec.size()));
            for (auto& x : v)
                x = lab(rng);
            return v;
        };
        WeylWord u = word(), v = word();
        WeylWord uv = u;
        uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
        auto x = vec(), y = vec();
        ++o.cases;
        Rational before = inner_product(spec, WeightVector::fundamental(x), WeightVector::fundamental(y));
        Rational after =
            inner_product(spec, WeightVector::fundamental(act(spec, u, x)), WeightVector::fundamental(act(spec, u, y)));
        if (before != after)
            o.fail("inner product changed under " + u.str());
        ++o.cases;
        if (act(spec, uv, x) != act(spec, u, act(spec, v, x)))
            o.fail("composition fails for " + u.str() + " " + v.str());
        ++o.cases;
        if (shifted_action(spec, uv, x) != shifted_action(spec, u, shifted_action(spec, v, x)))
            o.fail("shifted composition fails for " + u.str() + " " + v.str());
        ++o.cases;
        auto labels_of = [&](const std::vector<long long>& beta) {
            std::vector<long long> l(beta.size(), 0);
            for (int k = 0; k < spec.size(); ++k)
                for (int j = 0; j < spec.size(); ++j)
                    l[k] += spec.matrix[k][j] * beta[j];
            return l;
        };
        if (labels_of(act_on_roots(spec, u, x)) != act(spec, u, labels_of(x)))
            o.fail("root and weight actions disagree for " + u.str());
    }
    return o;
}

Outcome charge_law(const BiGradedContent& c, int slope)
{
    Outcome o{"charge law " + std::to_string(slope) + "m - l"};
    for (auto& [cell, r] : c.cells)
        for (auto& [x, v] : r.terms()) {
            ++o.cases;
            if (x.charge() != slope * cell.second - cell.first)
                o.fail("cell (" + std::to_string(cell.first) + "," + std::to_string(cell.second) + ")");
        }
    return o;
}

Outcome column_fit_properties(uint32_t seed, int cases)
{
    Outcome o{"column fit exactness and idempotence"};
    std::mt19937 rng(seed);
    for (int c = 0; c < cases; ++c) {
        int d = 2 + int(rng() % 2), slope = 2;
        BiGradedContent content;
        content.d = d;
        content.slope = slope;
        content.lmin = -d;
        content.lmax = 3;
        content.max_degree = 2;
        std::uniform_int_distribution<int> lab(0, 2), coin(0, 3), mult(-2, 3);
        bool signed_input = c % 2 == 1;
        for (int l = content.lmin; l <= content.lmax; ++l)
            for (int m = 0; m <= content.max_degree; ++m) {
                if (coin(rng))
                    continue;
                Rep r(d);
                for (int t = 0; t < 2; ++t) {
                    std::vector<int> labels(size_t(d - 1));
                    for (auto& x : labels)
                        x = lab(rng);
                    int q = slope * m - l;
                    if (!GlIrrep::congruent(labels, q))
                        continue;
                    int k = signed_input ? mult(rng) : 1 + int(rng() % 2);
                    if (k)
                        r.add(GlIrrep::from_labels(labels, q), k);
                }
                content.set(l, m, r);
            }
        ColumnFit fit = column_fit(content);
        BiGradedContent back = fit.rebuild();
        for (auto& [cell, r] : fit.leftover)
            back.add(cell.first, cell.second, r);
        ++o.cases;
        if (back.cells != content.cells)
            o.fail("rebuild plus leftover differs from the input (case " + std::to_string(c) + ")");
        ColumnFit again = column_fit(fit.rebuild());
        ++o.cases;
        if (again.tops != fit.tops || !again.leftover.empty() || !again.surplus.empty())
            o.fail("refitting the rebuild changed the tops (case " + std::to_string(c) + ")");
        bool any_negative = false;
        for (auto& [cell, r] : content.cells)
            any_negative |= !r.is_nonnegative();
        ++o.cases;
        if (any_negative == fit.surplus.empty())
            o.fail("surplus report disagrees with the input signs (case " + std::to_string(c) + ")");
    }
    return o;
}

}  // namespace thl::props
