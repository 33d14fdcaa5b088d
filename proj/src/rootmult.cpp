#include "thl/rootmult.hpp"

#include "thl/branching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace thl {

BigInt RootTable::multiplicity(const std::vector<int>& root) const
{
    auto it = mult.find(root);
    return it == mult.end() ? BigInt(0) : it->second;
}

namespace {

using Root = std::vector<int>;

RootTable peterson(const CartanSpec& spec, const std::function<bool(const Root&)>& admissible, int max_height)
{
    if (spec.fermionic_node)
        throw std::invalid_argument("Peterson recursion needs a bosonic spec");
    int n = spec.size();
    std::vector<std::vector<Rational>> B(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            B[i][j] = spec.symmetrizer[i] * spec.matrix[i][j];
    auto form = [&](const Root& x, const Root& y) {
        Rational s = 0;
        for (int i = 0; i < n; ++i) {
            if (!x[i])
                continue;
            for (int j = 0; j < n; ++j)
                if (y[j])
                    s += B[i][j] * (x[i] * y[j]);
        }
        return s;
    };
    auto rho_pair = [&](const Root& x) {
        Rational s = 0;
        for (int i = 0; i < n; ++i)
            s += spec.symmetrizer[i] * x[i];
        return s;
    };

    RootTable table;
    table.spec_id = spec.id();
    std::map<Root, Rational> c;                 // c_beta = sum_k mult(beta/k)/k
    std::vector<std::vector<Root>> by_height(1);
    std::vector<Root> layer;
    for (int i = 0; i < n; ++i) {
        Root a(n, 0);
        a[i] = 1;
        if (!admissible(a))
            continue;
        c[a] = 1;
        table.mult[a] = 1;
        layer.push_back(a);
    }
    by_height.push_back(layer);
    for (int h = 2; max_height <= 0 || h <= max_height; ++h) {
        std::set<Root> cand;
        for (auto& r : by_height[h - 1])
            for (int i = 0; i < n; ++i) {
                Root b = r;
                ++b[i];
                if (admissible(b))
                    cand.insert(b);
            }
        for (int k = 2; k <= h; ++k) {
            if (h % k)
                continue;
            for (auto& r : by_height[h / k])
                if (table.mult.count(r)) {
                    Root b = r;
                    for (auto& v : b)
                        v *= k;
                    if (admissible(b))
                        cand.insert(b);
                }
        }
        std::vector<Root> next;
        bool any_root = false;
        for (auto& beta : cand) {
            Rational rhs = 0;
            for (int hp = 1; hp < h; ++hp)
                for (auto& b1 : by_height[hp]) {
                    auto i1 = c.find(b1);
                    if (i1 == c.end())
                        continue;
                    Root b2(n);
                    bool ok = true;
                    for (int i = 0; i < n; ++i) {
                        b2[i] = beta[i] - b1[i];
                        if (b2[i] < 0) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok)
                        continue;
                    auto i2 = c.find(b2);
                    if (i2 == c.end())
                        continue;
                    rhs += form(b1, b2) * i1->second * i2->second;
                }
            int g = 0;
            for (int v : beta)
                g = std::gcd(g, v);
            Rational from_divisors = 0;
            for (int k = 2; k <= g; ++k) {
                if (g % k)
                    continue;
                Root sub = beta;
                for (auto& v : sub)
                    v /= k;
                auto it = table.mult.find(sub);
                if (it != table.mult.end())
                    from_divisors += Rational(it->second) / k;
            }
            // a root never has (beta|beta-2rho) = 0, so there only the divisors contribute
            Rational lhs = form(beta, beta) - 2 * rho_pair(beta);
            Rational cb = from_divisors;
            if (lhs == 0) {
                if (rhs != 0)
                    throw std::logic_error("Peterson recursion: degenerate norm with non-zero sum");
            } else {
                cb = rhs / lhs;
            }
            if (cb == 0)
                continue;
            Rational m = cb - from_divisors;
            if (denominator(m) != 1 || m < 0) {
                std::string b;
                for (int v : beta)
                    b += std::to_string(v) + " ";
                throw std::logic_error("Peterson recursion produced multiplicity " + m.str() + " at " + b);
            }
            c[beta] = cb;
            next.push_back(beta);
            if (m > 0) {
                table.mult[beta] = numerator(m);
                any_root = true;
            }
        }
        // every root above height 1 sits on a root one step lower
        if (!any_root)
            break;
        by_height.push_back(std::move(next));
    }
    return table;
}

}  // namespace

RootTable peterson_multiplicities(const CartanSpec& spec, int cutoff)
{
    if (cutoff <= 0)
        throw std::invalid_argument("height cutoff must be positive");
    RootTable t = peterson(spec, [](const Root&) { return true; }, cutoff);
    t.cutoff = cutoff;
    return t;
}

RootTable peterson_multiplicities_graded(const CartanSpec& spec, int node, int max_coeff)
{
    int k = spec.index(node);
    return peterson(spec, [&](const Root& r) { return r[k] <= max_coeff; }, 0);
}

std::optional<std::vector<int>> gl_weight(const std::vector<int>& labels, int charge)
{
    int d = int(labels.size()) + 1;
    long long s = -charge;
    for (int j = 0; j < d - 1; ++j)
        s -= (long long)(j + 1) * labels[j];
    if (s % d)
        return std::nullopt;
    std::vector<int> w(d);
    w[d - 1] = int(s / d);
    for (int j = d - 2; j >= 0; --j)
        w[j] = w[j + 1] + labels[j];
    return w;
}

namespace {

Rep gl_adjoint(int d)
{
    Rep r(d);
    std::vector<int> lab(d - 1, 0);
    if (d > 1) {
        lab.front() = 1;
        lab.back() += 1;
        r.add(GlIrrep::from_labels(lab, 0), 1);
    }
    r.add(GlIrrep::trivial(d), 1);
    return r;
}

MSeries adjoint_by_peterson(const GlGrading& g, int P)
{
    int d = g.d;
    MSeries out = mseries_zero(d, P);
    out[0] = gl_adjoint(d);
    if (P == 0)
        return out;
    RootTable t = peterson_multiplicities_graded(g.spec, g.grading_node, P);
    std::vector<DominantCharacter> ch(P + 1);
    int gi = g.spec.index(g.grading_node);
    for (auto& [beta, mult] : t.mult) {
        int m = beta[gi];
        if (m < 1)
            continue;
        std::vector<int> labels;
        for (int node : g.chain) {
            int k = g.spec.index(node);
            long long v = 0;
            for (int j = 0; j < g.spec.size(); ++j)
                v -= (long long)g.spec.matrix[k][j] * beta[j];
            labels.push_back(int(v));
        }
        auto w = gl_weight(labels, g.slope * m);
        if (!w)
            throw std::logic_error("root weight does not lift to gl(d)");
        if (!std::is_sorted(w->begin(), w->end(), std::greater<int>()))
            continue;
        ch[m].d = d;
        ch[m].weights[*w] += mult;
    }
    for (int m = 1; m <= P; ++m)
        if (!ch[m].weights.empty())
            out[m] = from_character(ch[m]);
    return out;
}

MSeries adjoint_by_denominator(const GlGrading& g, int P)
{
    int d = g.d;
    MSeries den = gl_numerator(g, std::vector<long long>(g.spec.size(), 0), P);
    MSeries out = mseries_zero(d, P);
    out[0] = gl_adjoint(d);
    // u d/du log D = sum_M power[M] u^M = -sum_M sum_{m|M} m psi^{M/m}(adj_m) u^M
    std::vector<Rep> power(P + 1, Rep(d));
    for (int M = 1; M <= P; ++M) {
        Rep acc = den[M] * BigInt(M);
        for (int k = 1; k < M; ++k)
            if (!power[k].empty() && !den[M - k].empty())
                acc -= tensor(power[k], den[M - k]);
        power[M] = acc;
        Rep rhs = -acc;
        for (int m = 1; m < M; ++m)
            if (M % m == 0 && !out[m].empty())
                rhs -= adams(out[m], M / m) * BigInt(m);
        out[M] = rhs.divided_exact(M);
        if (!out[M].is_nonnegative())
            throw std::logic_error("negative multiplicity in the adjoint grading at degree " + std::to_string(M));
    }
    return out;
}

}  // namespace

MSeries adjoint_gl_grading(const GlGrading& g, int max_degree, AdjointMethod method)
{
    if (max_degree < 0)
        throw std::invalid_argument("negative degree cutoff");
    MSeries out = method == AdjointMethod::Peterson ? adjoint_by_peterson(g, max_degree)
                                                    : adjoint_by_denominator(g, max_degree);
    check_charge_law(out, 0, g.slope, "adjoint grading");
    return out;
}

}  // namespace thl
