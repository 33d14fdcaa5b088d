#include "thl/tha.hpp"

#include <algorithm>
#include <stdexcept>

namespace thl {

Rep BiGradedContent::cell(int l, int m) const
{
    auto it = cells.find({l, m});
    return it == cells.end() ? Rep(d) : it->second;
}

void BiGradedContent::set(int l, int m, const Rep& r)
{
    if (!in_window(l, m))
        throw std::out_of_range("cell outside the content window");
    if (r.empty())
        cells.erase({l, m});
    else
        cells[{l, m}] = r;
}

void BiGradedContent::add(int l, int m, const Rep& r)
{
    if (r.empty())
        return;
    set(l, m, cell(l, m) + r);
}

std::optional<Cell> BiGradedContent::charge_law_violation() const
{
    for (auto& [c, r] : cells)
        for (auto& [x, v] : r.terms())
            if (x.charge() != slope * c.second - c.first)
                return c;
    return std::nullopt;
}

namespace {

Rep mirror_rep(const Rep& r)
{
    return r.dual().twist(-1);
}

}  // namespace

BiGradedContent assemble_content(const GlGrading& g, const BorcherdsLevels& levels, const MSeries* adj,
                                 AssemblyMode mode, int lmax)
{
    int d = g.d, P = levels.max_degree;
    int need = mode == AssemblyMode::Conjecture ? lmax + 1 : lmax;
    if (levels.max_level < need)
        throw std::invalid_argument("Borcherds levels computed to " + std::to_string(levels.max_level) +
                                    ", assembly needs " + std::to_string(need));
    if (adj && int(adj->size()) <= P)
        throw std::invalid_argument("adjoint grading shorter than the degree window");

    auto B = [&](int l, int m) -> Rep {
        if (l < 1 || m < 0 || m > P)
            return Rep(d);
        return levels.level(l)[m];
    };
    auto A = [&](int m) -> Rep {
        if (!adj)
            throw std::invalid_argument("the adjoint grading is required for level 0");
        if (m >= 0)
            return m <= P ? (*adj)[m] : throw std::invalid_argument("adjoint grading too short");
        if (-m > P)
            throw std::invalid_argument("adjoint grading too short");
        return (*adj)[-m].dual();
    };

    BiGradedContent c;
    c.d = d;
    c.slope = g.slope;
    c.lmax = lmax;
    c.max_degree = P;
    if (mode == AssemblyMode::BorcherdsOnly) {
        c.lmin = adj ? -d : 1;
        for (int l = 1; l <= lmax; ++l)
            for (int m = 0; m <= P; ++m)
                c.set(l, m, B(l, m));
        if (adj)
            for (int m = 0; m <= P; ++m)
                c.set(0, m, A(m));
        return c;
    }

    int e = g.slope * g.mu + 1;
    if (g.mu <= 0 || e % d != 0 || g.n != 2)
        throw std::invalid_argument("conjecture assembly needs a doubly extended algebra");
    int shift = -e / d;
    auto R = [&](int l, int m) -> Rep {
        if (l >= 1)
            return B(l, m) + B(l + 1, m - g.mu).twist(shift);
        if (l == 0)
            return A(m) + B(1, m - g.mu).twist(shift);
        throw std::logic_error("negative level requested directly");
    };
    c.lmin = 1 - 2 * d;
    for (int m = 0; m <= P; ++m) {
        for (int l = 0; l <= lmax; ++l)
            c.set(l, m, R(l, m));
        for (int l = c.lmin; l < 0; ++l)
            c.set(l, m, mirror_rep(R(1 - g.n - l, g.mu - m)));
    }
    return c;
}

Rep ColumnFit::top(int l, int m) const
{
    auto it = tops.find({l, m});
    return it == tops.end() ? Rep(d) : it->second;
}

BiGradedContent ColumnFit::rebuild() const
{
    BiGradedContent c;
    c.d = d;
    c.lmin = lmin;
    c.lmax = lmax;
    c.max_degree = max_degree;
    for (auto& [cell, r] : tops)
        for (int p = 0; p <= d && cell.first - p >= lmin; ++p)
            c.add(cell.first - p, cell.second, tensor(r, Rep::irrep(form_irrep(d, p))));
    return c;
}

bool ColumnFit::clean() const
{
    if (!surplus.empty())
        return false;
    for (auto& [cell, r] : leftover)
        if (interior(cell.first))
            return false;
    return true;
}

ColumnFit column_fit(const BiGradedContent& content)
{
    int d = content.d;
    ColumnFit fit;
    fit.d = d;
    fit.lmin = content.lmin;
    fit.lmax = content.lmax;
    fit.max_degree = content.max_degree;
    std::vector<Rep> forms;
    for (int p = 0; p <= d; ++p)
        forms.push_back(Rep::irrep(form_irrep(d, p)));
    for (auto& [cell, r] : content.cells)
        if (!r.is_nonnegative())
            fit.surplus.push_back(cell);
    for (int m = 0; m <= content.max_degree; ++m) {
        std::map<int, Rep> res;
        for (int l = content.lmin; l <= content.lmax; ++l)
            res[l] = content.cell(l, m);
        for (int l = content.lmax; l >= content.lmin; --l) {
            Rep pos(d), neg(d);
            for (auto& [x, v] : res[l].terms())
                (v > 0 ? pos : neg).add(x, v);
            if (!neg.empty())
                fit.leftover[{l, m}] = neg;
            if (pos.empty())
                continue;
            fit.tops[{l, m}] = pos;
            if (!fit.interior(l))
                fit.boundary_tops.push_back({l, m});
            for (int p = 1; p <= d && l - p >= content.lmin; ++p)
                res[l - p] -= tensor(pos, forms[p]);
        }
    }
    return fit;
}

ExtrasReport detect_extras(const BiGradedContent& b_only)
{
    ColumnFit fit = column_fit(b_only);
    ExtrasReport rep;
    rep.surplus = fit.surplus;
    int stop = b_only.max_degree + 1;
    for (auto& c : fit.surplus)
        stop = std::min(stop, c.second);
    for (int m = 0; m < stop; ++m)
        for (int l = b_only.lmax; l >= b_only.lmin; --l) {
            auto it = fit.leftover.find({l, m});
            if (it != fit.leftover.end() && fit.interior(l))
                rep.extras.push_back({l, m, -it->second});
        }
    return rep;
}

nlohmann::json CheckReport::to_json() const
{
    return {{"check", name}, {"pass", pass}, {"checked", checked}, {"failures", failures}};
}

namespace {

std::string cell_name(int l, int m)
{
    return "(" + std::to_string(l) + "," + std::to_string(m) + ")";
}

}  // namespace

CheckReport verify_conjecture(const BiGradedContent& content, ColumnFit* fit_out)
{
    CheckReport rep;
    rep.name = "conjecture";
    if (auto bad = content.charge_law_violation()) {
        rep.pass = false;
        rep.failures.push_back("charge law fails at " + cell_name(bad->first, bad->second));
    }
    ColumnFit fit = column_fit(content);
    for (auto& c : fit.surplus) {
        rep.pass = false;
        rep.failures.push_back("negative content at " + cell_name(c.first, c.second));
    }
    for (auto& [c, r] : fit.leftover)
        if (fit.interior(c.first)) {
            rep.pass = false;
            rep.failures.push_back("deficit at " + cell_name(c.first, c.second) + ": " + (-r).str());
        }
    rep.checked = int(content.cells.size());
    if (fit_out)
        *fit_out = std::move(fit);
    return rep;
}

CheckReport check_reflection(const BiGradedContent& content, const GlGrading& g)
{
    CheckReport rep;
    rep.name = "reflection";
    for (int l = content.lmin; l <= content.lmax; ++l)
        for (int m = 0; m <= content.max_degree; ++m) {
            int ml = 1 - g.n - l, mm = g.mu - m;
            if (!content.in_window(ml, mm))
                continue;
            ++rep.checked;
            Rep want = mirror_rep(content.cell(l, m));
            if (content.cell(ml, mm) != want) {
                rep.pass = false;
                rep.failures.push_back(cell_name(l, m) + " vs " + cell_name(ml, mm));
            }
        }
    return rep;
}

std::vector<Rep> free_lie_pieces(const Rep& v, int max_n, bool odd)
{
    int d = v.rank();
    std::vector<Rep> L(size_t(max_n + 1), Rep(d));
    if (max_n < 1)
        return L;
    L[1] = v;
    Rep power = v;
    for (int N = 2; N <= max_n; ++N) {
        power = tensor(power, v);
        Rep acc = power;
        for (int j = 2; j <= N; ++j) {
            if (N % j)
                continue;
            int k = N / j;
            int eps = (!odd || k % 2 == 0) ? 1 : (j % 2 ? 1 : -1);
            acc -= adams(L[k], j) * BigInt(k * eps);
        }
        L[N] = acc.divided_exact(N);
    }
    return L;
}

CheckReport check_free_diagonal(const BiGradedContent& content, int r)
{
    CheckReport rep;
    rep.name = "free-diagonal";
    if (!content.in_window(r, 1))
        return rep;
    Rep v = content.cell(r, 1);
    int max_n = std::min(content.max_degree, content.lmax / r);
    auto pieces = free_lie_pieces(v, max_n, r % 2 == 1);
    for (int N = 1; N <= max_n; ++N) {
        ++rep.checked;
        if (content.cell(r * N, N) != pieces[N]) {
            rep.pass = false;
            rep.failures.push_back("diagonal " + cell_name(r * N, N) + ": expected " + pieces[N].str() + ", found " +
                                   content.cell(r * N, N).str());
        }
    }
    return rep;
}

CheckReport check_column_tops(const ColumnFit& fit, const MSeries& adj, const GlGrading& g)
{
    CheckReport rep;
    rep.name = "column-tops";
    int lstar = g.d - g.n + 1;
    for (int m = g.mu + 1; m <= fit.max_degree; ++m) {
        if (m - g.mu >= int(adj.size()))
            break;
        ++rep.checked;
        int lowest = fit.lmax + 1;
        for (auto& [c, r] : fit.tops)
            if (c.second == m && fit.interior(c.first))
                lowest = std::min(lowest, c.first);
        if (lowest != lstar) {
            rep.pass = false;
            rep.failures.push_back("degree " + std::to_string(m) + ": lowest top at level " + std::to_string(lowest));
            continue;
        }
        if (fit.top(lstar, m) != adj[m - g.mu]) {
            rep.pass = false;
            rep.failures.push_back("degree " + std::to_string(m) + ": top " + fit.top(lstar, m).str() +
                                   " differs from adjoint grade " + adj[m - g.mu].str());
        }
    }
    return rep;
}

}  // namespace thl
