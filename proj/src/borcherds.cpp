#include "thl/borcherds.hpp"

#include <stdexcept>

namespace thl {

const MSeries& BorcherdsLevels::level(int l) const
{
    if (l < 1 || l > max_level)
        throw std::out_of_range("Borcherds level " + std::to_string(l) + " outside the computed window");
    return levels[l];
}

BorcherdsLevels BorcherdsLevels::truncated(int L, int P) const
{
    if (L > max_level || P > max_degree)
        throw std::invalid_argument("cannot extend computed levels");
    BorcherdsLevels out = *this;
    out.max_level = L;
    out.max_degree = P;
    out.levels.resize(size_t(L + 1));
    for (auto& s : out.levels)
        if (!s.empty())
            s = mseries_truncate(s, P);
    out.z_b.reset();
    return out;
}

GradedRepSeries minimal_orbit_partition(const GlGrading& g, int L, int P, const ResultCache* cache)
{
    GradedRepSeries z = GradedRepSeries::one(g.d, L, P);
    for (int p = 1; p <= L; ++p)
        z.level(p) = branch(g, g.level_weight(p), P, cache).content;
    return z;
}

namespace {

void require_genuine(const MSeries& s, int l, const MSeries& virtual_part)
{
    for (int m = 0; m < int(s.size()); ++m)
        if (!s[m].is_nonnegative())
            throw std::logic_error("negative multiplicity in Borcherds level " + std::to_string(l) + " at degree " +
                                   std::to_string(m) + "; intermediate: " + virtual_part[m].str_with_charges());
}

}  // namespace

BorcherdsLevels extract_levels(const GradedRepSeries& z_mu)
{
    int d = z_mu.rank(), L = z_mu.max_level(), P = z_mu.max_degree();
    BorcherdsLevels b;
    b.d = d;
    b.max_level = L;
    b.max_degree = P;
    b.levels.assign(size_t(L + 1), mseries_zero(d, P));
    GradedRepSeries target = invert(z_mu);
    GradedRepSeries partial = GradedRepSeries::one(d, L, P);
    for (int l = 1; l <= L; ++l) {
        MSeries diff = mseries_zero(d, P);
        for (int m = 0; m <= P; ++m)
            diff[m] = target.at(l, m) - partial.at(l, m);
        MSeries lev = diff;
        if (l % 2)
            for (auto& r : lev)
                r = -r;
        require_genuine(lev, l, diff);
        b.levels[l] = lev;
        if (l < L) {
            auto f = l % 2 ? fermionic_factor(lev, l, L, P) : bosonic_factor(lev, l, L, P);
            partial = multiply(partial, f);
        }
    }
    b.z_b = target;
    return b;
}

BorcherdsLevels compute_levels(const GlGrading& g, int L, int P, const ResultCache* cache)
{
    nlohmann::json key{{"grading", nlohmann::json::parse(g.id())}};
    if (cache) {
        if (auto hit = cache->lookup("levels", key)) {
            try {
                int sl = hit->at("max_level").get<int>(), sp = hit->at("max_degree").get<int>();
                if (sl >= L && sp >= P) {
                    BorcherdsLevels b;
                    b.spec_id = g.id();
                    b.grading_node = g.grading_node;
                    b.d = g.d;
                    b.max_level = sl;
                    b.max_degree = sp;
                    b.levels.push_back(MSeries{});
                    for (auto& lev : hit->at("levels"))
                        b.levels.push_back(mseries_from_json(lev, g.d));
                    if (int(b.levels.size()) == sl + 1)
                        return b.truncated(L, P);
                }
            } catch (const std::exception&) {
            }
        }
    }

    int d = g.d;
    MSeries dinv = denominator_inverse(g, P);
    std::vector<MSeries> num(size_t(L + 1));
    for (int p = 1; p <= L; ++p)
        num[p] = gl_numerator(g, g.level_weight(p), P);

    BorcherdsLevels b;
    b.spec_id = g.id();
    b.grading_node = g.grading_node;
    b.d = d;
    b.max_level = L;
    b.max_degree = P;
    b.levels.assign(size_t(L + 1), mseries_zero(d, P));
    std::vector<MSeries> power(size_t(L + 1));
    for (int N = 1; N <= L; ++N) {
        MSeries acc = num[N];
        for (auto& r : acc)
            r = r * BigInt(N);
        for (int k = 1; k < N; ++k) {
            MSeries t = mseries_mul(power[k], num[N - k]);
            for (int m = 0; m <= P; ++m)
                acc[m] -= t[m];
        }
        power[N] = mseries_mul(dinv, acc);

        // sum over l | N of l (-1)^l psi^{N/l}(B_l) = -power[N]
        MSeries rhs = power[N];
        for (auto& r : rhs)
            r = -r;
        for (int l = 1; l < N; ++l) {
            if (N % l)
                continue;
            MSeries a = mseries_adams(b.levels[l], N / l);
            BigInt c = l % 2 ? BigInt(-l) : BigInt(l);
            for (int m = 0; m <= P; ++m)
                if (!a[m].empty())
                    rhs[m] -= a[m] * c;
        }
        BigInt c = N % 2 ? BigInt(-N) : BigInt(N);
        MSeries lev = mseries_zero(d, P);
        for (int m = 0; m <= P; ++m)
            lev[m] = rhs[m].divided_exact(c);
        require_genuine(lev, N, rhs);
        b.levels[N] = std::move(lev);
    }
    for (int l = 1; l <= L; ++l)
        check_charge_law(b.levels[l], -l, g.slope, "Borcherds level " + std::to_string(l));

    if (cache) {
        nlohmann::json levs = nlohmann::json::array();
        for (int l = 1; l <= L; ++l)
            levs.push_back(mseries_to_json(b.levels[l]));
        cache->store("levels", key, {{"max_level", L}, {"max_degree", P}, {"levels", levs}});
    }
    return b;
}

GradedRepSeries rebuild_z_b(const BorcherdsLevels& b)
{
    GradedRepSeries z = GradedRepSeries::one(b.d, b.max_level, b.max_degree);
    for (int l = 1; l <= b.max_level; ++l) {
        const MSeries& lev = b.levels[l];
        z = multiply(z, l % 2 ? fermionic_factor(lev, l, b.max_level, b.max_degree)
                              : bosonic_factor(lev, l, b.max_level, b.max_degree));
    }
    return z;
}

}  // namespace thl
