#include "thl/branching.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace thl {

namespace {

std::mutex g_den_mutex;
std::map<std::string, MSeries> g_den_inverse;

}  // namespace

MSeries gl_numerator(const GlGrading& g, const std::vector<long long>& lambda, int max_degree,
                     std::vector<ShiftedImage>* terms)
{
    int q0 = g.charge0(lambda);
    auto images = enumerate_gl_dominant(g.spec, lambda, g.grading_node, max_degree);
    MSeries out = mseries_zero(g.d, max_degree);
    for (auto& im : images)
        out[im.degree].add(g.irrep(im.image, im.degree, q0), im.word.parity());
    if (terms)
        *terms = std::move(images);
    return out;
}

MSeries denominator_inverse(const GlGrading& g, int max_degree)
{
    std::string key = g.id();
    {
        std::lock_guard<std::mutex> lock(g_den_mutex);
        auto it = g_den_inverse.find(key);
        if (it != g_den_inverse.end() && int(it->second.size()) > max_degree)
            return mseries_truncate(it->second, max_degree);
    }
    MSeries inv = mseries_inverse(gl_numerator(g, std::vector<long long>(g.spec.size(), 0), max_degree));
    std::lock_guard<std::mutex> lock(g_den_mutex);
    auto& slot = g_den_inverse[key];
    if (slot.size() < inv.size())
        slot = inv;
    return inv;
}

void check_charge_law(const MSeries& s, int q0, int slope, const std::string& what)
{
    for (int m = 0; m < int(s.size()); ++m)
        for (auto& [x, c] : s[m].terms())
            if (x.charge() != q0 + slope * m)
                throw std::logic_error("charge law violated in " + what + " at degree " + std::to_string(m) + ": " +
                                       x.label_string() + " has charge " + std::to_string(x.charge()));
}

BranchResult branch(const GlGrading& g, const std::vector<long long>& lambda, int max_degree,
                    const ResultCache* cache)
{
    if (max_degree < 0)
        throw std::invalid_argument("negative degree cutoff");
    BranchResult res;
    res.spec_id = g.id();
    res.lambda = lambda;
    res.grading_node = g.grading_node;
    res.max_degree = max_degree;
    MSeries num = gl_numerator(g, lambda, max_degree, &res.provenance);

    nlohmann::json key{{"grading", nlohmann::json::parse(g.id())}, {"lambda", lambda}};
    if (cache) {
        if (auto hit = cache->lookup("branch", key)) {
            try {
                int stored = hit->at("max_degree").get<int>();
                if (stored >= max_degree) {
                    res.content = mseries_truncate(mseries_from_json(hit->at("content"), g.d), max_degree);
                    return res;
                }
            } catch (const std::exception&) {
            }
        }
    }

    res.content = mseries_mul(num, denominator_inverse(g, max_degree));
    for (int m = 0; m <= max_degree; ++m)
        if (!res.content[m].is_nonnegative())
            throw std::logic_error("negative multiplicity in branching at degree " + std::to_string(m));
    check_charge_law(res.content, g.charge0(lambda), g.slope, "branching");
    if (cache)
        cache->store("branch", key, {{"max_degree", max_degree}, {"content", mseries_to_json(res.content)}});
    return res;
}

void clear_branching_caches()
{
    std::lock_guard<std::mutex> lock(g_den_mutex);
    g_den_inverse.clear();
}

}  // namespace thl
