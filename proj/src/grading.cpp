#include "thl/grading.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace thl {

std::vector<int> GlGrading::chain_labels(const std::vector<long long>& labels) const
{
    std::vector<int> out;
    out.reserve(chain.size());
    for (int node : chain)
        out.push_back(int(labels[spec.index(node)]));
    return out;
}

int GlGrading::charge0(const std::vector<long long>& lambda) const
{
    if (lambda[spec.index(grading_node)] != 0)
        throw std::invalid_argument("weights with a grading-node label are not supported");
    long long q = 0;
    for (size_t k = 0; k < chain.size(); ++k)
        q -= (long long)(k + 1) * lambda[spec.index(chain[k])];
    for (int i = 0; i < spec.size(); ++i) {
        int node = spec.nodes[i];
        if (node != grading_node && std::find(chain.begin(), chain.end(), node) == chain.end() && lambda[i] != 0)
            throw std::invalid_argument("weight has labels outside the gl chain");
    }
    return int(q);
}

GlIrrep GlGrading::irrep(const std::vector<long long>& labels, long long degree, int q0) const
{
    return GlIrrep::from_labels(chain_labels(labels), int(q0 + slope * degree));
}

std::vector<long long> GlGrading::level_weight(int k) const
{
    std::vector<long long> lam(spec.size(), 0);
    lam[spec.index(lambda_node)] = k;
    return lam;
}

std::string GlGrading::id() const
{
    nlohmann::json j;
    j["spec"] = spec.to_json();
    j["chain"] = chain;
    j["grading_node"] = grading_node;
    return j.dump();
}

GlGrading make_grading(const CartanSpec& spec, const std::vector<int>& chain, int grading_node)
{
    GlGrading g;
    g.spec = spec;
    g.chain = chain;
    g.grading_node = grading_node;
    g.d = int(chain.size()) + 1;
    if (spec.fermionic_node)
        throw std::invalid_argument("gradings are defined on the bosonic algebra");
    if (!spec.has_node(grading_node))
        throw std::invalid_argument("unknown grading node");
    for (size_t k = 0; k < chain.size(); ++k) {
        if (!spec.has_node(chain[k]) || chain[k] == grading_node)
            throw std::invalid_argument("bad chain node");
        for (size_t l = 0; l < chain.size(); ++l) {
            int want = k == l ? 2 : (k + 1 == l || l + 1 == k ? -1 : 0);
            if (spec.entry(chain[k], chain[l]) != want)
                throw std::invalid_argument("chain nodes do not form an A_{d-1} diagram");
        }
    }
    if (spec.size() != g.d)
        throw std::invalid_argument("the chain plus grading node must exhaust the diagram");
    long long s = 0;
    for (size_t k = 0; k < chain.size(); ++k)
        s += (long long)(k + 1) * spec.entry(chain[k], grading_node);
    s %= g.d;
    if (s <= 0)
        s += g.d;
    g.slope = int(s);
    return g;
}

GlGrading series_grading(BaseSeries base, int r, int n)
{
    CartanSpec spec = build_cartan(base, r, n, false);
    std::vector<int> chain;
    int grading = 0;
    int top = base == BaseSeries::E8 ? 7 : r - 1;
    for (int k = -n + 1; k <= top; ++k)
        chain.push_back(k);
    grading = base == BaseSeries::E8 ? 8 : r;
    GlGrading g = make_grading(spec, chain, grading);
    g.n = n;
    g.series = base;
    g.r = r;
    g.lambda_node = -n + 1;
    if (n >= 1) {
        std::vector<int> affine;
        for (int k = 0; k <= r; ++k)
            affine.push_back(k);
        auto delta = null_root(spec, affine);
        g.mu = int(delta[spec.index(grading)]);
    }
    std::string nm = base == BaseSeries::E8 ? "e" + std::to_string(8 + n) : "a" + std::to_string(r);
    if (base == BaseSeries::A)
        nm += n <= 3 ? std::string(n, '+') : "^(" + std::to_string(n) + ")";
    g.name = nm;
    return g;
}

GlGrading grading_preset(const std::string& raw)
{
    std::string name = raw;
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return char(std::tolower(c)); });
    if (name.size() >= 2 && name[0] == 'e') {
        int k = std::stoi(name.substr(1));
        if (k < 8 || k > 11 || name != "e" + std::to_string(k))
            throw std::invalid_argument("unsupported algebra: " + raw);
        return series_grading(BaseSeries::E8, 8, k - 8);
    }
    if (name.size() >= 2 && name[0] == 'a') {
        size_t p = 1;
        while (p < name.size() && std::isdigit((unsigned char)name[p]))
            ++p;
        if (p == 1)
            throw std::invalid_argument("unsupported algebra: " + raw);
        int r = std::stoi(name.substr(1, p - 1));
        std::string rest = name.substr(p);
        int n = -1;
        if (std::all_of(rest.begin(), rest.end(), [](char c) { return c == '+'; }))
            n = int(rest.size());
        else if (rest.size() > 4 && rest.substr(0, 2) == "^(" && rest.back() == ')')
            n = std::stoi(rest.substr(2, rest.size() - 3));
        if (n < 0 || r < 1)
            throw std::invalid_argument("unsupported algebra: " + raw);
        return series_grading(BaseSeries::A, r, n);
    }
    throw std::invalid_argument("unsupported algebra: " + raw);
}

}  // namespace thl
