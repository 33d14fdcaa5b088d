#include "thl/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>

namespace thl {

namespace {

void check_letter(const CartanSpec& spec, int node)
{
    if (!spec.has_node(node) || !spec.is_bosonic(node))
        throw std::invalid_argument("Weyl letter " + std::to_string(node) + " is not a bosonic node");
}

std::vector<long long> root_labels(const CartanSpec& spec, const std::vector<long long>& beta)
{
    int n = spec.size();
    std::vector<long long> out(n, 0);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            out[k] += spec.matrix[k][j] * beta[j];
    return out;
}

}  // namespace

std::vector<int> letter_order(const CartanSpec& spec, int grading_node)
{
    int n = spec.size();
    std::vector<int> dist(n, -1);
    std::deque<int> q{spec.index(grading_node)};
    dist[q.front()] = 0;
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        for (int j = 0; j < n; ++j)
            if (j != i && spec.matrix[i][j] != 0 && dist[j] < 0 && spec.is_bosonic(spec.nodes[j])) {
                dist[j] = dist[i] + 1;
                q.push_back(j);
            }
    }
    std::vector<int> letters = spec.bosonic_nodes();
    std::sort(letters.begin(), letters.end(), [&](int a, int b) {
        int da = dist[spec.index(a)], db = dist[spec.index(b)];
        if (da != db)
            return da > db;
        return a < b;
    });
    return letters;
}

std::string WeylWord::str() const
{
    if (letters.empty())
        return "1";
    std::string s;
    for (int l : letters) {
        s += "w_";
        s += l < 0 ? "{" + std::to_string(l) + "}" : std::to_string(l);
    }
    return s;
}

WeylWord WeylWord::parse(const std::string& s)
{
    WeylWord w;
    if (s == "1" || s.empty())
        return w;
    std::regex re(R"(w_(\{-?\d+\}|-?\d))");
    std::string rest;
    size_t consumed = 0;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it) {
        if (size_t(it->position()) != consumed)
            throw std::invalid_argument("malformed Weyl word: " + s);
        std::string tok = (*it)[1];
        if (tok.front() == '{')
            tok = tok.substr(1, tok.size() - 2);
        w.letters.push_back(std::stoi(tok));
        consumed += it->length();
    }
    if (consumed != s.size())
        throw std::invalid_argument("malformed Weyl word: " + s);
    return w;
}

std::vector<long long> reflect(const CartanSpec& spec, int node, const std::vector<long long>& labels)
{
    check_letter(spec, node);
    int i = spec.index(node);
    long long li = labels[i];
    std::vector<long long> out = labels;
    if (li == 0)
        return out;
    for (int j = 0; j < spec.size(); ++j)
        out[j] -= li * spec.matrix[j][i];
    return out;
}

std::vector<long long> act(const CartanSpec& spec, const WeylWord& w, const std::vector<long long>& labels)
{
    if (int(labels.size()) != spec.size())
        throw std::invalid_argument("weight length does not match the rank");
    std::vector<long long> x = labels;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        x = reflect(spec, *it, x);
    return x;
}

std::vector<long long> shifted_action(const CartanSpec& spec, const WeylWord& w, const std::vector<long long>& lambda)
{
    std::vector<long long> x = lambda;
    for (auto& v : x)
        v += 1;
    x = act(spec, w, x);
    for (auto& v : x)
        v -= 1;
    return x;
}

std::vector<long long> act_on_roots(const CartanSpec& spec, const WeylWord& w, const std::vector<long long>& beta)
{
    std::vector<long long> c = beta;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        check_letter(spec, *it);
        int i = spec.index(*it);
        long long pairing = 0;
        for (int j = 0; j < spec.size(); ++j)
            pairing += spec.matrix[i][j] * c[j];
        c[i] -= pairing;
    }
    return c;
}

long long degree_of_word(const CartanSpec& spec, const WeylWord& w, const std::vector<long long>& lambda,
                         int grading_node, long long offset)
{
    std::vector<long long> x = lambda;
    for (auto& v : x)
        v += 1;
    std::vector<long long> c(spec.size(), 0);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        int i = spec.index(*it);
        c[i] += x[i];
        x = reflect(spec, *it, x);
    }
    return c[spec.index(grading_node)] + offset;
}

long long degree(const CartanSpec& spec, const std::vector<long long>& lambda, const std::vector<long long>& image,
                 int grading_node, long long offset)
{
    std::vector<long long> diff(spec.size());
    for (int i = 0; i < spec.size(); ++i)
        diff[i] = lambda[i] - image[i];
    WeightVector v = WeightVector::fundamental(diff);
    WeightVector c = to_root_basis(spec, v);
    for (auto& q : c.coeffs)
        if (denominator(q) != 1)
            throw std::invalid_argument("image - lambda is not in the root lattice");
    Rational g = c.coeffs[spec.index(grading_node)];
    return numerator(g).convert_to<long long>() + offset;
}

std::vector<ShiftedImage> enumerate_gl_dominant(const CartanSpec& spec, const std::vector<long long>& lambda,
                                                int grading_node, long long max_degree)
{
    int n = spec.size();
    if (int(lambda.size()) != n)
        throw std::invalid_argument("weight length does not match the rank");
    for (auto v : lambda)
        if (v < 0)
            throw std::invalid_argument("enumerate_gl_dominant needs a dominant weight");
    if (!spec.has_node(grading_node))
        throw std::invalid_argument("unknown grading node");
    int g = spec.index(grading_node);
    std::vector<int> letters = letter_order(spec, grading_node);
    std::map<int, int> rank;
    for (size_t k = 0; k < letters.size(); ++k)
        rank[letters[k]] = int(k);
    auto ranked = [&](const WeylWord& w) {
        std::vector<int> v;
        for (int l : w.letters)
            v.push_back(rank[l]);
        return v;
    };

    std::vector<long long> top(n);
    for (int i = 0; i < n; ++i)
        top[i] = lambda[i] + 1;

    struct State {
        WeylWord word;
        std::vector<long long> x;               // w(Lambda + rho)
        std::vector<long long> c;               // root coords of (Lambda+rho) - w(Lambda+rho)
        std::vector<std::vector<long long>> r;  // r[j] = w(alpha_j) in root coords
    };
    State id;
    id.x = top;
    id.c.assign(n, 0);
    id.r.assign(n, std::vector<long long>(n, 0));
    for (int j = 0; j < n; ++j)
        id.r[j][j] = 1;

    std::set<std::vector<long long>> seen{id.c};
    std::vector<ShiftedImage> out;
    std::vector<State> layer{id};
    while (!layer.empty()) {
        for (auto& s : layer) {
            ShiftedImage im;
            im.word = s.word;
            im.image = s.x;
            for (auto& v : im.image)
                v -= 1;
            im.degree = s.c[g];
            im.root_shift = s.c;
            out.push_back(std::move(im));
        }
        std::vector<State> next;
        for (auto& s : layer) {
            for (int node : letters) {
                int i = spec.index(node);
                const auto& wa = s.r[i];
                bool positive = std::all_of(wa.begin(), wa.end(), [](long long v) { return v >= 0; });
                if (!positive)
                    continue;
                std::vector<long long> c = s.c;
                for (int j = 0; j < n; ++j)
                    c[j] += top[i] * wa[j];
                if (c[g] > max_degree)
                    continue;
                if (c[g] < s.c[g])
                    throw std::logic_error("degree decreased along a reduced word");
                auto lab = root_labels(spec, wa);
                std::vector<long long> x = s.x;
                for (int j = 0; j < n; ++j)
                    x[j] -= top[i] * lab[j];
                bool gl_dominant = true;
                for (int j = 0; j < n; ++j)
                    if (j != g && spec.is_bosonic(spec.nodes[j]) && x[j] < 1) {
                        gl_dominant = false;
                        break;
                    }
                if (!gl_dominant || !seen.insert(c).second)
                    continue;
                State t;
                t.word = s.word;
                t.word.letters.push_back(node);
                t.x = std::move(x);
                t.c = std::move(c);
                t.r = s.r;
                for (int j = 0; j < n; ++j) {
                    long long a = spec.matrix[i][j];
                    if (a == 0 || j == i)
                        continue;
                    for (int k = 0; k < n; ++k)
                        t.r[j][k] -= a * s.r[i][k];
                }
                for (int k = 0; k < n; ++k)
                    t.r[i][k] = -s.r[i][k];
                next.push_back(std::move(t));
            }
        }
        std::sort(next.begin(), next.end(), [&](const State& a, const State& b) { return ranked(a.word) < ranked(b.word); });
        layer = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [&](const ShiftedImage& a, const ShiftedImage& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        if (a.word.length() != b.word.length())
            return a.word.length() < b.word.length();
        return ranked(a.word) < ranked(b.word);
    });
    return out;
}

}  // namespace thl
