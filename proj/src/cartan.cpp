#include "thl/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace thl {

namespace {

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string rational_str(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::vector<Rational> compute_symmetrizer(const std::vector<std::vector<int>>& a)
{
    int n = int(a.size());
    std::vector<Rational> d(n, Rational(0));
    for (int s = 0; s < n; ++s) {
        if (d[s] != 0)
            continue;
        d[s] = 1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int i = q.front();
            q.pop_front();
            for (int j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0)
                    continue;
                if (a[j][i] == 0)
                    throw std::invalid_argument("zero pattern is not symmetric");
                Rational want = d[i] * a[i][j] / a[j][i];
                if (d[j] == 0) {
                    d[j] = want;
                    q.push_back(j);
                } else if (d[j] != want) {
                    throw std::invalid_argument("Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    for (auto& x : d)
        if (x < 0)
            x = -x;
    return d;
}

// Solves M x = b over the rationals; throws if singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> b)
{
    int n = int(m.size());
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            throw std::invalid_argument("singular Cartan matrix: no fundamental-to-root conversion");
        std::swap(m[p], m[c]);
        std::swap(b[p], b[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i)
        x[i] = b[i] / m[i][i];
    return x;
}

void add_edge(std::vector<std::vector<int>>& a, int i, int j, int aij, int aji)
{
    a[i][j] = aij;
    a[j][i] = aji;
}

}  // namespace

std::string to_string(BaseSeries b)
{
    switch (b) {
    case BaseSeries::A:
        return "A";
    case BaseSeries::E8:
        return "E8";
    default:
        return "explicit";
    }
}

int CartanSpec::index(int id) const
{
    auto it = std::find(nodes.begin(), nodes.end(), id);
    if (it == nodes.end())
        throw std::invalid_argument("unknown node id " + std::to_string(id));
    return int(it - nodes.begin());
}

bool CartanSpec::has_node(int id) const { return std::find(nodes.begin(), nodes.end(), id) != nodes.end(); }

int CartanSpec::entry(int row_id, int col_id) const { return matrix[index(row_id)][index(col_id)]; }

std::vector<int> CartanSpec::bosonic_nodes() const
{
    std::vector<int> out;
    for (int id : nodes)
        if (is_bosonic(id))
            out.push_back(id);
    return out;
}

CartanSpec CartanSpec::bosonic_part() const
{
    auto ids = bosonic_nodes();
    CartanSpec s = permuted(ids);
    s.fermionic_node.reset();
    s.symmetrizer = compute_symmetrizer(s.matrix);
    return s;
}

CartanSpec CartanSpec::permuted(const std::vector<int>& order) const
{
    CartanSpec s;
    s.base = base;
    s.r = r;
    s.n = n;
    s.nodes = order;
    s.matrix.assign(order.size(), std::vector<int>(order.size(), 0));
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = 0; j < order.size(); ++j)
            s.matrix[i][j] = entry(order[i], order[j]);
    for (int id : order)
        s.symmetrizer.push_back(symmetrizer[index(id)]);
    if (fermionic_node && std::find(order.begin(), order.end(), *fermionic_node) != order.end())
        s.fermionic_node = fermionic_node;
    return s;
}

std::string CartanSpec::id() const { return to_json().dump(); }

nlohmann::json CartanSpec::to_json() const
{
    nlohmann::json j;
    j["nodes"] = nodes;
    j["matrix"] = matrix;
    std::vector<std::string> sym;
    for (auto& q : symmetrizer)
        sym.push_back(rational_str(q));
    j["symmetrizer"] = sym;
    j["fermionic_node"] = fermionic_node ? nlohmann::json(*fermionic_node) : nlohmann::json(nullptr);
    j["base"] = to_string(base);
    j["r"] = r;
    j["n"] = n;
    return j;
}

CartanSpec CartanSpec::from_json(const nlohmann::json& j)
{
    CartanSpec s;
    s.nodes = j.at("nodes").get<std::vector<int>>();
    s.matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
    for (auto& t : j.at("symmetrizer"))
        s.symmetrizer.push_back(parse_rational(t.get<std::string>()));
    if (!j.at("fermionic_node").is_null())
        s.fermionic_node = j.at("fermionic_node").get<int>();
    std::string b = j.value("base", "explicit");
    s.base = b == "A" ? BaseSeries::A : b == "E8" ? BaseSeries::E8 : BaseSeries::Explicit;
    s.r = j.value("r", 0);
    s.n = j.value("n", 0);
    validate(s);
    return s;
}

bool CartanSpec::operator==(const CartanSpec& o) const
{
    return nodes == o.nodes && matrix == o.matrix && symmetrizer == o.symmetrizer &&
           fermionic_node == o.fermionic_node && base == o.base && r == o.r && n == o.n;
}

CartanSpec build_cartan(BaseSeries base, int r, int n, bool super)
{
    if (n < 0 || n > 8)
        throw std::invalid_argument("extension count out of supported range");
    std::vector<int> ids;
    if (base == BaseSeries::A) {
        if (r < 1 || r > 12)
            throw std::invalid_argument("A-series rank out of supported range");
    } else if (base == BaseSeries::E8) {
        if (r != 8)
            throw std::invalid_argument("E8 series requires r = 8");
    } else {
        throw std::invalid_argument("build_cartan supports the A and E8 series only");
    }
    if (super)
        ids.push_back(-n - 1);
    for (int k = -n + 1; k <= 0; ++k)
        ids.push_back(k);
    for (int k = 1; k <= r; ++k)
        ids.push_back(k);
    int sz = int(ids.size());
    std::vector<std::vector<int>> a(sz, std::vector<int>(sz, 0));
    auto pos = [&](int id) { return int(std::find(ids.begin(), ids.end(), id) - ids.begin()); };
    for (int id : ids)
        a[pos(id)][pos(id)] = 2;
    if (base == BaseSeries::A) {
        for (int k = 1; k < r; ++k)
            add_edge(a, pos(k), pos(k + 1), -1, -1);
        if (n >= 1) {
            if (r == 1)
                add_edge(a, pos(0), pos(1), -2, -2);
            else {
                add_edge(a, pos(0), pos(1), -1, -1);
                add_edge(a, pos(0), pos(r), -1, -1);
            }
        }
    } else {
        for (int k = 1; k < 7; ++k)
            add_edge(a, pos(k), pos(k + 1), -1, -1);
        add_edge(a, pos(5), pos(8), -1, -1);
        if (n >= 1)
            add_edge(a, pos(0), pos(1), -1, -1);
    }
    for (int k = -n + 1; k <= -1; ++k)
        add_edge(a, pos(k), pos(k + 1), -1, -1);
    std::optional<int> ferm;
    if (super) {
        ferm = -n - 1;
        a[pos(-n - 1)][pos(-n - 1)] = 0;
        add_edge(a, pos(-n - 1), pos(-n + 1), -1, -1);
    }
    CartanSpec s;
    s.nodes = ids;
    s.matrix = a;
    s.symmetrizer = compute_symmetrizer(a);
    s.fermionic_node = ferm;
    s.base = base;
    s.r = r;
    s.n = n;
    validate(s);
    return s;
}

CartanSpec explicit_cartan(const std::vector<int>& nodes, const std::vector<std::vector<int>>& matrix,
                           std::optional<int> fermionic_node)
{
    CartanSpec s;
    s.nodes = nodes;
    s.matrix = matrix;
    s.fermionic_node = fermionic_node;
    s.base = BaseSeries::Explicit;
    s.r = int(nodes.size());
    s.symmetrizer = compute_symmetrizer(matrix);
    validate(s);
    return s;
}

void validate(const CartanSpec& s)
{
    int n = s.size();
    if (n == 0)
        throw std::invalid_argument("empty Cartan matrix");
    if (int(s.matrix.size()) != n || int(s.symmetrizer.size()) != n)
        throw std::invalid_argument("Cartan data sizes disagree");
    std::vector<int> sorted_ids = s.nodes;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end())
        throw std::invalid_argument("duplicate node ids");
    if (s.fermionic_node && !s.has_node(*s.fermionic_node))
        throw std::invalid_argument("fermionic node is not a node");
    for (int i = 0; i < n; ++i) {
        if (int(s.matrix[i].size()) != n)
            throw std::invalid_argument("Cartan matrix is not square");
        int want = s.is_bosonic(s.nodes[i]) ? 2 : 0;
        if (s.matrix[i][i] != want)
            throw std::invalid_argument("diagonal entry must be 2 (bosonic) or 0 (fermionic)");
        if (s.symmetrizer[i] <= 0)
            throw std::invalid_argument("symmetrizer must be positive");
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (s.matrix[i][j] > 0)
                throw std::invalid_argument("positive off-diagonal entry");
            if ((s.matrix[i][j] == 0) != (s.matrix[j][i] == 0))
                throw std::invalid_argument("zero pattern is not symmetric");
            if (s.symmetrizer[i] * s.matrix[i][j] != s.symmetrizer[j] * s.matrix[j][i])
                throw std::invalid_argument("symmetrizer does not symmetrize the matrix");
        }
    }
    if (s.base != BaseSeries::Explicit && s.n >= 2) {
        int row = -s.n + 1;
        for (int j : s.nodes) {
            int v = s.entry(row, j);
            if (v != 2 && v != -1 && v != 0)
                throw std::invalid_argument("extension row has an entry outside {2,-1,0}");
        }
    }
}

BigInt determinant(const CartanSpec& spec)
{
    int n = spec.size();
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = spec.matrix[i][j];
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

WeightVector WeightVector::fundamental(const std::vector<long long>& labels)
{
    WeightVector w;
    w.basis = Basis::Fundamental;
    for (auto v : labels)
        w.coeffs.emplace_back(v);
    return w;
}

WeightVector WeightVector::root(const std::vector<long long>& coeffs)
{
    WeightVector w;
    w.basis = Basis::SimpleRoot;
    for (auto v : coeffs)
        w.coeffs.emplace_back(v);
    return w;
}

WeightVector to_fundamental_basis(const CartanSpec& spec, const WeightVector& x)
{
    if (x.basis == Basis::Fundamental)
        return x;
    int n = spec.size();
    WeightVector out;
    out.basis = Basis::Fundamental;
    out.coeffs.assign(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.coeffs[i] += Rational(spec.matrix[i][j]) * x.coeffs[j];
    return out;
}

WeightVector to_root_basis(const CartanSpec& spec, const WeightVector& x)
{
    if (x.basis == Basis::SimpleRoot)
        return x;
    int n = spec.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = spec.matrix[i][j];
    WeightVector out;
    out.basis = Basis::SimpleRoot;
    out.coeffs = solve(m, x.coeffs);
    return out;
}

Rational inner_product(const CartanSpec& spec, const WeightVector& x, const WeightVector& y)
{
    int n = spec.size();
    if (int(x.coeffs.size()) != n || int(y.coeffs.size()) != n)
        throw std::invalid_argument("weight length does not match the rank");
    // (Lambda_i, alpha_j) = d_j delta_ij, (alpha_i, alpha_j) = d_i A_ij
    if (x.basis == Basis::Fundamental && y.basis == Basis::Fundamental)
        return inner_product(spec, to_root_basis(spec, x), y);
    if (x.basis == Basis::Fundamental)
        return inner_product(spec, y, x);
    Rational s = 0;
    if (y.basis == Basis::Fundamental) {
        for (int i = 0; i < n; ++i)
            s += x.coeffs[i] * spec.symmetrizer[i] * y.coeffs[i];
        return s;
    }
    for (int i = 0; i < n; ++i) {
        if (x.coeffs[i] == 0)
            continue;
        for (int j = 0; j < n; ++j)
            if (spec.matrix[i][j] != 0)
                s += x.coeffs[i] * spec.symmetrizer[i] * spec.matrix[i][j] * y.coeffs[j];
    }
    return s;
}

WeightVector weyl_vector(const CartanSpec& spec) { return WeightVector::fundamental(std::vector<long long>(spec.size(), 1)); }

WeightVector simple_root(const CartanSpec& spec, int id)
{
    std::vector<long long> c(spec.size(), 0);
    c[spec.index(id)] = 1;
    return WeightVector::root(c);
}

WeightVector fundamental_weight(const CartanSpec& spec, int id)
{
    std::vector<long long> c(spec.size(), 0);
    c[spec.index(id)] = 1;
    return WeightVector::fundamental(c);
}

std::vector<long long> null_root(const CartanSpec& spec, const std::vector<int>& affine_nodes)
{
    int k = int(affine_nodes.size());
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m[i][j] = spec.entry(affine_nodes[i], affine_nodes[j]);
    // row reduce and read off a one-dimensional kernel
    std::vector<int> pivot_col;
    int row = 0;
    std::vector<int> free_cols;
    for (int c = 0; c < k && row < k; ++c) {
        int p = row;
        while (p < k && m[p][c] == 0)
            ++p;
        if (p == k) {
            free_cols.push_back(c);
            continue;
        }
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][c];
        for (auto& v : m[row])
            v *= inv;
        for (int r2 = 0; r2 < k; ++r2) {
            if (r2 == row || m[r2][c] == 0)
                continue;
            Rational f = m[r2][c];
            for (int cc = 0; cc < k; ++cc)
                m[r2][cc] -= f * m[row][cc];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (int c = 0; c < k; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end() &&
            std::find(free_cols.begin(), free_cols.end(), c) == free_cols.end())
            free_cols.push_back(c);
    if (free_cols.size() != 1)
        throw std::invalid_argument("sub-diagram is not affine (kernel dimension != 1)");
    std::vector<Rational> v(k, Rational(0));
    v[free_cols[0]] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
        v[pivot_col[i]] = -m[i][free_cols[0]];
    BigInt l = 1;
    for (auto& x : v)
        l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<BigInt> iv(k);
    BigInt g = 0;
    for (int i = 0; i < k; ++i) {
        iv[i] = numerator(Rational(v[i] * l));
        g = boost::multiprecision::gcd(g, iv[i]);
    }
    bool neg = false;
    for (auto& x : iv)
        if (x < 0)
            neg = true;
    std::vector<long long> out(spec.size(), 0);
    for (int i = 0; i < k; ++i) {
        BigInt x = iv[i] / g;
        if (neg)
            x = -x;
        if (x <= 0)
            throw std::invalid_argument("null vector is not positive");
        out[spec.index(affine_nodes[i])] = x.convert_to<long long>();
    }
    return out;
}

}  // namespace thl
