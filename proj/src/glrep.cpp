#include "thl/glrep.hpp"

#include <algorithm>
#include <cctype>
#include <cassert>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thl {

namespace {

using Part = std::array<int16_t, kMaxRank>;

struct PartKey {
    Part a{};
    Part b{};
    int8_t d = 0;
    int8_t tag = 0;
    bool operator==(const PartKey& o) const { return d == o.d && tag == o.tag && a == o.a && b == o.b; }
};

struct PartKeyHash {
    size_t operator()(const PartKey& k) const noexcept
    {
        uint64_t h = 1469598103934665603ull ^ (uint64_t(k.d) << 8) ^ uint64_t(k.tag);
        for (int i = 0; i < k.d; ++i) {
            h = (h ^ uint16_t(k.a[i])) * 1099511628211ull;
            h = (h ^ uint16_t(k.b[i])) * 1099511628211ull;
        }
        return size_t(h);
    }
};

int part_len(const Part& p, int d)
{
    int n = d;
    while (n > 0 && p[n - 1] == 0)
        --n;
    return n;
}

int part_size(const Part& p, int d)
{
    int s = 0;
    for (int i = 0; i < d; ++i)
        s += p[i];
    return s;
}

// complement inside a d x p[0] box, as a partition
Part part_dual(const Part& p, int d)
{
    Part q{};
    for (int i = 0; i < d; ++i)
        q[i] = int16_t(p[0] - p[d - 1 - i]);
    return q;
}

// Enumerates LR tableaux of shape nu/base with content mu, nu limited to d rows.
class LrProduct {
public:
    LrProduct(const Part& base, const Part& mu, int d) : base_(base), mu_(mu), d_(d)
    {
        nc_ = part_len(mu, d);
    }

    std::vector<std::pair<Part, int64_t>> run()
    {
        cum_.fill(0);
        row(0);
        std::vector<std::pair<Part, int64_t>> out(found_.begin(), found_.end());
        return out;
    }

private:
    void row(int r)
    {
        bool done = true;
        for (int j = 0; j < nc_; ++j)
            if (cum_[j] != mu_[j]) {
                done = false;
                break;
            }
        if (done) {
            for (int i = r; i < d_; ++i)
                nu_[i] = base_[i];
            ++found_[nu_];
            return;
        }
        if (r == d_)
            return;
        old_[r] = cum_;
        letter(r, 0, base_[r], 0);
    }

    void letter(int r, int j, int pos, int prefix)
    {
        int top = std::min(r, nc_ - 1);
        if (j > top) {
            nu_[r] = int16_t(pos);
            auto saved = prev_;
            auto mine = cur_;
            prev_ = cur_;
            row(r + 1);
            prev_ = saved;
            cur_ = mine;
            return;
        }
        int maxn = mu_[j] - cum_[j];
        if (r > 0) {
            int above = base_[r - 1] + (j > 0 ? prev_[j - 1] : 0);
            maxn = std::min(maxn, above - pos);
        }
        if (j > 0)
            maxn = std::min(maxn, old_[r][j - 1] - old_[r][j]);
        for (int n = 0; n <= maxn; ++n) {
            cur_[j] = int16_t(prefix + n);
            cum_[j] = int16_t(cum_[j] + n);
            letter(r, j + 1, pos + n, prefix + n);
            cum_[j] = int16_t(cum_[j] - n);
        }
    }

    Part base_, mu_;
    int d_, nc_ = 0;
    Part cum_{}, nu_{}, cur_{}, prev_{};
    std::array<Part, kMaxRank + 1> old_{};
    std::map<Part, int64_t> found_;
};

// LR tableaux of fixed skew shape outer/inner; yields the contents.
class LrSkew {
public:
    LrSkew(const Part& outer, const Part& inner, int rows) : outer_(outer), inner_(inner), rows_(rows) {}

    std::vector<std::pair<Part, int64_t>> run()
    {
        cum_.fill(0);
        row(0);
        return {found_.begin(), found_.end()};
    }

private:
    void row(int r)
    {
        if (r == rows_) {
            ++found_[cum_];
            return;
        }
        old_[r] = cum_;
        letter(r, 0, outer_[r] - inner_[r], 0);
    }

    void letter(int r, int j, int remaining, int prefix)
    {
        if (remaining == 0 || j > r) {
            if (remaining != 0)
                return;
            for (int i = j; i <= r; ++i)
                cur_[i] = int16_t(prefix);
            auto saved = prev_;
            auto mine = cur_;
            prev_ = cur_;
            row(r + 1);
            prev_ = saved;
            cur_ = mine;
            return;
        }
        int maxn = remaining;
        if (r > 0) {
            int above = inner_[r - 1] + (j > 0 ? prev_[j - 1] : 0);
            maxn = std::min(maxn, above - inner_[r] - prefix);
        }
        if (j > 0)
            maxn = std::min(maxn, old_[r][j - 1] - old_[r][j]);
        for (int n = 0; n <= maxn; ++n) {
            cur_[j] = int16_t(prefix + n);
            cum_[j] = int16_t(cum_[j] + n);
            letter(r, j + 1, remaining - n, prefix + n);
            cum_[j] = int16_t(cum_[j] - n);
        }
    }

    Part outer_, inner_;
    int rows_;
    Part cum_{}, cur_{}, prev_{};
    std::array<Part, kMaxRank + 1> old_{};
    std::map<Part, int64_t> found_;
};

std::mutex g_lr_mutex;
std::unordered_map<PartKey, std::vector<std::pair<GlIrrep, int64_t>>, PartKeyHash> g_lr_cache;
std::mutex g_adams_mutex;
std::unordered_map<PartKey, Rep, PartKeyHash> g_adams_cache;
std::mutex g_kostka_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> g_kostka_cache;

constexpr size_t kLrCacheLimit = 4000000;

GlIrrep irrep_from_part(const Part& p, int d, int shift)
{
    GlIrrep x;
    x.d = int8_t(d);
    for (int i = 0; i < d; ++i)
        x.w[i] = int16_t(p[i] + shift);
    return x;
}

Part part_of(const GlIrrep& x, int& shift)
{
    Part p{};
    shift = x.w[x.d - 1];
    for (int i = 0; i < x.d; ++i)
        p[i] = int16_t(x.w[i] - shift);
    return p;
}

void enumerate_subpartitions(const Part& outer, int rows, int r, Part& cur, const std::function<void(const Part&)>& f)
{
    if (r == rows) {
        f(cur);
        return;
    }
    int hi = outer[r];
    if (r > 0)
        hi = std::min<int>(hi, cur[r - 1]);
    for (int v = 0; v <= hi; ++v) {
        cur[r] = int16_t(v);
        enumerate_subpartitions(outer, rows, r + 1, cur, f);
    }
    cur[r] = 0;
}

using Tuple = std::vector<Part>;

// all ordered tuples (rho_0..rho_{k-1}) with <s_outer, prod s_rho_i> > 0
std::vector<std::pair<Tuple, int64_t>> quotient_tuples(const Part& outer, int rows, int k)
{
    if (k == 1)
        return {{Tuple{outer}, 1}};
    std::vector<std::pair<Tuple, int64_t>> out;
    Part cur{};
    enumerate_subpartitions(outer, rows, 0, cur, [&](const Part& inner) {
        int inner_rows = part_len(inner, rows);
        auto contents = LrSkew(outer, inner, rows).run();
        if (contents.empty())
            return;
        auto rest = quotient_tuples(inner, inner_rows, k - 1);
        for (auto& [rho, c] : contents)
            for (auto& [t, c2] : rest) {
                Tuple full;
                full.reserve(k);
                full.push_back(rho);
                full.insert(full.end(), t.begin(), t.end());
                out.emplace_back(std::move(full), c * c2);
            }
    });
    return out;
}

// Builds the partition with empty k-core and the given k-quotient, with the
// k-sign of its ribbon decomposition.  Returns false if it needs more than d rows.
bool from_quotient(const Tuple& q, int k, int d, Part& nu, int& sign)
{
    int m = 0;
    for (auto& p : q)
        m = std::max(m, part_len(p, kMaxRank));
    int L = k * m;
    std::vector<int> beads;
    beads.reserve(L);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j)
            beads.push_back(i + k * (q[i][j] + (m - 1 - j)));
    std::sort(beads.begin(), beads.end(), std::greater<int>());
    nu.fill(0);
    for (int j = 0; j < L; ++j) {
        int v = beads[j] - (L - 1 - j);
        if (v > 0) {
            if (j >= d)
                return false;
            nu[j] = int16_t(v);
        }
    }
    std::vector<char> occ(beads.empty() ? 1 : beads.front() + 1, 0);
    for (int b : beads)
        occ[b] = 1;
    sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int b = int(occ.size()) - 1; b >= k; --b) {
            if (occ[b] && !occ[b - k]) {
                int between = 0;
                for (int c = b - k + 1; c < b; ++c)
                    between += occ[c];
                if (between % 2)
                    sign = -sign;
                occ[b] = 0;
                occ[b - k] = 1;
                moved = true;
                break;
            }
        }
    }
    return true;
}

Rep adams_partition(const Part& p, int d, int k)
{
    Rep out(d);
    int rows = part_len(p, d);
    if (rows == 0) {
        out.add(GlIrrep::trivial(d), 1);
        return out;
    }
    for (auto& [t, c] : quotient_tuples(p, rows, k)) {
        Part nu;
        int sign;
        if (!from_quotient(t, k, d, nu, sign))
            continue;
        out.add(irrep_from_part(nu, d, 0), BigInt(sign * c));
    }
    return out;
}

std::vector<std::vector<int>> partitions_dominated(const std::vector<int>& lambda)
{
    int d = int(lambda.size());
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d, 0);
    std::function<void(int, int, int, int)> rec = [&](int i, int rem, int maxpart, int prefix) {
        if (i == d) {
            if (rem == 0)
                out.push_back(cur);
            return;
        }
        int lam_prefix = 0;
        for (int j = 0; j <= i; ++j)
            lam_prefix += lambda[j];
        int hi = std::min({maxpart, rem, lam_prefix - prefix});
        int lo = (rem + (d - i) - 1) / (d - i);
        for (int v = hi; v >= lo; --v) {
            cur[i] = v;
            rec(i + 1, rem - v, v, prefix + v);
        }
        cur[i] = 0;
    };
    rec(0, n, n, 0);
    return out;
}

}  // namespace

GlIrrep GlIrrep::from_weight(const std::vector<int>& weight)
{
    if (weight.empty() || int(weight.size()) > kMaxRank)
        throw std::invalid_argument("gl weight rank out of range");
    GlIrrep x;
    x.d = int8_t(weight.size());
    for (size_t i = 0; i < weight.size(); ++i) {
        if (i > 0 && weight[i] > weight[i - 1])
            throw std::invalid_argument("gl weight is not dominant");
        x.w[i] = int16_t(weight[i]);
    }
    return x;
}

bool GlIrrep::congruent(const std::vector<int>& labels, int charge)
{
    long d = long(labels.size()) + 1;
    long s = 0;
    for (size_t k = 0; k < labels.size(); ++k)
        s += long(k + 1) * labels[k];
    return ((-charge - s) % d + d) % d == 0;
}

GlIrrep GlIrrep::from_labels(const std::vector<int>& labels, int charge)
{
    int d = int(labels.size()) + 1;
    if (d > kMaxRank)
        throw std::invalid_argument("gl rank too large");
    long s = 0;
    for (size_t k = 0; k < labels.size(); ++k) {
        if (labels[k] < 0)
            throw std::invalid_argument("negative sl label");
        s += long(k + 1) * labels[k];
    }
    long num = -long(charge) - s;
    if (num % d != 0)
        throw std::invalid_argument("charge not congruent to labels");
    GlIrrep x;
    x.d = int8_t(d);
    int v = int(num / d);
    x.w[d - 1] = int16_t(v);
    for (int k = d - 2; k >= 0; --k) {
        v += labels[k];
        x.w[k] = int16_t(v);
    }
    return x;
}

GlIrrep GlIrrep::trivial(int d)
{
    GlIrrep x;
    x.d = int8_t(d);
    return x;
}

std::vector<int> GlIrrep::weight() const { return std::vector<int>(w.begin(), w.begin() + d); }

std::vector<int> GlIrrep::labels() const
{
    std::vector<int> a(d - 1);
    for (int k = 0; k + 1 < d; ++k)
        a[k] = w[k] - w[k + 1];
    return a;
}

int GlIrrep::charge() const
{
    int s = 0;
    for (int i = 0; i < d; ++i)
        s += w[i];
    return -s;
}

bool GlIrrep::is_trivial() const
{
    for (int i = 0; i < d; ++i)
        if (w[i] != 0)
            return false;
    return true;
}

GlIrrep GlIrrep::dual() const
{
    GlIrrep x;
    x.d = d;
    for (int i = 0; i < d; ++i)
        x.w[i] = int16_t(-w[d - 1 - i]);
    return x;
}

GlIrrep GlIrrep::twist(int c) const
{
    GlIrrep x = *this;
    for (int i = 0; i < d; ++i)
        x.w[i] = int16_t(x.w[i] + c);
    return x;
}

std::string GlIrrep::label_string() const
{
    auto a = labels();
    bool wide = std::any_of(a.begin(), a.end(), [](int v) { return v > 9; });
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (wide && i > 0)
            s += ',';
        s += std::to_string(a[i]);
    }
    return s + ")";
}

bool display_less(const GlIrrep& a, const GlIrrep& b)
{
    auto la = a.labels(), lb = b.labels();
    if (la != lb)
        return la < lb;
    return a.charge() < b.charge();
}

size_t GlIrrepHash::operator()(const GlIrrep& x) const noexcept
{
    uint64_t h = 1469598103934665603ull ^ uint64_t(x.d);
    for (int i = 0; i < x.d; ++i)
        h = (h ^ uint16_t(x.w[i])) * 1099511628211ull;
    return size_t(h ^ (h >> 29));
}

Rep Rep::one(int d)
{
    Rep r(d);
    r.add(GlIrrep::trivial(d), 1);
    return r;
}

Rep Rep::irrep(const GlIrrep& x, const BigInt& c)
{
    Rep r(x.d);
    r.add(x, c);
    return r;
}

BigInt Rep::coeff(const GlIrrep& x) const
{
    auto it = terms_.find(x);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Rep::add(const GlIrrep& x, const BigInt& c)
{
    if (c == 0)
        return;
    if (d_ == 0)
        d_ = x.d;
    else if (x.d != d_)
        throw std::invalid_argument("mixed gl ranks in a representation");
    auto [it, fresh] = terms_.try_emplace(x, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Rep::add_scaled(const Rep& o, const BigInt& c)
{
    if (c == 0)
        return;
    for (auto& [x, v] : o.terms_)
        add(x, v * c);
}

Rep& Rep::operator+=(const Rep& o)
{
    for (auto& [x, v] : o.terms_)
        add(x, v);
    return *this;
}

Rep& Rep::operator-=(const Rep& o)
{
    for (auto& [x, v] : o.terms_)
        add(x, -v);
    return *this;
}

Rep Rep::operator+(const Rep& o) const
{
    Rep r = *this;
    r += o;
    return r;
}

Rep Rep::operator-(const Rep& o) const
{
    Rep r = *this;
    r -= o;
    return r;
}

Rep Rep::operator-() const
{
    Rep r(d_);
    for (auto& [x, v] : terms_)
        r.terms_.emplace(x, -v);
    return r;
}

Rep Rep::operator*(const BigInt& c) const
{
    Rep r(d_);
    if (c == 0)
        return r;
    for (auto& [x, v] : terms_)
        r.terms_.emplace(x, v * c);
    return r;
}

bool Rep::operator==(const Rep& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    for (auto& [x, v] : terms_) {
        auto it = o.terms_.find(x);
        if (it == o.terms_.end() || it->second != v)
            return false;
    }
    return true;
}

Rep Rep::divided_exact(const BigInt& c) const
{
    Rep r(d_);
    for (auto& [x, v] : terms_) {
        if (v % c != 0)
            throw std::runtime_error("inexact division of a representation multiplicity");
        r.terms_.emplace(x, v / c);
    }
    return r;
}

Rep Rep::dual() const
{
    Rep r(d_);
    for (auto& [x, v] : terms_)
        r.terms_.emplace(x.dual(), v);
    return r;
}

Rep Rep::twist(int c) const
{
    Rep r(d_);
    for (auto& [x, v] : terms_)
        r.terms_.emplace(x.twist(c), v);
    return r;
}

bool Rep::is_nonnegative() const
{
    for (auto& [x, v] : terms_)
        if (v < 0)
            return false;
    return true;
}

BigInt Rep::total_multiplicity() const
{
    BigInt s = 0;
    for (auto& [x, v] : terms_)
        s += v;
    return s;
}

std::vector<std::pair<GlIrrep, BigInt>> Rep::sorted() const
{
    std::vector<std::pair<GlIrrep, BigInt>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return display_less(a.first, b.first); });
    return v;
}

std::string Rep::str() const
{
    std::string s;
    for (auto& [x, v] : sorted()) {
        if (!s.empty())
            s += ' ';
        if (v == -1)
            s += '-';
        else if (v != 1)
            s += v.str();
        s += x.label_string();
    }
    return s;
}

std::string Rep::str_with_charges() const
{
    std::string s;
    for (auto& [x, v] : sorted()) {
        if (!s.empty())
            s += ' ';
        if (v == -1)
            s += '-';
        else if (v != 1)
            s += v.str();
        s += x.label_string() + "[" + std::to_string(x.charge()) + "]";
    }
    return s;
}

BigInt dim(const GlIrrep& x)
{
    BigInt num = 1, den = 1;
    for (int i = 0; i < x.d; ++i)
        for (int j = i + 1; j < x.d; ++j) {
            num *= (x.w[i] - x.w[j] + j - i);
            den *= (j - i);
        }
    return num / den;
}

BigInt dim(const Rep& r)
{
    BigInt s = 0;
    for (auto& [x, v] : r.terms())
        s += v * dim(x);
    return s;
}

const std::vector<std::pair<GlIrrep, int64_t>>& lr_product(const GlIrrep& a, const GlIrrep& b)
{
    if (a.d != b.d)
        throw std::invalid_argument("tensor of different gl ranks");
    int d = a.d;
    int sa, sb;
    Part pa = part_of(a, sa), pb = part_of(b, sb);
    Part da = part_dual(pa, d), db = part_dual(pb, d);
    int sizes[4] = {part_size(pb, d), part_size(pa, d), part_size(db, d), part_size(da, d)};
    int best = int(std::min_element(sizes, sizes + 4) - sizes);
    PartKey key;
    key.d = int8_t(d);
    bool dualized = best >= 2;
    if (best == 0 || best == 2) {
        key.a = dualized ? da : pa;
        key.b = dualized ? db : pb;
    } else {
        key.a = dualized ? db : pb;
        key.b = dualized ? da : pa;
    }
    key.tag = int8_t(dualized);

    // results are stored for the normalized pair and then shifted; we keep a
    // second level keyed on the original irreps to hand out stable references
    static thread_local std::unordered_map<PartKey, std::vector<std::pair<GlIrrep, int64_t>>, PartKeyHash> shifted;
    PartKey orig;
    orig.d = int8_t(d);
    orig.a = a.w;
    orig.b = b.w;
    orig.tag = 2;
    if (auto it = shifted.find(orig); it != shifted.end())
        return it->second;

    std::vector<std::pair<GlIrrep, int64_t>> base;
    {
        std::lock_guard<std::mutex> lock(g_lr_mutex);
        auto it = g_lr_cache.find(key);
        if (it != g_lr_cache.end())
            base = it->second;
    }
    if (base.empty()) {
        for (auto& [nu, c] : LrProduct(key.a, key.b, d).run())
            base.emplace_back(irrep_from_part(nu, d, 0), c);
        std::lock_guard<std::mutex> lock(g_lr_mutex);
        if (g_lr_cache.size() > kLrCacheLimit)
            g_lr_cache.clear();
        g_lr_cache.emplace(key, base);
    }
    std::vector<std::pair<GlIrrep, int64_t>> out;
    out.reserve(base.size());
    if (!dualized) {
        for (auto& [x, c] : base)
            out.emplace_back(x.twist(sa + sb), c);
    } else {
        int top = pa[0] + pb[0];
        for (auto& [x, c] : base)
            out.emplace_back(x.dual().twist(top + sa + sb), c);
    }
    if (shifted.size() > kLrCacheLimit)
        shifted.clear();
    return shifted.emplace(orig, std::move(out)).first->second;
}

Rep tensor(const Rep& a, const Rep& b)
{
    if (a.empty() || b.empty())
        return Rep(a.rank() ? a.rank() : b.rank());
    if (a.rank() != b.rank())
        throw std::invalid_argument("tensor of different gl ranks");
    Rep out(a.rank());
    const Rep& small = a.size() <= b.size() ? a : b;
    const Rep& large = a.size() <= b.size() ? b : a;
    for (auto& [x, cx] : small.terms())
        for (auto& [y, cy] : large.terms()) {
            BigInt c = cx * cy;
            for (auto& [z, m] : lr_product(x, y))
                out.add(z, m == 1 ? c : c * m);
        }
    return out;
}

Rep adams(const GlIrrep& x, int k)
{
    if (k < 1)
        throw std::invalid_argument("Adams operation needs k >= 1");
    if (k == 1)
        return Rep::irrep(x);
    int shift;
    Part p = part_of(x, shift);
    PartKey key;
    key.d = x.d;
    key.a = p;
    key.b[0] = int16_t(k);
    key.tag = 3;
    {
        std::lock_guard<std::mutex> lock(g_adams_mutex);
        auto it = g_adams_cache.find(key);
        if (it != g_adams_cache.end())
            return it->second.twist(k * shift);
    }
    Rep r = adams_partition(p, x.d, k);
    {
        std::lock_guard<std::mutex> lock(g_adams_mutex);
        g_adams_cache.emplace(key, r);
    }
    return r.twist(k * shift);
}

Rep adams(const Rep& r, int k)
{
    Rep out(r.rank());
    for (auto& [x, c] : r.terms())
        out.add_scaled(adams(x, k), c);
    return out;
}

Rep alt_power(const Rep& r, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative exterior power");
    int d = r.rank();
    std::vector<Rep> e{Rep::one(d)};
    std::vector<Rep> psi{Rep(d)};
    for (int n = 1; n <= k; ++n) {
        psi.push_back(adams(r, n));
        Rep acc(d);
        for (int i = 1; i <= n; ++i) {
            Rep t = tensor(psi[i], e[n - i]);
            acc.add_scaled(t, (i % 2) ? 1 : -1);
        }
        e.push_back(acc.divided_exact(n));
    }
    return e[k];
}

Rep sym_power(const Rep& r, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative symmetric power");
    int d = r.rank();
    std::vector<Rep> h{Rep::one(d)};
    std::vector<Rep> psi{Rep(d)};
    for (int n = 1; n <= k; ++n) {
        psi.push_back(adams(r, n));
        Rep acc(d);
        for (int i = 1; i <= n; ++i)
            acc += tensor(psi[i], h[n - i]);
        h.push_back(acc.divided_exact(n));
    }
    return h[k];
}

GlIrrep form_irrep(int d, int p)
{
    std::vector<int> a(d - 1, 0);
    if (p > 0 && p < d)
        a[d - 1 - p] = 1;
    return GlIrrep::from_labels(a, p);
}

BigInt DominantCharacter::dimension() const
{
    BigInt s = 0;
    for (auto& [w, c] : weights)
        s += c * orbit_size(w);
    return s;
}

BigInt orbit_size(const std::vector<int>& w)
{
    BigInt n = 1;
    for (size_t i = 2; i <= w.size(); ++i)
        n *= unsigned(i);
    std::map<int, int> counts;
    for (int v : w)
        ++counts[v];
    for (auto& [v, c] : counts)
        for (int i = 2; i <= c; ++i)
            n /= i;
    return n;
}

BigInt kostka(const std::vector<int>& lambda, const std::vector<int>& mu)
{
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    int m = std::accumulate(mu.begin(), mu.end(), 0);
    if (n != m)
        return 0;
    std::vector<int> lam = lambda, mm = mu;
    while (!lam.empty() && lam.back() == 0)
        lam.pop_back();
    while (!mm.empty() && mm.back() == 0)
        mm.pop_back();
    if (mm.empty())
        return lam.empty() ? 1 : 0;
    if (lam.size() > mm.size())
        return 0;
    {
        std::lock_guard<std::mutex> lock(g_kostka_mutex);
        auto it = g_kostka_cache.find({lam, mm});
        if (it != g_kostka_cache.end())
            return it->second;
    }
    int strip = mm.back();
    std::vector<int> rest(mm.begin(), mm.end() - 1);
    BigInt total = 0;
    std::vector<int> cur(lam.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
        if (i == lam.size()) {
            if (rem == 0)
                total += kostka(cur, rest);
            return;
        }
        int lo = i + 1 < lam.size() ? lam[i + 1] : 0;
        for (int v = lam[i]; v >= lo; --v) {
            int used = lam[i] - v;
            if (used > rem)
                break;
            cur[i] = v;
            rec(i + 1, rem - used);
        }
    };
    rec(0, strip);
    std::lock_guard<std::mutex> lock(g_kostka_mutex);
    g_kostka_cache.emplace(std::make_pair(lam, mm), total);
    return total;
}

DominantCharacter to_character(const Rep& r)
{
    DominantCharacter ch;
    ch.d = r.rank();
    for (auto& [x, c] : r.terms()) {
        auto w = x.weight();
        int shift = w.back();
        std::vector<int> p(w.size());
        for (size_t i = 0; i < w.size(); ++i)
            p[i] = w[i] - shift;
        for (auto& mu : partitions_dominated(p)) {
            BigInt k = kostka(p, mu);
            if (k == 0)
                continue;
            std::vector<int> wt(mu.size());
            for (size_t i = 0; i < mu.size(); ++i)
                wt[i] = mu[i] + shift;
            BigInt& slot = ch.weights[wt];
            slot += c * k;
            if (slot == 0)
                ch.weights.erase(wt);
        }
    }
    return ch;
}

Rep from_character(const DominantCharacter& c)
{
    Rep out(c.d);
    auto rest = c.weights;
    while (!rest.empty()) {
        auto top = std::prev(rest.end());
        BigInt k = top->second;
        if (k < 0)
            throw std::runtime_error("character has a negative leading multiplicity");
        GlIrrep x = GlIrrep::from_weight(top->first);
        out.add(x, k);
        for (auto& [w, m] : to_character(Rep::irrep(x)).weights) {
            BigInt& slot = rest[w];
            slot -= k * m;
            if (slot == 0)
                rest.erase(w);
            else if (slot < 0)
                throw std::runtime_error("character subtraction went negative");
        }
    }
    return out;
}

std::vector<std::pair<BigInt, std::vector<int>>> parse_label_terms(const std::string& s)
{
    std::vector<std::pair<BigInt, std::vector<int>>> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        if (i >= s.size())
            break;
        size_t open = s.find('(', i);
        size_t close = s.find(')', open);
        if (open == std::string::npos || close == std::string::npos)
            throw std::invalid_argument("malformed term list: " + s);
        std::string mult = s.substr(i, open - i);
        BigInt c = mult.empty() ? BigInt(1) : (mult == "-" ? BigInt(-1) : BigInt(mult));
        std::string body = s.substr(open + 1, close - open - 1);
        std::vector<int> labels;
        if (body.find(',') != std::string::npos) {
            std::stringstream ss(body);
            std::string tok;
            while (std::getline(ss, tok, ','))
                labels.push_back(std::stoi(tok));
        } else {
            for (char ch : body)
                labels.push_back(ch - '0');
        }
        out.emplace_back(c, labels);
        i = close + 1;
    }
    return out;
}

void clear_glrep_caches()
{
    {
        std::lock_guard<std::mutex> lock(g_lr_mutex);
        g_lr_cache.clear();
    }
    {
        std::lock_guard<std::mutex> lock(g_adams_mutex);
        g_adams_cache.clear();
    }
    std::lock_guard<std::mutex> lock(g_kostka_mutex);
    g_kostka_cache.clear();
}

}  // namespace thl
