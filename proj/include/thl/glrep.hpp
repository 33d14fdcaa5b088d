#pragma once

#include "thl/bigint.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace thl {

constexpr int kMaxRank = 16;

// A gl(d) irreducible, stored by its non-increasing highest weight.  Labels
// are the successive differences and the charge is minus the weight sum, so
// the 1-form (0...01) carries charge +1.
struct GlIrrep {
    std::array<int16_t, kMaxRank> w{};
    int8_t d = 0;

    static GlIrrep from_weight(const std::vector<int>& weight);
    static GlIrrep from_labels(const std::vector<int>& labels, int charge);
    static GlIrrep trivial(int d);
    static bool congruent(const std::vector<int>& labels, int charge);

    int rank() const { return d; }
    std::vector<int> weight() const;
    std::vector<int> labels() const;
    int charge() const;
    bool is_trivial() const;

    GlIrrep dual() const;         // reversed labels, negated charge
    GlIrrep twist(int c) const;   // tensor with det^c, charge shifts by -c*d
    std::string label_string() const;

    bool operator==(const GlIrrep& o) const { return d == o.d && w == o.w; }
    bool operator!=(const GlIrrep& o) const { return !(*this == o); }
};

// Orders irreps the way the tables list them: lexicographically by labels.
bool display_less(const GlIrrep& a, const GlIrrep& b);

struct GlIrrepHash {
    size_t operator()(const GlIrrep& x) const noexcept;
};

class Rep {
public:
    using Map = std::unordered_map<GlIrrep, BigInt, GlIrrepHash>;

    Rep() = default;
    explicit Rep(int d) : d_(d) {}
    static Rep one(int d);
    static Rep irrep(const GlIrrep& x, const BigInt& c = 1);

    int rank() const { return d_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    BigInt coeff(const GlIrrep& x) const;
    void add(const GlIrrep& x, const BigInt& c);
    void add_scaled(const Rep& o, const BigInt& c);

    Rep& operator+=(const Rep& o);
    Rep& operator-=(const Rep& o);
    Rep operator+(const Rep& o) const;
    Rep operator-(const Rep& o) const;
    Rep operator-() const;
    Rep operator*(const BigInt& c) const;
    bool operator==(const Rep& o) const;
    bool operator!=(const Rep& o) const { return !(*this == o); }

    Rep divided_exact(const BigInt& c) const;
    Rep dual() const;
    Rep twist(int c) const;
    bool is_nonnegative() const;
    BigInt total_multiplicity() const;

    std::vector<std::pair<GlIrrep, BigInt>> sorted() const;
    // "n(labels)" terms separated by spaces, multiplicity 1 omitted
    std::string str() const;
    std::string str_with_charges() const;

private:
    int d_ = 0;
    Map terms_;
};

BigInt dim(const GlIrrep& x);
BigInt dim(const Rep& r);

// Littlewood-Richardson product of two irreps; multiplicities are machine sized.
const std::vector<std::pair<GlIrrep, int64_t>>& lr_product(const GlIrrep& a, const GlIrrep& b);

Rep tensor(const Rep& a, const Rep& b);
Rep adams(const GlIrrep& x, int k);
Rep adams(const Rep& r, int k);
Rep alt_power(const Rep& r, int k);
Rep sym_power(const Rep& r, int k);

// Fundamental forms: Lambda^p has labels e_{d-p} and charge p.
GlIrrep form_irrep(int d, int p);

struct DominantCharacter {
    int d = 0;
    std::map<std::vector<int>, BigInt> weights;

    BigInt dimension() const;
    bool operator==(const DominantCharacter& o) const { return d == o.d && weights == o.weights; }
};

BigInt kostka(const std::vector<int>& lambda, const std::vector<int>& mu);
DominantCharacter to_character(const Rep& r);
Rep from_character(const DominantCharacter& c);
// Number of distinct permutations of a weight.
BigInt orbit_size(const std::vector<int>& w);

// Parses "3(01) (12) 2(0,10)" into (multiplicity, labels) pairs.
std::vector<std::pair<BigInt, std::vector<int>>> parse_label_terms(const std::string& s);

void clear_glrep_caches();

}  // namespace thl
