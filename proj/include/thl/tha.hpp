#pragma once

#include "thl/borcherds.hpp"
#include "thl/grading.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace thl {

using Cell = std::pair<int, int>;  // (level l, degree m)

struct BiGradedContent {
    int d = 0;
    int slope = 0;
    int lmin = 0, lmax = 0, max_degree = 0;
    std::map<Cell, Rep> cells;

    bool in_window(int l, int m) const { return l >= lmin && l <= lmax && m >= 0 && m <= max_degree; }
    Rep cell(int l, int m) const;
    void set(int l, int m, const Rep& r);
    void add(int l, int m, const Rep& r);
    // every term at (l, m) has charge slope*m - l; returns the first violation
    std::optional<Cell> charge_law_violation() const;
};

enum class AssemblyMode { BorcherdsOnly, Conjecture };

// BorcherdsOnly: cells (l, m) = B_l(m) for l = 1..lmax; when adj is given the
// l = 0 row is the adjoint and the window extends down to -d.
// Conjecture: R_l = B_l + B_{l+1} shifted by the null-root degree, R_0 = adj + shifted B_1,
// negative levels by reflection; the window is 1-2d .. lmax.
BiGradedContent assemble_content(const GlGrading& g, const BorcherdsLevels& levels, const MSeries* adj,
                                 AssemblyMode mode, int lmax);

struct ColumnFit {
    int d = 0;
    int lmin = 0, lmax = 0, max_degree = 0;
    std::map<Cell, Rep> tops;
    std::map<Cell, Rep> leftover;  // negative residues (deficits), signed
    std::vector<Cell> surplus;     // cells with negative input content
    std::vector<Cell> boundary_tops;

    bool interior(int l) const { return l >= lmin + d; }
    Rep top(int l, int m) const;
    // sum over tops of r (x) Lambda^p placed at (l-p, m), restricted to the window
    BiGradedContent rebuild() const;
    bool clean() const;  // no interior deficits and no surplus
};

ColumnFit column_fit(const BiGradedContent& content);

struct Extra {
    int l = 0, m = 0;
    Rep module;
};

struct ExtrasReport {
    std::vector<Extra> extras;
    std::vector<Cell> surplus;
    bool ok() const { return surplus.empty(); }
};

ExtrasReport detect_extras(const BiGradedContent& b_only);

struct CheckReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
    int checked = 0;
    nlohmann::json to_json() const;
};

CheckReport verify_conjecture(const BiGradedContent& conjecture_content, ColumnFit* fit_out = nullptr);
// Mirror (l, m) -> (1-n-l, mu-m) with reversed labels and charge d - q.
CheckReport check_reflection(const BiGradedContent& content, const GlGrading& g);
// Free Lie superalgebra on the (r, 1) cell along l = r m.
CheckReport check_free_diagonal(const BiGradedContent& content, int r);
// Lowest tops at l = d - n + 1 equal the adjoint grade m - mu.
CheckReport check_column_tops(const ColumnFit& fit, const MSeries& adj, const GlGrading& g);

// Graded pieces of the free Lie (super)algebra on V; odd generators if odd.
std::vector<Rep> free_lie_pieces(const Rep& v, int max_n, bool odd);

}  // namespace thl
