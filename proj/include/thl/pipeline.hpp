#pragma once

#include "thl/cache.hpp"
#include "thl/tha.hpp"
#include "thl/weyl.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace thl {

constexpr int kReportSchema = 1;

enum class OutputFormat { Csv, Json, Markdown };

OutputFormat parse_format(const std::string& s);

struct ScanResult {
    GlGrading grading;
    int node = 0;
    int ell = 0;
    int max_degree = 0;
    std::vector<ShiftedImage> rows;
};

// lambda = ell times the fundamental weight of the lambda node
ScanResult weyl_scan(const GlGrading& g, int node, int ell, int max_degree);
std::string render(const ScanResult& s, OutputFormat f);

struct ColumnsResult {
    GlGrading grading;
    AssemblyMode mode = AssemblyMode::Conjecture;
    MSeries adjoint;
    BiGradedContent content;
    ColumnFit fit;
};

// Conjecture mode needs a doubly extended algebra; BorcherdsOnly includes the level-0 adjoint row.
AssemblyMode default_mode(const GlGrading& g);
ColumnsResult run_columns(const GlGrading& g, int max_level, int max_degree, AssemblyMode mode,
                          const ResultCache* cache);
std::string render(const ColumnsResult& c, OutputFormat f);

nlohmann::json rep_report(const Rep& r);

struct VerifyResult {
    std::vector<CheckReport> checks;
    std::vector<Extra> extras;
    bool pass() const;
    nlohmann::json to_json() const;
};

// names: extras, conjecture, reflection, diagonal, tops
VerifyResult run_checks(const GlGrading& g, int max_level, int max_degree, const std::vector<std::string>& names,
                        const ResultCache* cache);

}  // namespace thl
