#include "thl/pipeline.hpp"
#include "thl/virasoro.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

using namespace thl;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kConfig = 2, kInternal = 3, kSurplus = 4 };

struct Config {
    std::string algebra = "e10";
    std::string format = "markdown";
    std::string cache_dir;
    bool no_cache = false;
    int workers = 0;
    std::optional<int> node;
    int ell = 1;
    std::optional<int> max_degree;
    std::optional<int> max_level;
    std::string mode;
    std::vector<std::string> checks;
    int order = 12;
};

int default_level(const GlGrading& g)
{
    return g.series == BaseSeries::E8 ? 22 : 12;
}

int default_degree(const GlGrading& g)
{
    return g.series == BaseSeries::E8 ? 7 : 10;
}

ResultCache open_cache(const Config& c)
{
    if (c.no_cache)
        return ResultCache();
    return ResultCache(c.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(c.cache_dir));
}

std::vector<std::string> expand_checks(const GlGrading& g, const std::vector<std::string>& given)
{
    std::vector<std::string> out;
    if (given.empty()) {
        if (default_mode(g) == AssemblyMode::Conjecture) {
            out = {"conjecture", "reflection", "tops"};
            if (g.series == BaseSeries::A)
                out.push_back("diagonal");
        } else {
            out = {"extras"};
        }
        return out;
    }
    for (auto& c : given)
        if (c != "none")
            out.push_back(c);
    return out;
}

std::string render_verify(const VerifyResult& v, OutputFormat f)
{
    if (f == OutputFormat::Json)
        return v.to_json().dump(2) + "\n";
    std::string s;
    if (f == OutputFormat::Csv) {
        s = "check,pass,checked,failures\n";
        for (auto& c : v.checks)
            s += c.name + "," + (c.pass ? "true" : "false") + "," + std::to_string(c.checked) + "," +
                 std::to_string(c.failures.size()) + "\n";
        for (auto& e : v.extras)
            s += "extra (" + std::to_string(e.l) + " " + std::to_string(e.m) + ") " + e.module.str() + ",,,\n";
        return s;
    }
    s = "| check | result | cells | failures |\n|---|---|---|---|\n";
    for (auto& c : v.checks)
        s += "| " + c.name + " | " + (c.pass ? "pass" : "FAIL") + " | " + std::to_string(c.checked) + " | " +
             std::to_string(c.failures.size()) + " |\n";
    for (auto& c : v.checks)
        for (auto& fmsg : c.failures)
            s += "\n" + c.name + ": " + fmsg;
    if (!v.extras.empty()) {
        s += "\nextras (level, degree): module\n";
        for (auto& e : v.extras)
            s += "(" + std::to_string(e.l) + ", " + std::to_string(e.m) + "): " + e.module.str() + "\n";
    }
    return s;
}

int run(CLI::App& app, const Config& c)
{
    OutputFormat fmt = parse_format(c.format);
    if (c.workers < 0)
        throw std::invalid_argument("--workers must be non-negative");
    if (app.got_subcommand("virasoro")) {
        if (c.order < 0)
            throw std::invalid_argument("--order must be non-negative");
        QSeries chi = coset_character(c.order);
        ShiftReport rep = check_nonneg_shift(chi);
        if (fmt == OutputFormat::Json) {
            nlohmann::json j = {{"schema", kReportSchema},
                                {"command", "virasoro"},
                                {"order", c.order},
                                {"character", chi.csv()},
                                {"shift", rep.difference.csv()},
                                {"nonnegative_shift", rep.pass()},
                                {"non_decreasing", !rep.first_decrease}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << chi.csv() << "\n" << rep.difference.csv() << "\n";
        }
        return rep.pass() ? kOk : kCheckFailed;
    }

    GlGrading g = grading_preset(c.algebra);
    ResultCache cache = open_cache(c);
    const ResultCache* cp = cache.enabled() ? &cache : nullptr;
    if (app.got_subcommand("weyl-scan")) {
        int max_degree = c.max_degree.value_or(7);
        ScanResult s = weyl_scan(g, c.node.value_or(g.grading_node), c.ell, max_degree);
        std::cout << render(s, fmt);
        return kOk;
    }
    int L = c.max_level.value_or(default_level(g));
    int P = c.max_degree.value_or(default_degree(g));
    if (app.got_subcommand("columns")) {
        AssemblyMode mode = default_mode(g);
        if (c.mode == "conjecture")
            mode = AssemblyMode::Conjecture;
        else if (c.mode == "borcherds-only")
            mode = AssemblyMode::BorcherdsOnly;
        else if (!c.mode.empty())
            throw std::invalid_argument("unknown mode: " + c.mode);
        ColumnsResult r = run_columns(g, L, P, mode, cp);
        std::cout << render(r, fmt);
        return r.fit.surplus.empty() ? kOk : kSurplus;
    }
    VerifyResult v = run_checks(g, L, P, expand_checks(g, c.checks), cp);
    std::cout << render_verify(v, fmt);
    return v.pass() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tensor hierarchy algebra level decompositions"};
    app.require_subcommand(1);
    app.fallthrough();
    Config c;
    app.add_option("--algebra", c.algebra, "e10, e9, e11, a1++, a1+, a<r>++ ...");
    app.add_option("--format", c.format, "csv, json or markdown");
    app.add_option("--cache-dir", c.cache_dir, "result cache directory (default $THL_CACHE_DIR or ~/.cache/thl)");
    app.add_flag("--no-cache", c.no_cache, "do not read or write the result cache");
    app.add_option("--workers", c.workers, "worker count; 0 picks the hardware concurrency");
    app.add_option("--max-degree", c.max_degree, "highest degree m");
    app.add_option("--max-level", c.max_level, "highest level l");

    auto* scan = app.add_subcommand("weyl-scan", "gl-dominant Weyl images of l times the lambda fundamental weight");
    scan->add_option("--node", c.node, "grading node id");
    scan->add_option("--ell", c.ell, "level l");
    auto* cols = app.add_subcommand("columns", "column tops r_{l,m}");
    cols->add_option("--mode", c.mode, "conjecture or borcherds-only");
    auto* ver = app.add_subcommand("verify", "run consistency checks");
    ver->add_option("--checks", c.checks, "extras, conjecture, reflection, diagonal, tops or none")->delimiter(',');
    auto* vir = app.add_subcommand("virasoro", "coset Virasoro character coefficients");
    vir->add_option("--order", c.order, "truncation order in q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }
    try {
        return run(app, c);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
