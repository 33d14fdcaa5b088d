#include "thl/pipeline.hpp"

#include "thl/rootmult.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thl {

OutputFormat parse_format(const std::string& s)
{
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "json")
        return OutputFormat::Json;
    if (s == "markdown" || s == "md")
        return OutputFormat::Markdown;
    throw std::invalid_argument("unknown output format: " + s);
}

ScanResult weyl_scan(const GlGrading& g, int node, int ell, int max_degree)
{
    if (ell < 0)
        throw std::invalid_argument("--ell must be non-negative");
    if (max_degree < 0)
        throw std::invalid_argument("--max-degree must be non-negative");
    if (!g.spec.has_node(node) || !g.spec.is_bosonic(node))
        throw std::invalid_argument("grading node " + std::to_string(node) + " is not a node of " + g.name);
    ScanResult s;
    s.grading = g;
    s.node = node;
    s.ell = ell;
    s.max_degree = max_degree;
    s.rows = enumerate_gl_dominant(g.spec, g.level_weight(ell), node, max_degree);
    return s;
}

namespace {

std::string tuple_string(const std::vector<long long>& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

std::string render(const ScanResult& s, OutputFormat f)
{
    std::ostringstream out;
    std::vector<long long> lambda = s.grading.level_weight(s.ell);
    switch (f) {
    case OutputFormat::Json: {
        nlohmann::json rows = nlohmann::json::array();
        for (auto& r : s.rows)
            rows.push_back({{"word", r.word.str()}, {"image", r.image}, {"degree", r.degree}});
        nlohmann::json j = {{"schema", kReportSchema},
                            {"command", "weyl-scan"},
                            {"algebra", s.grading.name},
                            {"nodes", s.grading.spec.nodes},
                            {"grading_node", s.node},
                            {"lambda", lambda},
                            {"max_degree", s.max_degree},
                            {"rows", rows}};
        out << j.dump(2) << "\n";
        break;
    }
    case OutputFormat::Csv:
        out << "word,image,degree\n";
        for (auto& r : s.rows)
            out << r.word.str() << "," << csv_quote(tuple_string(r.image)) << "," << r.degree << "\n";
        break;
    case OutputFormat::Markdown: {
        std::vector<long long> ids(s.grading.spec.nodes.begin(), s.grading.spec.nodes.end());
        out << "| Weyl group element | shifted image of " << tuple_string(lambda) << " | degree |\n";
        out << "|---|---|---|\n";
        for (auto& r : s.rows)
            out << "| " << r.word.str() << " | " << tuple_string(r.image) << " | " << r.degree << " |\n";
        out << "\nlabels on nodes " << tuple_string(ids) << "\n";
        break;
    }
    }
    return out.str();
}

AssemblyMode default_mode(const GlGrading& g)
{
    int e = g.slope * g.mu + 1;
    return g.n == 2 && g.mu > 0 && e % g.d == 0 ? AssemblyMode::Conjecture : AssemblyMode::BorcherdsOnly;
}

ColumnsResult run_columns(const GlGrading& g, int max_level, int max_degree, AssemblyMode mode,
                          const ResultCache* cache)
{
    if (max_level < 1)
        throw std::invalid_argument("--max-level must be at least 1");
    if (max_degree < 0)
        throw std::invalid_argument("--max-degree must be non-negative");
    ColumnsResult c;
    c.grading = g;
    c.mode = mode;
    int need = mode == AssemblyMode::Conjecture ? max_level + 1 : max_level;
    BorcherdsLevels levels = compute_levels(g, need, max_degree, cache);
    c.adjoint = adjoint_gl_grading(g, max_degree);
    c.content = assemble_content(g, levels, &c.adjoint, mode, max_level);
    if (auto bad = c.content.charge_law_violation())
        throw std::logic_error("charge law violated at (" + std::to_string(bad->first) + "," +
                               std::to_string(bad->second) + ")");
    c.fit = column_fit(c.content);
    return c;
}

nlohmann::json rep_report(const Rep& r)
{
    nlohmann::json a = nlohmann::json::array();
    for (auto& [x, v] : r.sorted())
        a.push_back({{"labels", x.labels()}, {"charge", x.charge()}, {"multiplicity", v.str()}});
    return a;
}

std::string render(const ColumnsResult& c, OutputFormat f)
{
    const ColumnFit& fit = c.fit;
    int bottom = c.mode == AssemblyMode::Conjecture ? 1 : 0;
    bottom = std::max(bottom, fit.lmin);
    std::ostringstream out;
    switch (f) {
    case OutputFormat::Json: {
        auto cells = [](const std::map<Cell, Rep>& m) {
            nlohmann::json a = nlohmann::json::array();
            for (auto& [cell, r] : m)
                a.push_back({{"level", cell.first}, {"degree", cell.second}, {"module", rep_report(r)}});
            return a;
        };
        nlohmann::json deficits = nlohmann::json::array();
        for (auto& [cell, r] : fit.leftover)
            if (fit.interior(cell.first))
                deficits.push_back({{"level", cell.first}, {"degree", cell.second}, {"module", rep_report(-r)}});
        nlohmann::json surplus = nlohmann::json::array();
        for (auto& cell : fit.surplus)
            surplus.push_back({cell.first, cell.second});
        nlohmann::json j = {{"schema", kReportSchema},
                            {"command", "columns"},
                            {"algebra", c.grading.name},
                            {"mode", c.mode == AssemblyMode::Conjecture ? "conjecture" : "borcherds-only"},
                            {"window",
                             {{"min_level", fit.lmin}, {"max_level", fit.lmax}, {"max_degree", fit.max_degree}}},
                            {"tops", cells(fit.tops)},
                            {"deficits", deficits},
                            {"surplus", surplus}};
        out << j.dump(2) << "\n";
        break;
    }
    case OutputFormat::Csv:
        out << "level,degree,multiplicity,labels,charge\n";
        for (int l = fit.lmax; l >= bottom; --l)
            for (int m = 0; m <= fit.max_degree; ++m)
                for (auto& [x, v] : fit.top(l, m).sorted())
                    out << l << "," << m << "," << v.str() << "," << csv_quote(x.label_string()) << "," << x.charge() << "\n";
        break;
    case OutputFormat::Markdown: {
        out << "| l \\ m |";
        for (int m = 0; m <= fit.max_degree; ++m)
            out << " " << m << " |";
        out << "\n|---|";
        for (int m = 0; m <= fit.max_degree; ++m)
            out << "---|";
        out << "\n";
        for (int l = fit.lmax; l >= bottom; --l) {
            out << "| " << l << " |";
            for (int m = 0; m <= fit.max_degree; ++m)
                out << " " << fit.top(l, m).str() << " |";
            out << "\n";
        }
        bool header = false;
        for (auto& [cell, r] : fit.leftover) {
            if (!fit.interior(cell.first))
                continue;
            if (!header)
                out << "\ndeficits (level, degree): module\n";
            header = true;
            out << "(" << cell.first << ", " << cell.second << "): " << (-r).str() << "\n";
        }
        break;
    }
    }
    return out.str();
}

bool VerifyResult::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
}

nlohmann::json VerifyResult::to_json() const
{
    nlohmann::json j = {{"schema", kReportSchema}, {"pass", pass()}, {"checks", nlohmann::json::array()}};
    for (auto& c : checks)
        j["checks"].push_back(c.to_json());
    if (!extras.empty() || std::any_of(checks.begin(), checks.end(), [](auto& c) { return c.name == "extras"; })) {
        j["extras"] = nlohmann::json::array();
        for (auto& e : extras)
            j["extras"].push_back({{"level", e.l}, {"degree", e.m}, {"module", rep_report(e.module)}});
    }
    return j;
}

VerifyResult run_checks(const GlGrading& g, int max_level, int max_degree, const std::vector<std::string>& names,
                        const ResultCache* cache)
{
    static const std::set<std::string> known{"extras", "conjecture", "reflection", "diagonal", "tops"};
    bool need_conjecture = false, need_b_only = false;
    for (auto& n : names) {
        if (!known.count(n))
            throw std::invalid_argument("unknown check: " + n);
        if (n == "extras")
            need_b_only = true;
        else
            need_conjecture = true;
        if (n == "diagonal" && g.series != BaseSeries::A)
            throw std::invalid_argument("the free-diagonal check applies to the A series only");
    }
    if (need_conjecture && default_mode(g) != AssemblyMode::Conjecture)
        throw std::invalid_argument("conjecture-based checks need a doubly extended algebra, not " + g.name);

    VerifyResult res;
    std::optional<ColumnsResult> conj, b_only;
    if (need_conjecture)
        conj = run_columns(g, max_level, max_degree, AssemblyMode::Conjecture, cache);
    if (need_b_only)
        b_only = run_columns(g, max_level, max_degree, AssemblyMode::BorcherdsOnly, cache);
    for (auto& n : names) {
        if (n == "extras") {
            ExtrasReport ex = detect_extras(b_only->content);
            CheckReport c;
            c.name = "extras";
            c.checked = int(b_only->content.cells.size());
            for (auto& cell : ex.surplus) {
                c.pass = false;
                c.failures.push_back("negative content at (" + std::to_string(cell.first) + "," +
                                     std::to_string(cell.second) + ")");
            }
            res.extras = ex.extras;
            res.checks.push_back(c);
        } else if (n == "conjecture") {
            res.checks.push_back(verify_conjecture(conj->content));
        } else if (n == "reflection") {
            res.checks.push_back(check_reflection(conj->content, g));
        } else if (n == "diagonal") {
            res.checks.push_back(check_free_diagonal(conj->content, g.r));
        } else if (n == "tops") {
            res.checks.push_back(check_column_tops(conj->fit, conj->adjoint, g));
        }
    }
    return res;
}

}  // namespace thl
