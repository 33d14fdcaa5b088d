#include "tables.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace thl::tables {

std::vector<std::vector<std::string>> load_rows(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream s(line);
        std::vector<std::string> row;
        for (std::string tok; s >> tok;)
            row.push_back(tok);
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::vector<int> split_ints(const std::string& s)
{
    std::vector<int> v;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');)
        v.push_back(std::stoi(tok));
    return v;
}

}  // namespace

ColumnTable load_columns(const std::string& path)
{
    ColumnTable t;
    for (auto& row : load_rows(path)) {
        if (row.size() != 4)
            throw std::runtime_error("malformed row in " + path);
        t[{std::stoi(row[0]), std::stoi(row[1])}][split_ints(row[3])] += BigInt(row[2]);
    }
    return t;
}

std::string Mismatch::str() const
{
    std::string l = "(";
    for (size_t i = 0; i < labels.size(); ++i)
        l += (i ? "," : "") + std::to_string(labels[i]);
    l += ")";
    return "(" + std::to_string(cell.first) + "," + std::to_string(cell.second) + ") " + l + ": table " +
           expected.str() + ", computed " + found.str();
}

std::vector<Mismatch> compare_tops(const ColumnFit& fit, const ColumnTable& t, int max_level, int lo, int hi,
                                   int* terms)
{
    std::vector<Mismatch> out;
    int count = 0;
    for (int l = 1; l <= max_level; ++l)
        for (int m = lo; m <= hi; ++m) {
            std::map<std::vector<int>, BigInt> got;
            Rep top = fit.top(l, m);
            for (auto& [x, v] : top.terms())
                got[x.labels()] += v;
            auto it = t.find({l, m});
            std::map<std::vector<int>, BigInt> want = it == t.end() ? decltype(want){} : it->second;
            count += int(want.size());
            for (auto& [lab, v] : want)
                if (got[lab] != v)
                    out.push_back({{l, m}, lab, v, got[lab]});
            for (auto& [lab, v] : got)
                if (!want.count(lab) && v != 0)
                    out.push_back({{l, m}, lab, 0, v});
        }
    if (terms)
        *terms = count;
    return out;
}

}  // namespace thl::tables
