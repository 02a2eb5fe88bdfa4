#include "fk3/tables.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace fk3 {

namespace {

using nlohmann::json;

std::vector<int> words_of(std::initializer_list<const char*> names) {
    std::vector<int> out;
    for (const char* n : names) out.push_back(parse_basis_name(n));
    return out;
}

std::string entry(const BiFunctional& f, int a, int b) { return f.at(a, b).to_string(); }

ContextPtr context_of(const BiFunctional& f) {
    for (const Poly& p : f.c)
        if (p.context()) return p.context();
    return nullptr;
}

std::string render_markdown(const BiFunctional& f, const TableLayout& layout) {
    std::ostringstream out;
    const std::size_t n = layout.blocks.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) out << "\n";
        out << "### " << layout.title;
        if (n > 1) out << " (" << k + 1 << "/" << n << ")";
        out << "\n\n|  |";
        for (int c : layout.blocks[k]) out << " " << basis_name(c) << " |";
        out << "\n|---|";
        for (std::size_t i = 0; i < layout.blocks[k].size(); ++i) out << "---|";
        out << "\n";
        for (int r : layout.rows) {
            out << "| " << basis_name(r) << " |";
            for (int c : layout.blocks[k]) out << " " << entry(f, r, c) << " |";
            out << "\n";
        }
    }
    return out.str();
}

std::string render_csv(const BiFunctional& f, const TableLayout& layout) {
    std::ostringstream out;
    out << "row,column,value\n";
    for (const auto& block : layout.blocks)
        for (int r : layout.rows)
            for (int c : block) out << basis_name(r) << "," << basis_name(c) << ",\"" << entry(f, r, c) << "\"\n";
    return out.str();
}

std::string render_json(const BiFunctional& f, const TableLayout& layout) {
    json j;
    j["title"] = layout.title;
    json params = json::array();
    if (ContextPtr ctx = context_of(f))
        for (const std::string& n : ctx->names()) params.push_back(n);
    j["parameters"] = params;
    json rows = json::array();
    for (int r : layout.rows) rows.push_back(basis_name(r));
    j["rows"] = rows;
    json blocks = json::array();
    for (const auto& block : layout.blocks) {
        json b = json::array();
        for (int c : block) b.push_back(basis_name(c));
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    json basis = json::array();
    for (int b = 0; b < kDim; ++b) basis.push_back(basis_name(b));
    j["basis"] = basis;
    json entries = json::array();
    for (int a = 0; a < kDim; ++a) {
        json row = json::array();
        for (int b = 0; b < kDim; ++b) row.push_back(entry(f, a, b));
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

}  // namespace

TableFormat parse_table_format(const std::string& name) {
    if (name == "md") return TableFormat::Markdown;
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    throw std::invalid_argument("unknown table format: " + name);
}

const std::vector<int>& display_order() {
    static const std::vector<int> order = words_of(
        {"x0", "x1", "x2", "x2x0", "x0x2", "x1x0", "x0x1", "x2x0x2", "x0x1x0", "x2x0x1", "x2x0x1x0"});
    return order;
}

TableLayout sigma_layout(RealizationKind kind, const std::string& title) {
    const std::vector<int>& all = display_order();
    const std::size_t split = kind == RealizationKind::Pointed ? 6 : 5;
    TableLayout l;
    l.title = title;
    l.rows = all;
    l.blocks.emplace_back(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(split));
    l.blocks.emplace_back(all.begin() + static_cast<std::ptrdiff_t>(split), all.end());
    return l;
}

TableLayout full_layout(const std::string& title) {
    TableLayout l;
    l.title = title;
    l.rows = display_order();
    l.blocks.push_back(display_order());
    return l;
}

std::string render_table(const BiFunctional& f, const TableLayout& layout, TableFormat format) {
    switch (format) {
        case TableFormat::Markdown: return render_markdown(f, layout);
        case TableFormat::Csv: return render_csv(f, layout);
        case TableFormat::Json: return render_json(f, layout);
    }
    throw std::logic_error("unreachable table format");
}

BiFunctional parse_table_json(const std::string& text) {
    const json j = json::parse(text);
    std::vector<std::string> names;
    for (const auto& n : j.at("parameters")) names.push_back(n.get<std::string>());
    ContextPtr ctx = names.empty() ? nullptr : make_context(names);
    std::vector<int> basis;
    for (const auto& n : j.at("basis")) basis.push_back(parse_basis_name(n.get<std::string>()));
    const json& entries = j.at("entries");
    if (basis.size() != kDim || entries.size() != kDim) throw std::invalid_argument("table json: expected 12 x 12 entries");
    BiFunctional f;
    for (int a = 0; a < kDim; ++a) {
        if (entries[a].size() != kDim) throw std::invalid_argument("table json: ragged entry row");
        for (int b = 0; b < kDim; ++b) {
            const std::string s = entries[a][b].get<std::string>();
            f.at(basis[a], basis[b]) = parse_poly(s, ctx);
        }
    }
    return f;
}

BiFunctional parse_table_csv(const std::string& text, const ContextPtr& ctx) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "row,column,value") throw std::invalid_argument("table csv: bad header");
    BiFunctional f;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) throw std::invalid_argument("table csv: bad line " + line);
        std::string value = line.substr(c2 + 1);
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        f.at(parse_basis_name(line.substr(0, c1)), parse_basis_name(line.substr(c1 + 1, c2 - c1 - 1))) =
            parse_poly(value, ctx);
    }
    return f;
}

}  // namespace fk3
