#pragma once

#include "fk3/forms.hpp"
#include "fk3/realization.hpp"

#include <string>
#include <vector>

namespace fk3 {

enum class TableFormat { Markdown, Csv, Json };

// "md", "csv" or "json"; throws std::invalid_argument otherwise.
TableFormat parse_table_format(const std::string& name);

// Positive-degree words in display order:
// x0, x1, x2, x2x0, x0x2, x1x0, x0x1, x2x0x2, x0x1x0, x2x0x1, x2x0x1x0.
const std::vector<int>& display_order();

// Rows and column blocks of a printed table.  Each block is printed as its
// own sub-table.
struct TableLayout {
    std::string title;
    std::vector<int> rows;
    std::vector<std::vector<int>> blocks;
};

// sigma tables: pointed blocks x0..x1x0 | x0x1..top, copointed x0..x0x2 | x1x0..top.
TableLayout sigma_layout(RealizationKind kind, const std::string& title);
// Single block with all eleven columns.
TableLayout full_layout(const std::string& title);

// Markdown: one pipe table per block under "### title (i/n)".
// CSV: header "row,column,value", one line per entry, blocks in order.
// JSON: title, parameters, rows, blocks and the full 12 x 12 entry matrix
// (unit row and column included) so that parsing is lossless.
std::string render_table(const BiFunctional& f, const TableLayout& layout, TableFormat format);

// Inverse of the JSON rendering; the context is rebuilt from "parameters".
BiFunctional parse_table_json(const std::string& text);
// Inverse of the CSV rendering for the entries it lists; other entries are
// zero.  Names are resolved against ctx.
BiFunctional parse_table_csv(const std::string& text, const ContextPtr& ctx);

}  // namespace fk3
