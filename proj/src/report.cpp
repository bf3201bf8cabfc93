#include "spingraph/report.hpp"

#include <cstdio>
#include <sstream>

namespace spingraph {

std::string format_number(double v) {
  // Normalize the two zero representations so output is reproducible.
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::string format_integer(long v) { return std::to_string(v); }

Cell text_cell(const std::string& s) { return Cell{s, false}; }
Cell num_cell(double v) { return Cell{format_number(v), true}; }
Cell int_cell(long v) { return Cell{format_integer(v), true}; }

void Report::add_meta(const std::string& key, Cell value) {
  meta.emplace_back(key, std::move(value));
}

std::string Report::render_table() const {
  std::ostringstream out;
  out << "# command: " << command << "\n";
  for (const auto& [key, value] : meta) {
    out << key << ": " << value.text << "\n";
  }
  for (const auto& table : tables) {
    out << "\n## " << table.name << "\n";
    if (table.columns.empty()) continue;
    std::vector<std::size_t> widths(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      widths[c] = table.columns[c].size();
    }
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) {
        widths[c] = std::max(widths[c], row[c].text.size());
      }
    }
    auto emit_row = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) out << "  ";
        out << cells[c];
        if (c + 1 < cells.size()) {
          out << std::string(widths[c] - cells[c].size(), ' ');
        }
      }
      out << "\n";
    };
    emit_row(table.columns);
    std::vector<std::string> rule;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      rule.push_back(std::string(widths[c], '-'));
    }
    emit_row(rule);
    for (const auto& row : table.rows) {
      std::vector<std::string> cells;
      for (const auto& cell : row) cells.push_back(cell.text);
      emit_row(cells);
    }
    if (table.rows.empty()) out << "(no rows)\n";
  }
  for (const auto& warning : warnings) {
    out << "\nwarning: " << warning << "\n";
  }
  return out.str();
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

void emit_cell(std::ostringstream& out, const Cell& cell) {
  if (cell.numeric) {
    out << cell.text;
  } else {
    out << '"' << json_escape(cell.text) << '"';
  }
}

}  // namespace

std::string Report::render_json() const {
  std::ostringstream out;
  out << "{\n";
  out << "  \"command\": \"" << json_escape(command) << "\",\n";
  out << "  \"meta\": {";
  for (std::size_t i = 0; i < meta.size(); ++i) {
    if (i > 0) out << ",";
    out << "\n    \"" << json_escape(meta[i].first) << "\": ";
    emit_cell(out, meta[i].second);
  }
  out << (meta.empty() ? "},\n" : "\n  },\n");
  out << "  \"tables\": [";
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& table = tables[t];
    if (t > 0) out << ",";
    out << "\n    {\n      \"name\": \"" << json_escape(table.name)
        << "\",\n      \"columns\": [";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c > 0) out << ", ";
      out << '"' << json_escape(table.columns[c]) << '"';
    }
    out << "],\n      \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (r > 0) out << ",";
      out << "\n        [";
      for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
        if (c > 0) out << ", ";
        emit_cell(out, table.rows[r][c]);
      }
      out << "]";
    }
    out << (table.rows.empty() ? "]\n    }" : "\n      ]\n    }");
  }
  out << (tables.empty() ? "],\n" : "\n  ],\n");
  out << "  \"warnings\": [";
  for (std::size_t w = 0; w < warnings.size(); ++w) {
    if (w > 0) out << ", ";
    out << '"' << json_escape(warnings[w]) << '"';
  }
  out << "]\n}\n";
  return out.str();
}

}  // namespace spingraph
