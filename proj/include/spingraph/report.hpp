#pragma once

#include <string>
#include <utility>
#include <vector>

namespace spingraph {

// 17 significant digits, enough for exact double round-trip.
std::string format_number(double v);
std::string format_integer(long v);

// One report cell: pre-formatted text plus whether it is numeric (controls
// quoting in the structured output and alignment in tables).
struct Cell {
  std::string text;
  bool numeric = false;
};

Cell text_cell(const std::string& s);
Cell num_cell(double v);
Cell int_cell(long v);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Command output: echoed inputs and summary values in `meta` (insertion
// order preserved), result tables, warnings.  Rendering is a pure function of
// the content, so a fixed seed gives byte-identical output.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<Table> tables;
  std::vector<std::string> warnings;

  void add_meta(const std::string& key, Cell value);
  std::string render_table() const;
  std::string render_json() const;
};

}  // namespace spingraph
