#include "glmfab/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace glmfab {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
  const char* first = cell.data();
  const char* last = first + cell.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (last[-1] == ' ' || last[-1] == '\t')) --last;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw std::invalid_argument("csv: cell at row " + std::to_string(row) +
                                ", column " + std::to_string(col) +
                                " is not a finite number: '" + cell + "'");
  return value;
}

}  // namespace

bool Dataset::has_column(const std::string& name) const {
  for (const auto& c : columns)
    if (c == name) return true;
  return false;
}

const std::vector<double>& Dataset::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return data[i];
  throw std::invalid_argument("csv: no column named '" + name + "'");
}

Dataset parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("csv: empty input, header row required");

  Dataset ds;
  ds.columns = split_line(line);
  for (const auto& name : ds.columns)
    if (name.empty())
      throw std::invalid_argument("csv: empty column name in header");
  ds.data.resize(ds.columns.size());

  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_line(line);
    if (fields.size() != ds.columns.size())
      throw std::invalid_argument("csv: row " + std::to_string(row) + " has " +
                                  std::to_string(fields.size()) +
                                  " fields, expected " +
                                  std::to_string(ds.columns.size()));
    for (std::size_t c = 0; c < fields.size(); ++c)
      ds.data[c].push_back(parse_cell(fields[c], row, c + 1));
  }
  if (ds.nrows() == 0)
    throw std::invalid_argument("csv: no data rows");
  return ds;
}

Dataset load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("csv: cannot open '" + path + "'");
  return parse_csv(in);
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& data) {
  for (std::size_t c = 0; c < columns.size(); ++c)
    out << (c ? "," : "") << columns[c];
  out << "\n";
  const std::size_t nrows = data.empty() ? 0 : data[0].size();
  char buf[40];
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < data.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", data[c][r]);
      out << (c ? "," : "") << buf;
    }
    out << "\n";
  }
}

}  // namespace glmfab
