#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glmfab {

// Rectangular numeric table parsed from CSV: header row required, comma
// separator, '.' decimal point, scientific notation accepted, no quoting.
// Parse errors carry 1-based row/column coordinates.
struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  // one vector per column

  std::size_t nrows() const { return data.empty() ? 0 : data[0].size(); }
  bool has_column(const std::string& name) const;
  const std::vector<double>& column(const std::string& name) const;
};

Dataset parse_csv(std::istream& in);
Dataset load_csv(const std::string& path);

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& data);

}  // namespace glmfab
