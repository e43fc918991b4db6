#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entloc {

// Small numeric result table; the CLI renders it as CSV or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  // Header then rows; doubles printed with enough digits to round-trip.
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;
};

}  // namespace entloc
