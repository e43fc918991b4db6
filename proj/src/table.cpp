#include "entloc/table.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace entloc {

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("Table::add_row: width mismatch");
  rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns.size(); ++c)
    out << (c ? "," : "") << columns[c];
  out << "\n";
  char buf[64];
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.12g", row[c]);
      out << (c ? "," : "") << buf;
    }
    out << "\n";
  }
}

std::string Table::to_csv() const {
  std::ostringstream os;
  write_csv(os);
  return os.str();
}

}  // namespace entloc
