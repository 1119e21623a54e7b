#include "dickesim/csv.hpp"

#include <cstdio>
#include <stdexcept>

#include "dickesim/version.hpp"

namespace dickesim {

CsvWriter::CsvWriter(const std::string& path) : out_(path) {
  if (!out_) throw std::runtime_error("csv: cannot open " + path + " for writing");
}

void CsvWriter::provenance(const std::string& command, const RunConfig& cfg) {
  out_ << "# dickesim " << version_string << "\n";
  out_ << "# command = " << command << "\n";
  for (const auto& line : cfg.echo()) out_ << "# " << line << "\n";
}

void CsvWriter::comment(const std::string& line) { out_ << "# " << line << "\n"; }

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
  }
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
  }
}

void CsvWriter::raw_line(const std::string& line) { out_ << line << "\n"; }

std::string CsvWriter::num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace dickesim
