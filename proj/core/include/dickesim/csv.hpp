#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "dickesim/config.hpp"

namespace dickesim {

// CSV emitter with '#'-prefixed provenance comments.  Output carries
// the tool version, the invoked command, and the full config echo so a
// run can be reproduced from its own artifact.
class CsvWriter {
 public:
  CsvWriter(const std::string& path);

  void provenance(const std::string& command, const RunConfig& cfg);
  void comment(const std::string& line);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  void raw_line(const std::string& line);

  static std::string num(double v);

 private:
  std::ofstream out_;
};

}  // namespace dickesim
