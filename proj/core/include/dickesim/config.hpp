#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dickesim {

// Flat key = value run configuration.  Precedence is defaults < file <
// command-line flags; the CLI applies overrides in that order.
class RunConfig {
 public:
  void set(const std::string& key, const std::string& value) { kv_[key] = value; }
  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<long long> get_int_list(const std::string& key,
                                      const std::vector<long long>& fallback) const;

  // Parses `key = value` lines; '#' starts a comment, blank lines skipped.
  void load_file(const std::string& path);

  // Sorted `key = value` echo for provenance headers.
  std::vector<std::string> echo() const;

 private:
  std::map<std::string, std::string> kv_;
};

// Thrown on unparsable files or malformed values; the CLI maps it to
// exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dickesim
