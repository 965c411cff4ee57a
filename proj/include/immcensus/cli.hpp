#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "immcensus/census.hpp"

namespace immcensus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::optional<Method> method;
  std::optional<Kind> kind;
  int n_lo = 1;
  int n_hi = 1;
  std::optional<int> genus;
  bool frobenius = false;
  Filters filters;
  bool allow_slow = false;
  bool theorem4 = false;
  bool sumrules = false;
  unsigned jobs = 1;
  std::size_t memory_mb = 2048;
  std::string format = "csv";
  std::string out;   // file (count/list) or directory (export-diagrams); empty = stdout
  std::string load;  // catalog to recount instead of enumerating

  CensusOptions census_options() const;
};

// "5" or "1..9"
std::pair<int, int> parse_n_range(const std::string& text);

int cmd_count(const RunConfig& cfg, std::ostream& out);
int cmd_list(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_export_diagrams(const RunConfig& cfg, std::ostream& out);

// A catalog file is one JSON object per line: a header line
// {"catalog": label, "n_lo", "n_hi", "genus", "max_genus": [...]} then one
// record per class.  Recounting it prints exactly what cmd_count prints for
// the configuration that produced it.
std::string recount_catalog(const std::string& path, const std::string& format);

// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace immcensus::cli
