#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wgof/sample.hpp"

namespace wgof {

/// A parsed dataset plus where it came from and what the parser did.
struct InputDataset {
  Sample values;
  std::string source;    // file path or builtin name
  int parsed = 0;        // numbers read
  int skipped_lines = 0; // blank or comment-only lines
};

/// Names of the bundled failure-stress datasets of single carbon fibers
/// (gauge lengths 1, 10, 20 and 50 mm): "fibers-1mm", "fibers-10mm",
/// "fibers-20mm", "fibers-50mm".
const std::vector<std::string>& builtin_dataset_names();

bool is_builtin_dataset(const std::string& name);

/// Loads a builtin by name, otherwise parses the file at the given path:
/// whitespace/comma/newline separated decimal literals, blank lines and
/// lines starting with '#' skipped and counted. Any non-positive value is
/// rejected.
InputDataset ingest(const std::string& path_or_builtin);

/// Writes one observation per line with 17 significant digits, which
/// round-trips IEEE doubles exactly.
void write_sample(const Sample& sample, std::ostream& os);

/// The write_sample output as a string; this is the canonical form whose
/// SHA-256 pins the builtin datasets.
std::string canonical_serialization(const Sample& sample);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace wgof
