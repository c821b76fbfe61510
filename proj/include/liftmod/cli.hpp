#pragma once

// Command-line front end. Machine-readable lines start with VERDICT:, CERT:,
// REFUTE: or THETA:; everything else is prose.
//
// Exit codes: 0 clean run (any verdict), 1 reproduce found a FAIL,
// 2 input error, 3 internal inconsistency (oracle or certificate mismatch).

#include <ostream>
#include <string>
#include <vector>

namespace liftmod {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ReproduceRow {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Every reproduction row. corrupt names a witness row whose data is
/// deliberately damaged before checking (empty for none); throws
/// Errc::InvalidArgument for a row that cannot be corrupted.
std::vector<ReproduceRow> reproduce_rows(const std::string& corrupt = {});

/// Row ids accepted by reproduce_rows' corrupt argument.
std::vector<std::string> corruptible_rows();

}  // namespace liftmod
