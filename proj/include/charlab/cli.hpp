#pragma once

#include <string>
#include <vector>

namespace charlab {

// Full command-line entry point.  Returns the process exit code:
//   0 success, 1 verification failure, 2 insufficient precision, 3 usage error.
int run_cli(const std::vector<std::string>& args);

// Weight-label round trip used by the CLI surface.
std::vector<long> parse_weight_labels(const std::string& s, int rank);
std::string format_weight_labels(const std::vector<long>& labels);

}  // namespace charlab
