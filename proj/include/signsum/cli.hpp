#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "signsum/counting.hpp"
#include "signsum/quadrature.hpp"

namespace signsum {

// Everything a config file may set; command-line flags override.
struct CliConfig {
  int enumeration_cap = kDefaultEnumerationCap;
  QuadratureConfig quadrature;
  int bench_max_n = 12;
  int bench_reps = 3;
  int bench_max_coeff = 9;
};

// Parses a key = value config file ('#' starts a comment). Unknown keys
// are rejected.
CliConfig load_config_file(const std::string& path);

// Full command dispatch; args exclude the program name. Returns the
// process exit code: 0 ok, 2 parse/usage, 3 precondition, 4 resource
// limit, 5 cross-engine mismatch or verification failure, 1 internal.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace signsum
