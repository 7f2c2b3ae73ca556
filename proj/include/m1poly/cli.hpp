#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace m1poly {

inline constexpr const char* kCliVersion = "0.1.0";

// Runs one CLI command. `args` is argv without the program name. Reports go
// to `out` (or the --out file), diagnostics to `err`. Returns the process
// exit code: 0 all checks passed, 1 a residual check failed, 2 usage or
// parameter error. Given identical arguments the emitted report is
// byte-identical between runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace m1poly
