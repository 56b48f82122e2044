#ifndef PASCALDET_COMMANDS_HPP
#define PASCALDET_COMMANDS_HPP

#include <iostream>
#include <string>
#include <vector>

#include "pascaldet/report.hpp"

namespace pascaldet {

// CLI entry point. Emits one JSON report line per case on `out` and a human
// summary on `err`. Returns 0 when every case passes, 1 on verification
// failure, 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                std::ostream& err = std::cerr);

// The theorem-6 proof-step grid for a single n, as emitted by `proof-steps`.
std::vector<Report> proof_step_reports(long n);

} // namespace pascaldet

#endif
