#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ospc {

// Subcommands: score, batch, eval, sweep-temp, gen-ocr-data,
// gen-distill-data, serve. Exit codes: 0 success, 1 usage error, 2 runtime
// failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ospc
