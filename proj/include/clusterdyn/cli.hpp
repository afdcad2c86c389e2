#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterdyn {

// Command-line front end (see tools/clusterdyn.cpp for the binary). Exposed
// as a function so the argument handling and output formats are testable
// in-process. Returns the process exit code: 0 on success / all checks
// passing, nonzero otherwise. Honors the CLUSTER_DYN_LOG environment
// variable ("debug" adds progress lines on err).
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace clusterdyn
