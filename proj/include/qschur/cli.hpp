#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qschur {

/// Entry point behind the qschur binary. Exit codes: 0 all requested checks
/// passed (or output produced), 1 some verification found a counterexample,
/// 2 usage or parse errors (usage text on err).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qschur
