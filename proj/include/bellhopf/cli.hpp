#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bellhopf::cli {

/// Runs one command; args exclude the program name. Returns 0 on success,
/// 1 when a requested check fails and 2 on a usage or input error (with a
/// diagnostic on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellhopf::cli
