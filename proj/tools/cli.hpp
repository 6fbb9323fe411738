#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace misere::cli {

// Exit statuses; each error class also has its own diagnostic prefix.
enum Status : int {
  ok = 0,
  usage_error = 1,
  parse_failure = 2,
  infeasible = 3,
  precondition = 4,
  internal_failure = 5,
  io_failure = 6,
  check_failed = 7,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace misere::cli
