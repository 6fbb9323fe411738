#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace misere {

// A GameId that does not name a node of the arena it was handed to.
class MalformedReference : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An operation was called with its precondition violated (for example
// asking for a witness to G >= H when G >= H actually holds).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A request whose size exceeds a configured enumeration cap.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructed witness failed its own outcome check. Never expected; thrown
// so that a bad construction cannot pass silently.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string message,
             std::vector<std::string> expected = {});

  // 1-based character offset into the parsed text.
  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string detail_;
  std::vector<std::string> expected_;
};

}  // namespace misere
