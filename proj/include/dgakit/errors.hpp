#pragma once

#include <stdexcept>
#include <string>

namespace dgakit {

// Every domain failure carries the name of the condition that was violated
// (e.g. "NonSquareZero", "NotClosed") so that callers and the CLI can report
// it without string matching on the message.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)), detail_(detail) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& detail) {
  throw DomainError(kind, detail);
}

}  // namespace dgakit
