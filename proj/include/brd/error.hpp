#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace brd {

// Domain error carrying a stable case name (the name is part of the CLI
// contract; messages are free-form).
class Error : public std::runtime_error {
public:
  Error(std::string case_name, const std::string& detail)
      : std::runtime_error(case_name + ": " + detail),
        case_name_(std::move(case_name)) {}

  const std::string& case_name() const { return case_name_; }

private:
  std::string case_name_;
};

[[noreturn]] inline void fail(const std::string& case_name,
                              const std::string& detail) {
  throw Error(case_name, detail);
}

}  // namespace brd
