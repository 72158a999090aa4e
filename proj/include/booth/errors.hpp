#pragma once

#include <stdexcept>
#include <string>

namespace booth {

// Domain error that remembers which parameter was out of range, so the CLI
// can name it in structured error output.
class domain_error : public std::domain_error {
 public:
  domain_error(std::string parameter, const std::string& message)
      : std::domain_error(message), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

}  // namespace booth
