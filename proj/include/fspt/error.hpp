#pragma once

#include <stdexcept>
#include <string>

namespace fspt {

// Domain error. name() is the stable identifier the CLI prints
// (NotAssociative, CocycleIdentityFails, ...); what() adds detail.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace fspt
