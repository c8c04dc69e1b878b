#pragma once

#include <stdexcept>
#include <string>

namespace topo {

// Rejections from library operations (violated preconditions, malformed
// structures). The CLI maps these to exit status 1 with a machine-readable
// error object; malformed input files map to status 2.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace topo
