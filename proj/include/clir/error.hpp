#pragma once

#include <stdexcept>
#include <string>

namespace clir {

// Usage errors map to exit code 1, data errors to exit code 2.
enum class ErrorKind { kUsage, kData };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error data_error(const std::string& what) {
  return Error(ErrorKind::kData, what);
}

inline Error usage_error(const std::string& what) {
  return Error(ErrorKind::kUsage, what);
}

}  // namespace clir
