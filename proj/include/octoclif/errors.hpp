#pragma once

#include <stdexcept>
#include <string>

namespace octoclif {

/// Base for every kernel failure. `kind()` is the stable machine-readable tag
/// used in CLI diagnostics.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct SingularError : AlgebraError {
  explicit SingularError(const std::string& what) : AlgebraError("Singular", what) {}
};

struct OneSidedOnlyError : AlgebraError {
  explicit OneSidedOnlyError(const std::string& what) : AlgebraError("OneSidedOnly", what) {}
};

struct NotOnS7Error : AlgebraError {
  explicit NotOnS7Error(const std::string& what) : AlgebraError("NotOnS7", what) {}
};

struct DegenerateError : AlgebraError {
  explicit DegenerateError(const std::string& what) : AlgebraError("Degenerate", what) {}
};

struct TypeMismatchError : AlgebraError {
  explicit TypeMismatchError(const std::string& what) : AlgebraError("TypeMismatch", what) {}
};

}  // namespace octoclif
