#pragma once

#include <stdexcept>
#include <string>

namespace primaut {

// Exit-code contract used by the CLI: 0 success, 1 claims-mismatch,
// 2 input error, 3 resource limit, 4 undecided at maximum precision.
enum class ErrorKind { input = 2, limit = 3, undecided = 4 };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

class LimitError : public Error {
public:
  explicit LimitError(const std::string& what) : Error(ErrorKind::limit, what) {}
};

class UndecidedError : public Error {
public:
  explicit UndecidedError(const std::string& what)
      : Error(ErrorKind::undecided, what) {}
};

}  // namespace primaut
