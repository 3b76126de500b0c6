#pragma once

#include <stdexcept>
#include <string>

namespace csc {

enum class ErrorCode {
  CollinearInput,
  NotStrictlyConvex,
  NotParallelogram,
  MissingLabels,
  TooFewPoints,
  InvalidArgument,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace csc
