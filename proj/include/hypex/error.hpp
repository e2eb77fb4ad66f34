#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypex {

enum class ErrorCode {
  kParse,
  kMalformedDataset,
  kMalformedLine,
  kEmptyHypergraph,
  kOutOfRange,
  kInvalidArgument,
  kResourceLimit,
  kEmptyPositives,
  kAssembly,
  kSplit,
  kUndefinedMetric,
  kComputation,
  kIo,
  kConfig,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this exception; `code()` is the
// machine-readable part surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypex
