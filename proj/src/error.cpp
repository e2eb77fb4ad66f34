#include "hypex/error.hpp"

namespace hypex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kMalformedDataset: return "malformed_dataset";
    case ErrorCode::kMalformedLine: return "malformed_line";
    case ErrorCode::kEmptyHypergraph: return "empty_hypergraph";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kResourceLimit: return "resource_limit";
    case ErrorCode::kEmptyPositives: return "empty_positives";
    case ErrorCode::kAssembly: return "assembly_error";
    case ErrorCode::kSplit: return "split_error";
    case ErrorCode::kUndefinedMetric: return "undefined_metric";
    case ErrorCode::kComputation: return "computation_error";
    case ErrorCode::kIo: return "io_error";
    case ErrorCode::kConfig: return "config_error";
  }
  return "unknown";
}

}  // namespace hypex
