#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace filterless {

enum class ErrorKind {
  // tree_core
  kDisconnectedTree,
  kDuplicateEdge,
  kSelfLoop,
  kWrongEdgeCount,
  kVertexOutOfRange,
  // instance
  kInvalidRequest,
  kEmptyRequestSet,
  // algorithms
  kEmptyInstance,
  kPartitionNotCliques,
  kNotConverging,
  kNotDiverging,
  kNotUnimodal,
  kNotNicePair,
  kReductionRequired,
  kInternalContradiction,
  kBudgetTooSmall,
  kTooLarge,
  // io / cli
  kParseError,
  kCountMismatch,
  kInvalidVertex,
  kZeroLengthRequest,
  kBadParams,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace filterless
