#include "filterless/error.hpp"

namespace filterless {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDisconnectedTree: return "DisconnectedTree";
    case ErrorKind::kDuplicateEdge: return "DuplicateEdge";
    case ErrorKind::kSelfLoop: return "SelfLoop";
    case ErrorKind::kWrongEdgeCount: return "WrongEdgeCount";
    case ErrorKind::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::kInvalidRequest: return "InvalidRequest";
    case ErrorKind::kEmptyRequestSet: return "EmptyRequestSet";
    case ErrorKind::kEmptyInstance: return "EmptyInstance";
    case ErrorKind::kPartitionNotCliques: return "PartitionNotCliques";
    case ErrorKind::kNotConverging: return "NotConverging";
    case ErrorKind::kNotDiverging: return "NotDiverging";
    case ErrorKind::kNotUnimodal: return "NotUnimodal";
    case ErrorKind::kNotNicePair: return "NotNicePair";
    case ErrorKind::kReductionRequired: return "ReductionRequired";
    case ErrorKind::kInternalContradiction: return "InternalContradiction";
    case ErrorKind::kBudgetTooSmall: return "BudgetTooSmall";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kCountMismatch: return "CountMismatch";
    case ErrorKind::kInvalidVertex: return "InvalidVertex";
    case ErrorKind::kZeroLengthRequest: return "ZeroLengthRequest";
    case ErrorKind::kBadParams: return "BadParams";
  }
  return "Unknown";
}

}  // namespace filterless
