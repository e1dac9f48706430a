#include "goeritz/error.hpp"

namespace goeritz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OddExponent: return "OddExponent";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DiagonalPivot: return "DiagonalPivot";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::OddEuler: return "OddEuler";
    case ErrorKind::BadEdge: return "BadEdge";
    case ErrorKind::ContractLoop: return "ContractLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadArcLabels: return "BadArcLabels";
    case ErrorKind::SplitDiagram: return "SplitDiagram";
    case ErrorKind::BadNumbering: return "BadNumbering";
    case ErrorKind::NotCheckerboardColorable: return "NotCheckerboardColorable";
    case ErrorKind::BadRegion: return "BadRegion";
    case ErrorKind::PositiveGenus: return "PositiveGenus";
    case ErrorKind::NoRotation: return "NoRotation";
    case ErrorKind::BadMoveSite: return "BadMoveSite";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::TooManyCrossings: return "TooManyCrossings";
    case ErrorKind::NotAnInteger: return "NotAnInteger";
  }
  return "Unknown";
}

}  // namespace goeritz
