#include "fusionkit/errors.hpp"

namespace fusionkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::OrderLimit: return "OrderLimit";
    case ErrorKind::NotInSubgroup: return "NotInSubgroup";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotNonnegative: return "NotNonnegative";
    case ErrorKind::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorKind::NoPositiveSolution: return "NoPositiveSolution";
    case ErrorKind::HaarViolation: return "HaarViolation";
    case ErrorKind::NonIntegralDimensions: return "NonIntegralDimensions";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace fusionkit
