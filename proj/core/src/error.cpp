#include "regsg/error.hpp"

namespace regsg {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::BadIndex:
        return "BadIndex";
      case ErrorKind::NotAssociative:
        return "NotAssociative";
      case ErrorKind::BadMap:
        return "BadMap";
      case ErrorKind::NotRegular:
        return "NotRegular";
      case ErrorKind::NotAnEPath:
        return "NotAnEPath";
      case ErrorKind::NotComposable:
        return "NotComposable";
      case ErrorKind::NotBelow:
        return "NotBelow";
      case ErrorKind::NotEpi:
        return "NotEpi";
      case ErrorKind::NoFactorization:
        return "NoFactorization";
      case ErrorKind::EmptySandwich:
        return "EmptySandwich";
      case ErrorKind::NotConnected:
        return "NotConnected";
      case ErrorKind::NotAFunctor:
        return "NotAFunctor";
      case ErrorKind::Parse:
        return "ParseError";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

}  // namespace regsg
