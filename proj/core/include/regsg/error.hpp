#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regsg {

  enum class ErrorKind {
    BadIndex,
    NotAssociative,
    BadMap,
    NotRegular,
    NotAnEPath,
    NotComposable,
    NotBelow,
    NotEpi,
    NoFactorization,
    EmptySandwich,
    NotConnected,
    NotAFunctor,
    Parse,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every failure raised by the library carries one of the kinds above. The
  // message starts with the kind name so that command line output stays
  // greppable.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& detail);

    ErrorKind kind() const noexcept {
      return kind_;
    }

   private:
    ErrorKind kind_;
  };

}  // namespace regsg
