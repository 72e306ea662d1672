#ifndef SKEWIND_ERROR_HPP_
#define SKEWIND_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace skewind {

  enum class ErrorCode {
    malformed_input,
    bound_exceeded,
    signature_mismatch,
    undefined_composition,
    malformed_system,
    axiom_violation,
    skeleton_not_closed,
    composition_ambiguity,
    action_invalid,
    roundtrip_failure,
  };

  //! Name used in reports and C API messages.
  char const* to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace skewind

#endif  // SKEWIND_ERROR_HPP_
