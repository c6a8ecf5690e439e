#ifndef HSC_ERROR_HPP
#define HSC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsc {

// Failure categories surfaced to callers. The names mirror the strings used
// in thrown messages and in the CLI's stderr output.
enum class Errc {
  ParseError,         // malformed input text
  RangeError,         // index or residue out of range
  FieldError,         // bad field spec or cross-field operation
  DimMismatch,        // incompatible map dimensions
  SingularAntipode,   // antipode missing or not invertible where required
  BaseNotTensorSquare,// functor G applied over an untagged base algebra
  ConventionMismatch, // self-validation of a pinned convention failed
  Usage,              // bad command line
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace hsc

#endif
