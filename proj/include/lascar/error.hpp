#ifndef LASCAR_ERROR_HPP_
#define LASCAR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lascar {

enum class ErrorKind {
  backend_mismatch,
  insufficient_window,
  arity,
  precondition,
  size_bound,
  no_support,
  non_uniqueness,
  inapplicable,
  window_overflow,
  cap_exceeded,
  not_an_isomorphism,
  bad_input,
};

const char* to_string(ErrorKind k);

class LascarError : public std::runtime_error {
public:
  LascarError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace lascar

#endif  // LASCAR_ERROR_HPP_
