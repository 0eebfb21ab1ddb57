#ifndef NATDED_ERROR_H_
#define NATDED_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace natded {

// Machine-readable failure categories. The CLI prints reason() verbatim.
enum class ErrorCode {
  kType,
  kLanguage,
  kTheory,
  kShape,
  kEigenvariable,
  kClass,
  kCertificate,
  kEmptyGoal,
};

std::string_view reason_code(ErrorCode code);

// Base of every domain failure raised by the library. Parse failures are
// reported separately (see sexpr.h) since they are not judgements about
// well-formed input.
class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view reason() const { return reason_code(code_); }

 private:
  ErrorCode code_;
};

template <ErrorCode C>
class CodedError : public KernelError {
 public:
  explicit CodedError(const std::string& what) : KernelError(C, what) {}
};

using TypeError = CodedError<ErrorCode::kType>;
using LanguageError = CodedError<ErrorCode::kLanguage>;
using TheoryError = CodedError<ErrorCode::kTheory>;
using ShapeError = CodedError<ErrorCode::kShape>;
using EigenvariableError = CodedError<ErrorCode::kEigenvariable>;
using ClassError = CodedError<ErrorCode::kClass>;
using CertificateError = CodedError<ErrorCode::kCertificate>;
using EmptyGoalError = CodedError<ErrorCode::kEmptyGoal>;

}  // namespace natded

#endif  // NATDED_ERROR_H_
