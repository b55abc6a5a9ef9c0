#pragma once

#include <stdexcept>
#include <string>

namespace moco {

// Error taxonomy shared by the library and the CLI exit-code mapping:
//   validation  -> bad input (exit 1)
//   size_bound  -> computation refused because a configured bound would be
//                  exceeded (exit 2)
//   internal    -> inconsistency that signals a bug, never bad input (exit 3)
class Error : public std::runtime_error {
public:
  enum class Kind { validation, size_bound, internal };

  Error(Kind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message),
        kind_(kind),
        code_(std::move(code)) {}

  Kind kind() const { return kind_; }
  const std::string& code() const { return code_; }

private:
  Kind kind_;
  std::string code_;
};

struct SyntaxError : Error {
  explicit SyntaxError(const std::string& m) : Error(Kind::validation, "SyntaxError", m) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& m) : Error(Kind::validation, "ValidationError", m) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error(Kind::validation, "DomainError", m) {}
};

struct DegenerateSymbol : Error {
  explicit DegenerateSymbol(const std::string& m) : Error(Kind::validation, "DegenerateSymbol", m) {}
};

// A symbol passed the local checks but the mediant contraction got stuck.
struct NoMediant : Error {
  explicit NoMediant(const std::string& m) : Error(Kind::internal, "NoMediant", m) {}
};

struct SizeBoundExceeded : Error {
  explicit SizeBoundExceeded(const std::string& m) : Error(Kind::size_bound, "SizeBoundExceeded", m) {}
};

struct NotTransitive : Error {
  explicit NotTransitive(const std::string& m) : Error(Kind::validation, "NotTransitive", m) {}
};

struct NotIntegral : Error {
  explicit NotIntegral(const std::string& m) : Error(Kind::validation, "NotIntegral", m) {}
};

struct NegativeArrowCount : Error {
  explicit NegativeArrowCount(const std::string& m) : Error(Kind::internal, "NegativeArrowCount", m) {}
};

struct InsufficientTruncation : Error {
  explicit InsufficientTruncation(const std::string& m) : Error(Kind::validation, "InsufficientTruncation", m) {}
};

struct NonConvergence : Error {
  explicit NonConvergence(const std::string& m) : Error(Kind::internal, "NonConvergence", m) {}
};

struct NotSubset : Error {
  explicit NotSubset(const std::string& m) : Error(Kind::validation, "NotSubset", m) {}
};

// Dixon lift or an exact verification failed; signals a bug, never returned
// silently.
struct LiftFailure : Error {
  explicit LiftFailure(const std::string& m) : Error(Kind::internal, "LiftFailure", m) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& m) : Error(Kind::internal, "InternalError", m) {}
};

}  // namespace moco
