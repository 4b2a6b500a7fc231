#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pregame {

/// Location of a token or syntax node in a source buffer. Lines and
/// columns are 1-based; byte offsets are a half-open range.
struct Span {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

enum class ErrorKind {
  DomainTooLarge,
  InterfaceMismatch,
  EmptyChoiceSet,
  NotClosed,
  LengthMismatch,
  NonNumericOutcome,
  InvalidValue,
  LexError,
  ParseError,
  UnknownName,
  DuplicateDecl,
  InvalidDecl,
  TypeError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<Span> span = std::nullopt)
      : std::runtime_error(message), kind_(kind), span_(span) {}

  ErrorKind kind() const { return kind_; }
  const std::optional<Span>& span() const { return span_; }

  /// Same error with a source span attached (keeps an existing one).
  Error with_span(const Span& span) const {
    return Error(kind_, what(), span_ ? span_ : std::optional<Span>(span));
  }

 private:
  ErrorKind kind_;
  std::optional<Span> span_;
};

}  // namespace pregame
