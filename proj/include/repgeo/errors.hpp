#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>

namespace repgeo {

/// 1-based position of a token inside parsed text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;

  bool operator==(const SourceSpan&) const = default;
};

/// Root of every error the library raises. Parsers attach a span after the
/// fact so that validation errors raised deep in algebra code still point at
/// the offending input line.
class Error : public std::exception {
 public:
  explicit Error(std::string message) : message_(std::move(message)) {}

  const char* what() const noexcept override;

  const std::string& message() const noexcept { return message_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }
  void set_span(SourceSpan span) {
    span_ = span;
    what_.clear();
  }

 private:
  std::string message_;
  std::optional<SourceSpan> span_;
  mutable std::string what_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  enum class Reason { identity, latin_square, associativity, inverse };

  NotAGroup(Reason reason, std::array<std::size_t, 3> witness, std::string detail);

  Reason reason() const noexcept { return reason_; }
  /// Element indices exhibiting the failure; unused slots repeat the first.
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  Reason reason_;
  std::array<std::size_t, 3> witness_;
};

const char* to_string(NotAGroup::Reason reason);

class NotAnAction : public Error {
 public:
  NotAnAction(std::size_t g, std::size_t h, std::string detail)
      : Error(std::move(detail)), g_(g), h_(h) {}

  std::size_t g() const noexcept { return g_; }
  std::size_t h() const noexcept { return h_; }

 private:
  std::size_t g_;
  std::size_t h_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  NotNormal(std::size_t g, std::size_t n, std::string detail)
      : Error(std::move(detail)), g_(g), n_(n) {}

  /// g⁻¹·n·g leaves the subgroup.
  std::size_t g() const noexcept { return g_; }
  std::size_t n() const noexcept { return n_; }

 private:
  std::size_t g_;
  std::size_t n_;
};

class EnumerationCapExceeded : public Error {
 public:
  explicit EnumerationCapExceeded(std::uint64_t cap, std::string detail)
      : Error(std::move(detail)), cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

class SearchSpaceCapExceeded : public Error {
 public:
  explicit SearchSpaceCapExceeded(std::uint64_t cap, std::string detail)
      : Error(std::move(detail)), cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string expected)
      : Error("expected " + expected), expected_(std::move(expected)) {
    set_span(span);
  }

  const std::string& expected() const noexcept { return expected_; }

 protected:
  struct Raw {};
  ParseError(Raw, SourceSpan span, std::string message)
      : Error(std::move(message)) {
    set_span(span);
  }

 private:
  std::string expected_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(SourceSpan span, std::string name)
      : ParseError(Raw{}, span, "unknown variable '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace repgeo
