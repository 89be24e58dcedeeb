#ifndef KITTAB_ERRORS_HPP
#define KITTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kittab {

/// Shape, arity or ring mismatch between operands.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An argument outside the domain of the operation (zero divisor, empty
/// generator list where one is required, index out of range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A mathematical precondition on the inputs does not hold
/// (e.g. a ⊄ I, I ∩ b ≠ 0).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

}  // namespace kittab

#endif  // KITTAB_ERRORS_HPP
