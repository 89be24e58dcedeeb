#ifndef KITTAB_TEXT_CURSOR_HPP
#define KITTAB_TEXT_CURSOR_HPP

#include <string>
#include <string_view>

#include "kittab/errors.hpp"
#include "kittab/polynomial.hpp"

namespace kittab {

/// Position-tracking reader over source text. Whitespace and `#` comments
/// are skipped by skip_space().
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get();
  void skip_space();
  /// skip_space(), then consume c if present.
  bool accept(char c);
  void expect(char c, std::string_view what);
  bool at_identifier_start();
  std::string identifier(std::string_view what);
  /// Unsigned decimal literal.
  std::string digits(std::string_view what);

  int line() const { return line_; }
  int column() const { return column_; }
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const std::string& message, int line, int column) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

/// Reads one polynomial starting at the cursor; stops before the first
/// character that cannot continue it (',', ';', ']', ...).
Polynomial read_polynomial(TextCursor& cur, const RingPtr& ring);

}  // namespace kittab

#endif  // KITTAB_TEXT_CURSOR_HPP
