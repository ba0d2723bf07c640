#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "deriv/error.hpp"

namespace deriv::detail {

// Shared scanning helper for the hand-written recursive-descent parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_with(std::string_view token) {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!starts_with(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'" + found());
  }

  // Reads a maximal run of characters satisfying pred; empty if none.
  template <class Pred>
  std::string take_while(Pred pred) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_ws();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected identifier" + found());
    return take_while(is_ident_char);
  }

  // True if an identifier equal to word starts here (and is not a prefix of a longer one).
  bool at_keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    return end >= text_.size() || !is_ident_char(text_[end]);
  }

  bool accept_keyword(std::string_view word) {
    if (!at_keyword(word)) return false;
    pos_ += word.size();
    return true;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  std::size_t position() const noexcept { return pos_; }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) return " but reached end of input";
    return std::string(" but found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace deriv::detail
