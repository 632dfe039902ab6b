#pragma once

// Small recursive-descent parser for arithmetic expressions over an arbitrary
// value type. Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := number | identifier | '(' expr ')'
// Numbers are integers or decimals, handed to the caller as exact rationals.

#include "cmlab/error.hpp"

#include <gmpxx.h>

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

namespace cmlab::expr {

template <class T>
struct Hooks {
  std::function<T(const mpq_class&)> number;
  std::function<T(const std::string&)> identifier;  // throws Error(parse) when unknown
  std::function<T(const T&, long)> power;            // negative exponents allowed
  std::function<T(const T&, const T&)> divide;
};

namespace detail {

inline mpq_class parse_decimal(std::string_view digits) {
  const auto dot = digits.find('.');
  if (dot == std::string_view::npos) return mpq_class(mpz_class(std::string(digits), 10));
  std::string whole(digits.substr(0, dot));
  std::string frac(digits.substr(dot + 1));
  if (whole.empty()) whole = "0";
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  mpq_class q(mpz_class(whole + frac, 10), den);
  q.canonicalize();
  return q;
}

template <class T>
class Parser {
 public:
  Parser(std::string_view text, const Hooks<T>& hooks) : s_(text), h_(hooks) {}

  T run() {
    T value = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T acc = term();
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  T term() {
    T acc = unary();
    for (;;) {
      if (eat('*')) acc = acc * unary();
      else if (eat('/')) acc = h_.divide(acc, unary());
      else return acc;
    }
  }

  T unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  T power() {
    T base = atom();
    if (!eat('^')) return base;
    const bool neg = eat('-');
    if (eat('(')) {
      const long e = integer();
      if (!eat(')')) fail("expected ')'");
      return h_.power(base, neg ? -e : e);
    }
    const long e = integer();
    return h_.power(base, neg ? -e : e);
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  T atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return h_.number(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return h_.identifier(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  mpq_class number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    return parse_decimal(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  const Hooks<T>& h_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class T>
T parse(std::string_view text, const Hooks<T>& hooks) {
  return detail::Parser<T>(text, hooks).run();
}

}  // namespace cmlab::expr
