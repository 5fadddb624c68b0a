#include <algorithm>
#include <cctype>

#include "gkz/errors.hpp"
#include "gkz/weyl.hpp"

namespace gkz {

namespace {

class Parser {
 public:
  Parser(std::string_view text, size_t nvars) : s_(text), n_(nvars) {}

  WeylElement parse() {
    WeylElement e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "operator syntax at offset " + std::to_string(pos_) + ": " + why);
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

  std::string digits() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  WeylElement expr() {
    WeylElement acc(n_);
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    for (;;) {
      WeylElement t = term();
      acc = negative ? acc - t : acc + t;
      if (eat('+'))
        negative = false;
      else if (eat('-'))
        negative = true;
      else
        return acc;
    }
  }

  WeylElement term() {
    WeylElement acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  WeylElement power() {
    WeylElement base = atom();
    if (!eat('^')) return base;
    std::string e = digits();
    if (e.size() > 3) fail("exponent too large");
    unsigned long k = std::stoul(e);
    WeylElement acc = WeylElement::constant(n_, 1);
    for (unsigned long i = 0; i < k; ++i) acc = acc * base;
    return acc;
  }

  WeylElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      WeylElement e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (c == 'l' || c == 'd') {
      ++pos_;
      std::string idx = digits();
      if (idx.size() > 2) fail("variable index too large");
      size_t i = std::stoul(idx);
      return c == 'l' ? WeylElement::lambda(n_, i) : WeylElement::partial(n_, i);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (eat('/')) num += "/" + digits();
      return WeylElement::constant(n_, parse_rational(num));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  size_t n_;
  size_t pos_ = 0;
};

size_t scan_variables(std::string_view text) {
  size_t count = 0;
  for (size_t i = 0; i + 1 < text.size(); ++i) {
    if ((text[i] != 'l' && text[i] != 'd') || !std::isdigit(static_cast<unsigned char>(text[i + 1])))
      continue;
    size_t j = i + 1, idx = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      idx = idx * 10 + static_cast<size_t>(text[j++] - '0');
    count = std::max(count, idx + 1);
  }
  return count;
}

}  // namespace

WeylElement parse_weyl(std::string_view text, size_t min_vars) {
  size_t n = std::max(min_vars, scan_variables(text));
  if (n > 64) throw Error(ErrorCode::ParseError, "too many variables");
  return Parser(text, n).parse();
}

}  // namespace gkz
