#ifndef RSLM_CLI_EXPR_HPP_
#define RSLM_CLI_EXPR_HPP_

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rslm {

class ExprError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer expressions over k, r, literals, + - * and parentheses, e.g. "k*(r-1)".
/// The Unicode minus sign is accepted as '-'.
class NExpr {
 public:
  static std::int64_t eval(const std::string& text, std::int64_t k, std::int64_t r) {
    NExpr p(normalise(text), k, r);
    const auto v = p.expr();
    p.skip();
    if (p.pos_ != p.s_.size()) p.fail("unexpected '" + std::string(1, p.s_[p.pos_]) + "'");
    return v;
  }

 private:
  NExpr(std::string s, std::int64_t k, std::int64_t r) : s_(std::move(s)), k_(k), r_(r) {}

  static std::string normalise(const std::string& in) {
    std::string out;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in.compare(i, 3, "\xE2\x88\x92") == 0) {  // U+2212
        out += '-';
        i += 2;
      } else {
        out += in[i];
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ExprError("bad N expression '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::int64_t expr() {
    auto v = term();
    for (;;) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        const char op = s_[pos_++];
        const auto rhs = term();
        v = op == '+' ? v + rhs : v - rhs;
      } else {
        return v;
      }
    }
  }

  std::int64_t term() {
    auto v = factor();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        v *= factor();
      } else {
        return v;
      }
    }
  }

  std::int64_t factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      const auto v = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'k' || c == 'r') {
      ++pos_;
      return c == 'k' ? k_ : r_;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_++] - '0');
        if (v > (std::int64_t{1} << 40)) fail("literal too large");
      }
      return v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::int64_t k_, r_;
};

}  // namespace rslm

#endif  // RSLM_CLI_EXPR_HPP_
