#include "cjcalc/expr.hpp"

#include <cctype>
#include <charconv>

namespace cjcalc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExprContext& context) : text_(text), ctx_(context) {
    if (!ctx_.rs) throw InputError("expression evaluation needs a root system");
  }

  Character parse() {
    Character out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw InputError("parse error at column " + std::to_string(pos_ + 1) + ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Int integer() {
    skip_space();
    Int value = 0;
    const char* begin = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc()) fail("expected an integer");
    pos_ += static_cast<std::size_t>(end - begin);
    return value;
  }

  Weight weight() {
    const std::size_t start = pos_;
    const bool nested = accept('(');
    std::vector<Int> coords{integer()};
    while (accept(',')) coords.push_back(integer());
    if (nested) expect(')');
    if (coords.size() != ctx_.rs->rank()) {
      pos_ = start;
      fail("weight has " + std::to_string(coords.size()) + " coordinates but the rank is " + std::to_string(ctx_.rs->rank()));
    }
    return Weight(std::span<const Int>(coords));
  }

  Character expression() {
    Character acc = primary();
    char op = 0;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '*')) return acc;
      const char next = text_[pos_];
      if (op && next != op) fail("mixing '+' and '*' requires parentheses");
      op = next;
      ++pos_;
      Character rhs = primary();
      acc = op == '+' ? acc + rhs : multiply(acc, rhs);
    }
  }

  Character primary() {
    if (accept('(')) {
      Character inner = expression();
      expect(')');
      return inner;
    }
    const std::size_t start = pos_;
    const std::string_view name = identifier();
    if (name == "st") {
      if (ctx_.p == 0) fail("st needs a prime p");
      return steinberg_character(*ctx_.rs, ctx_.p, ctx_.r);
    }
    if (name == "weyl" || name == "simple") {
      expect('(');
      const Weight w = weight();
      expect(')');
      if (!w.is_dominant()) {
        pos_ = start;
        fail(std::string(name) + " needs a dominant weight, got " + to_string(w));
      }
      if (name == "weyl") return weyl_character(w, *ctx_.rs);
      if (!ctx_.provider) fail("simple(...) needs decomposition data");
      return ctx_.provider->simple_character(w);
    }
    if (name == "twist") {
      expect('(');
      Character inner = expression();
      expect(',');
      const Int s = integer();
      expect(')');
      if (ctx_.p == 0) fail("twist needs a prime p");
      return frobenius_twist(inner, ctx_.p, s);
    }
    if (name == "dual") {
      expect('(');
      Character inner = expression();
      expect(')');
      return formal_dual(inner);
    }
    pos_ = start;
    skip_space();
    fail(name.empty() ? "expected weyl, simple, st, twist, dual or '('" : "unknown function '" + std::string(name) + "'");
  }

  std::string_view text_;
  const ExprContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Character evaluate_expression(std::string_view text, const ExprContext& context) { return Parser(text, context).parse(); }

}  // namespace cjcalc
