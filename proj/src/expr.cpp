#include "kleinbu/expr.hpp"

#include <cctype>
#include <string>

#include "kleinbu/errors.hpp"

namespace kleinbu {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BraidElt parse() {
    BraidElt r = product();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected input", pos_);
    return r;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool keyword(std::string_view kw) {
    skip();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t const end = pos_ + kw.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  bool at_unary_start() {
    skip();
    if (pos_ >= text_.size()) return false;
    char const c = text_[pos_];
    return c == '(' || c == '1' || text_.substr(pos_, 3) == "inv" || text_.substr(pos_, 6) == "lsigma" ||
           text_.substr(pos_, 6) == "sigma2";
  }

  BraidElt product() {
    BraidElt acc = unary();
    for (;;) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (keyword("mul")) {
        acc = acc * unary();
      } else if (at_unary_start()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  BraidElt unary() {
    if (keyword("inv")) return binv(unary());
    if (keyword("lsigma")) return lsigma(unary());
    return atom();
  }

  // Offset of the ')' closing the '(' at `open`, and whether a ';' occurs at depth 1.
  std::pair<std::size_t, bool> match(std::size_t open) const {
    int depth = 0;
    bool literal = false;
    for (std::size_t i = open; i < text_.size(); ++i) {
      char const c = text_[i];
      if (c == '(') ++depth;
      if (c == ';' && depth == 1) literal = true;
      if (c == ')' && --depth == 0) return {i, literal};
    }
    throw ParseError("unbalanced '('", open);
  }

  BraidElt atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("expected braid", pos_);
    if (keyword("sigma2")) return sigma_squared();
    if (keyword("1")) return BraidElt{};
    if (text_[pos_] != '(') throw ParseError("expected braid", pos_);
    std::size_t const open = pos_;
    auto const [close, literal] = match(open);
    if (literal) {
      pos_ = close + 1;
      try {
        return parse_braid(text_.substr(open, close + 1 - open));
      } catch (ParseError const& e) {
        throw ParseError(e.detail(), open + e.position());
      }
    }
    ++pos_;
    BraidElt inner = product();
    skip();
    if (pos_ != close) throw ParseError("expected ')'", pos_);
    ++pos_;
    return inner;
  }
};

}  // namespace

BraidElt eval_braid_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace kleinbu
