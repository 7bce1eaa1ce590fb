#include "charpdyn/parse.hpp"

#include <cctype>
#include <cstdint>

#include "charpdyn/errors.hpp"

namespace charpdyn {

namespace {

class ElementParser {
 public:
  ElementParser(const std::string& text, FieldPtr field)
      : text_(text), field_(std::move(field)) {}

  RatFunc run() {
    RatFunc v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("element '" + text_ + "': " + what + " at position " +
                     std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc v = term();
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  RatFunc term() {
    RatFunc v = factor();
    while (true) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        RatFunc d = factor();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RatFunc factor() {
    bool negate = false;
    while (true) {
      if (eat('-'))
        negate = !negate;
      else if (eat('+'))
        ;
      else
        break;
    }
    RatFunc v = base();
    if (eat('^')) {
      int64_t e = integer();
      v = v.is_zero() && e == 0 ? RatFunc::one(field_) : v.pow(e);
    }
    return negate ? -v : v;
  }

  RatFunc base() {
    char c = peek();
    if (c == '(') {
      eat('(');
      RatFunc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      return RatFunc::variable(field_);
    }
    if (c == 'g') {
      ++pos_;
      if (field_->k() < 2) fail("'g' needs a non-prime constant field");
      return RatFunc::constant(FqElem::gen(field_));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::from_int(field_, integer());
    fail("expected a value");
  }

  int64_t integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (int64_t(1) << 50)) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  const std::string& text_;
  FieldPtr field_;
  size_t pos_ = 0;
};

}  // namespace

FieldPtr parse_field_spec(const std::string& s) {
  size_t caret = s.find('^');
  auto to_int = [&s](const std::string& part) {
    if (part.empty()) throw ParseError("field spec '" + s + "': empty number");
    int64_t v = 0;
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("field spec '" + s + "': expected digits");
      v = v * 10 + (c - '0');
      if (v > (int64_t(1) << 40)) throw ParseError("field spec '" + s + "': number too large");
    }
    return v;
  };
  int64_t p = to_int(caret == std::string::npos ? s : s.substr(0, caret));
  int64_t k = caret == std::string::npos ? 1 : to_int(s.substr(caret + 1));
  if (!is_prime(p)) throw ParseError("field spec '" + s + "': characteristic must be prime");
  if (k < 1 || k > 64) throw ParseError("field spec '" + s + "': bad extension degree");
  return FqField::make(p, static_cast<int>(k));
}

RatFunc parse_element(const std::string& s, const FieldPtr& field) {
  return ElementParser(s, field).run();
}

Place parse_place(const std::string& s, const FieldPtr& field) {
  // trim and check for the infinity keyword
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) throw ParseError("empty place");
  std::string body = s.substr(a, b - a + 1);
  if (body == "inf") return Place::infinity(field);
  RatFunc x = parse_element(body, field);
  if (!x.is_polynomial() || x.num().degree() < 1)
    throw ParseError("place '" + s + "': expected a polynomial of degree >= 1");
  try {
    return Place::finite(x.num());
  } catch (const std::invalid_argument& e) {
    throw ParseError("place '" + s + "': " + e.what());
  }
}

}  // namespace charpdyn
