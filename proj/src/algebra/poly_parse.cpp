#include "norden/errors.hpp"
#include "norden/poly.hpp"

#include <cctype>

namespace norden {

namespace {

// poly   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := int ['/' int] | var ['^' int]
class PolyParser {
public:
  PolyParser(std::string_view text, const ParameterList& params) : text_(text), params_(params) {}

  Poly parse() {
    skip_space();
    if (at_end()) throw error("empty polynomial");
    Poly result = Poly::constant(0, params_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Poly t = term();
      result += negate ? -t : t;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw error("expected '+' or '-'");
      negate = peek() == '-';
      ++pos_;
    }
    return result;
  }

private:
  Poly term() {
    Poly t = factor();
    for (;;) {
      skip_space();
      if (at_end() || peek() != '*') return t;
      ++pos_;
      t *= factor();
    }
  }

  Poly factor() {
    skip_space();
    if (at_end()) throw error("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw error("expected denominator");
        num += '/' + digits();
      }
      return Poly::constant(Rational::parse(num), params_);
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (!params_.index_of(name)) throw error("unknown parameter '" + std::string(name) + "'");
      Poly v = Poly::variable(params_, name);
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw error("expected exponent");
        const unsigned long e = std::stoul(digits());
        if (e > 64) throw error("exponent too large");
        Poly p = Poly::constant(1, params_);
        for (unsigned long i = 0; i < e; ++i) p *= v;
        return p;
      }
      return v;
    }
    throw error(std::string("unexpected character '") + peek() + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  ParseError error(const std::string& what) const {
    return ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const ParameterList& params_;
  std::size_t pos_ = 0;
};

} // namespace

Poly Poly::parse(std::string_view text, const ParameterList& params) {
  return PolyParser(text, params).parse();
}

} // namespace norden
