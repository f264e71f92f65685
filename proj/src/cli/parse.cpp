#include "bitensor/cli/parse.hpp"

#include <cctype>
#include <string>

#include "bitensor/errors.hpp"
#include "bitensor/hopf.hpp"

namespace bitensor::cli {

namespace {

enum class Tok { Number, Letter, Plus, Minus, Star, Bar, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

class Parser {
 public:
  Parser(std::string_view src, int dim) : src_(src), dim_(dim) { advance(); }

  Element parse() {
    Element e = expr();
    if (tok_.kind != Tok::End) throw SyntaxError(tok_.pos, "unexpected '" + tok_.text + "'");
    return e;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    const std::size_t start = i_;
    if (i_ == src_.size()) {
      tok_ = {Tok::End, start, "end of input"};
      return;
    }
    const char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
      tok_ = {Tok::Number, start, std::string(src_.substr(start, i_ - start))};
      return;
    }
    if (c == 'x') {
      ++i_;
      const std::size_t digits = i_;
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
      if (i_ == digits) throw SyntaxError(start, "expected digits after 'x'");
      tok_ = {Tok::Letter, start, std::string(src_.substr(digits, i_ - digits))};
      return;
    }
    ++i_;
    switch (c) {
      case '+': tok_ = {Tok::Plus, start, "+"}; return;
      case '-': tok_ = {Tok::Minus, start, "-"}; return;
      case '*': tok_ = {Tok::Star, start, "*"}; return;
      case '|': tok_ = {Tok::Bar, start, "|"}; return;
      case '/': tok_ = {Tok::Slash, start, "/"}; return;
      case '(': tok_ = {Tok::LParen, start, "("}; return;
      case ')': tok_ = {Tok::RParen, start, ")"}; return;
      default: throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
  }

  bool starts_factor() const { return tok_.kind == Tok::Letter || tok_.kind == Tok::LParen; }

  Element expr() {
    Rational sign = 1;
    if (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      if (tok_.kind == Tok::Minus) sign = -1;
      advance();
    }
    Element sum = sign * term();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      const bool minus = tok_.kind == Tok::Minus;
      advance();
      Element t = term();
      if (minus) sum -= t;
      else sum += t;
    }
    return sum;
  }

  Element term() {
    if (tok_.kind != Tok::Number) return product();
    const std::size_t pos = tok_.pos;
    const bool literal_one = tok_.text == "1";
    Rational coeff = number();
    const bool fraction = last_was_fraction_;
    if (tok_.kind == Tok::Star || tok_.kind == Tok::Bar) {
      // "1 * x1" and "1 | x1": the literal 1 is the unit factor.
      if (!literal_one || fraction) throw SyntaxError(pos, "a coefficient cannot be an operand of '*' or '|'");
      return product_from(Element::unit(dim_));
    }
    if (starts_factor()) return coeff * product();
    return Element::unit(dim_, coeff);
  }

  Rational number() {
    Integer num(tok_.text, 10);
    advance();
    last_was_fraction_ = false;
    if (tok_.kind != Tok::Slash) return Rational(num);
    advance();
    if (tok_.kind != Tok::Number) throw SyntaxError(tok_.pos, "expected a denominator after '/'");
    Integer den(tok_.text, 10);
    if (den == 0) throw SyntaxError(tok_.pos, "zero denominator");
    advance();
    last_was_fraction_ = true;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Element product() { return product_from(tensor_chain()); }

  Element product_from(Element first) {
    Element acc = continue_tensor(std::move(first));
    while (tok_.kind == Tok::Bar) {
      advance();
      acc = bitensor::product(acc, tensor_chain());
    }
    return acc;
  }

  Element tensor_chain() { return continue_tensor(factor()); }

  Element continue_tensor(Element acc) {
    while (tok_.kind == Tok::Star) {
      const std::size_t pos = tok_.pos;
      advance();
      Element rhs = factor();
      if (!acc.is_word_supported() || !rhs.is_word_supported())
        throw NotWordSupported("'*' at position " + std::to_string(pos) + " needs single-word operands");
      acc = tensor_word(acc, rhs);
    }
    return acc;
  }

  Element factor() {
    switch (tok_.kind) {
      case Tok::Letter: {
        const std::size_t pos = tok_.pos;
        const std::string digits = tok_.text;
        advance();
        if (digits.size() > 6 || std::stoi(digits) < 1 || std::stoi(digits) > dim_)
          throw LetterOutOfRange("letter x" + digits + " at position " + std::to_string(pos) +
                                 " outside alphabet 1.." + std::to_string(dim_));
        return Element::letter(dim_, std::stoi(digits));
      }
      case Tok::Number: {
        if (tok_.text != "1") throw SyntaxError(tok_.pos, "only the unit '1' may appear as a factor");
        advance();
        return Element::unit(dim_);
      }
      case Tok::LParen: {
        advance();
        Element inner = expr();
        if (tok_.kind != Tok::RParen) throw SyntaxError(tok_.pos, "expected ')'");
        advance();
        return inner;
      }
      default:
        throw SyntaxError(tok_.pos, "unexpected '" + tok_.text + "'");
    }
  }

  std::string_view src_;
  int dim_;
  std::size_t i_ = 0;
  Token tok_{Tok::End, 0, ""};
  bool last_was_fraction_ = false;
};

}  // namespace

Element parse_expression(std::string_view source, int dim) {
  if (dim < 1) throw InvalidArgument("alphabet size must be positive");
  return Parser(source, dim).parse();
}

}  // namespace bitensor::cli
