#include "nckernel/parse.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <optional>
#include <vector>

#include "nckernel/error.hpp"

namespace nckernel {

namespace {

struct Term {
  Complex coeff{1.0, 0.0};
  std::vector<Word::Letter> unprimed;
  std::vector<Word::Letter> primed;
};

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty expression");
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1.0 : 1.0;
      skip_ws();
    }
    terms.push_back(parse_term(sign));
    skip_ws();
    while (!at_end()) {
      const char op = take();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', got '") + op + "'");
      skip_ws();
      terms.push_back(parse_term(op == '-' ? -1.0 : 1.0));
      skip_ws();
    }
    return terms;
  }

 private:
  Term parse_term(double sign) {
    Term term;
    bool have_item = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c == 'z') {
        parse_factor(term);
      } else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        if (have_item) fail("coefficient must lead its term");
        term.coeff = c == '(' ? parse_complex() : Complex(parse_real(), 0.0);
      } else {
        break;
      }
      have_item = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        take();
        skip_ws();
        if (at_end() || peek() != 'z') fail("expected factor after '*'");
      }
    }
    if (!have_item) fail("expected a term");
    term.coeff *= sign;
    return term;
  }

  void parse_factor(Term& term) {
    take();  // 'z'
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected generator index after 'z'");
    unsigned long index = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, index);
    if (ec != std::errc{} || index < 1 || index > arity_) {
      throw Error(ErrorKind::UnknownIndex,
                  "z" + std::string(text_.substr(start, pos_ - start)) + " with N=" +
                      std::to_string(arity_));
    }
    const auto letter = static_cast<Word::Letter>(index);
    if (!at_end() && peek() == '\'') {
      take();
      term.primed.push_back(letter);
    } else {
      if (!term.primed.empty()) {
        throw Error(ErrorKind::NonHereditary,
                    "unprimed z" + std::to_string(index) + " after a primed factor at offset " +
                        std::to_string(start));
      }
      term.unprimed.push_back(letter);
    }
  }

  double parse_real() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t save = pos_++;
      if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
      const std::size_t digits = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == digits) pos_ = save;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_ || !std::isfinite(value)) {
      pos_ = start;
      fail("malformed number");
    }
    return value;
  }

  // '(' signed reals, each optionally suffixed by 'i', summed ')'.
  Complex parse_complex() {
    take();  // '('
    Complex value{};
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end()) fail("unterminated complex literal");
      if (peek() == ')') {
        take();
        break;
      }
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1.0 : 1.0;
        skip_ws();
      } else if (any) {
        fail("expected '+' or '-' inside complex literal");
      }
      double magnitude = 1.0;
      bool digits = false;
      if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
        magnitude = parse_real();
        digits = true;
      }
      skip_ws();
      if (!at_end() && peek() == 'i') {
        take();
        value += Complex(0.0, sign * magnitude);
      } else if (digits) {
        value += Complex(sign * magnitude, 0.0);
      } else {
        fail("expected number inside complex literal");
      }
      any = true;
    }
    if (!any) fail("empty complex literal");
    return value;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

HereditaryKernel parse_kernel(std::string_view text, std::size_t arity, std::size_t dim) {
  if (dim != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "expressions define scalar kernels; use the JSON format for p > 1");
  }
  if (arity == 0) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  const auto terms = Parser(text, arity).parse();
  std::size_t degree = 0;
  for (const auto& t : terms) degree = std::max({degree, t.unprimed.size(), t.primed.size()});
  HereditaryKernel k(arity, 1, degree);
  for (const auto& t : terms) {
    // Primed block z'^{w'^T}: the letters as written spell w'^T.
    Word wp(std::vector<Word::Letter>(t.primed.rbegin(), t.primed.rend()));
    k.add(Word(t.unprimed), wp, t.coeff);
  }
  return k;
}

std::string to_expression(const HereditaryKernel& k) {
  if (k.dim() != 1) throw Error(ErrorKind::InvalidArgument, "to_expression needs p = 1");
  if (k.entries().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : k.entries()) {
    const Complex v = c(0, 0);
    std::string coeff;
    if (v.imag() == 0.0) {
      const bool negative = std::signbit(v.real());
      if (first) {
        coeff = format_real(v.real());
      } else {
        out += negative ? " - " : " + ";
        coeff = format_real(std::abs(v.real()));
      }
    } else {
      if (!first) out += " + ";
      const double im = v.imag();
      coeff = "(" + format_real(v.real()) + (std::signbit(im) ? "-" : "+") +
              format_real(std::abs(im)) + "i)";
    }
    out += coeff;
    for (auto l : key.first.letters()) out += "*z" + std::to_string(l);
    const Word primed = transpose(key.second);
    for (auto l : primed.letters()) out += "*z" + std::to_string(l) + "'";
    first = false;
  }
  return out;
}

}  // namespace nckernel
