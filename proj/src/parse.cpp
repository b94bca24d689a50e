#include "frob/parse.hpp"

#include <cctype>

#include "frob/errors.hpp"

namespace frob {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, const ParamMap& params, SourcePos pos)
      : ring_(ring), text_(text), params_(params), pos_(pos) {}

  Polynomial polynomial() {
    Polynomial f = expr();
    skip_space();
    if (i_ < text_.size()) error("unexpected '" + std::string(1, text_[i_]) + "'");
    return f;
  }

  std::int64_t integer() {
    std::int64_t v = int_expr();
    skip_space();
    if (i_ < text_.size()) error("unexpected '" + std::string(1, text_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what, ErrorKind kind = ErrorKind::ParseError) const {
    fail(kind, "line " + std::to_string(pos_.line) + ", column " + std::to_string(pos_.column + static_cast<int>(i_)) +
                   ": " + what);
  }

  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip_space();
    if (i_ < text_.size() && text_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  bool at_identifier() {
    skip_space();
    return i_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_');
  }

  bool at_digit() {
    skip_space();
    return i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]));
  }

  std::string identifier() {
    std::size_t start = i_;
    while (i_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
      ++i_;
    return std::string(text_.substr(start, i_ - start));
  }

  std::string digits() {
    std::size_t start = i_;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
    return std::string(text_.substr(start, i_ - start));
  }

  // --- polynomial grammar -------------------------------------------------

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      bool negate = false;
      if (accept('+')) {
      } else if (accept('-')) {
        negate = true;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial f = factor();
    while (accept('*')) f = f * factor();
    return f;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      std::int64_t n = exponent();
      if (n < 0) error("negative exponent");
      if (base.is_monomial()) {
        // Direct exponent scaling keeps overflow reporting precise.
        const PrimeField& F = ring_->field();
        return Polynomial::term(ring_, F.pow(base.leading_coeff(), static_cast<std::uint64_t>(n)),
                                scale_exponents(base.leading_monomial(), n));
      }
      return pow(base, static_cast<std::uint64_t>(n));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (accept('(')) {
      Polynomial f = expr();
      expect(')');
      return f;
    }
    if (at_digit()) {
      std::string d = digits();
      std::uint64_t v = 0;
      const std::uint32_t p = ring_->characteristic();
      for (char c : d) v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % p;
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (at_identifier()) {
      std::size_t start = i_;
      std::string name = identifier();
      int idx = ring_->variable_index(name);
      if (idx >= 0) return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
      auto it = params_.find(name);
      if (it != params_.end()) return Polynomial::constant(ring_, it->second);
      i_ = start;
      error("unknown variable '" + name + "'", ErrorKind::UnknownVariable);
    }
    if (i_ >= text_.size()) error("unexpected end of expression");
    error("unexpected '" + std::string(1, text_[i_]) + "'");
  }

  std::int64_t exponent() {
    skip_space();
    if (accept('(')) {
      std::int64_t v = int_expr();
      expect(')');
      return v;
    }
    if (at_digit()) return to_int(digits());
    if (at_identifier()) return param(identifier());
    error("expected an exponent");
  }

  // --- integer grammar ------------------------------------------------------

  std::int64_t int_expr() {
    std::int64_t acc = 0;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (accept('+')) {
      } else if (accept('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      acc = checked_add(acc, sign * int_term());
      first = false;
    }
    return acc;
  }

  std::int64_t int_term() {
    std::int64_t v = int_power();
    for (;;) {
      if (accept('*')) {
        v = checked_mul(v, int_power());
      } else if (accept('/')) {
        std::int64_t d = int_power();
        if (d == 0) error("division by zero");
        std::int64_t q = v / d;
        if ((v % d != 0) && ((v < 0) != (d < 0))) --q;
        v = q;
      } else {
        return v;
      }
    }
  }

  std::int64_t int_power() {
    std::int64_t base = int_atom();
    if (accept('^')) {
      std::int64_t n = int_power();
      if (n < 0) error("negative exponent");
      std::int64_t r = 1;
      for (std::int64_t k = 0; k < n; ++k) r = checked_mul(r, base);
      return r;
    }
    return base;
  }

  std::int64_t int_atom() {
    skip_space();
    if (accept('(')) {
      std::int64_t v = int_expr();
      expect(')');
      return v;
    }
    if (accept('-')) return -int_atom();
    if (at_digit()) return to_int(digits());
    if (at_identifier()) return param(identifier());
    error("expected an integer");
  }

  std::int64_t param(const std::string& name) {
    auto it = params_.find(name);
    if (it == params_.end()) error("unknown parameter '" + name + "'", ErrorKind::UnknownVariable);
    return it->second;
  }

  std::int64_t to_int(const std::string& d) {
    if (d.size() > 18) error("integer literal too large");
    return std::stoll(d);
  }

  std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) error("integer overflow");
    return r;
  }

  std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) error("integer overflow");
    return r;
  }

  const RingPtr& ring_;
  std::string_view text_;
  const ParamMap& params_;
  SourcePos pos_;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, const ParamMap& params, SourcePos pos) {
  return Parser(ring, text, params, pos).polynomial();
}

std::int64_t parse_integer_expression(std::string_view text, const ParamMap& params, SourcePos pos) {
  static const RingPtr dummy = make_ring(2, {"_"});
  return Parser(dummy, text, params, pos).integer();
}

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.emplace_back(text.substr(start, i - start));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text, const ParamMap& params,
                                              SourcePos pos) {
  std::vector<Polynomial> out;
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) return out;
  int offset = 0;
  for (const auto& piece : split_top_level(text)) {
    out.push_back(parse_polynomial(ring, piece, params, {pos.line, pos.column + offset}));
    offset += static_cast<int>(piece.size()) + 1;
  }
  return out;
}

}  // namespace frob
