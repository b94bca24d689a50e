#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "frob/polynomial.hpp"

namespace frob {

/// Integer parameters (t, e, p, q, ...) visible inside expressions.
using ParamMap = std::map<std::string, std::int64_t, std::less<>>;

/// Where an expression sits in its source file, for error messages.
struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Recursive-descent parser for polynomial expressions: integers,
/// variables, + - *, ^ with integer exponents, parentheses. Exponents may be
/// integer expressions over `params` with + - * / (floor division) and ^.
/// Parameters may also appear as integer coefficients. Throws ParseError or
/// UnknownVariable.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, const ParamMap& params = {},
                            SourcePos pos = {});

/// Comma-separated polynomial list; empty text yields an empty list.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text,
                                              const ParamMap& params = {}, SourcePos pos = {});

std::int64_t parse_integer_expression(std::string_view text, const ParamMap& params = {}, SourcePos pos = {});

/// Splits on top-level commas (commas inside parentheses are kept).
std::vector<std::string> split_top_level(std::string_view text);

}  // namespace frob
