#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frob/parse.hpp"
#include "frob/presentation.hpp"

namespace frob {

/// A family of ideals written with one integer parameter, e.g.
/// "chain J(t) = x^t, y^t". The text is re-parsed for each parameter value.
struct IdealFamily {
  std::string name;
  std::string parameter;
  std::string text;
  int line = 0;
  int column = 0;
};

/// Parsed ring file. Line grammar (one statement per line, '#' comments):
///   p = <prime>
///   vars = x, y, z
///   order = grevlex | lex | grlex
///   relations = <poly>, ...          (may repeat; lists are appended)
///   ideal NAME = <poly>, ...
///   element NAME = <poly>
///   sop = <poly>, ...
///   chain NAME(t) = <poly in t>, ...
///   sequence NAME(e) = <poly in e, p, q>, ...
/// `m` always names the maximal ideal.
struct RingFile {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::string order = "grevlex";
  std::vector<Polynomial> relations;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
  std::vector<std::pair<std::string, Polynomial>> elements;
  std::optional<std::vector<Polynomial>> sop;
  std::optional<IdealFamily> chain;
  std::vector<IdealFamily> sequences;

  RingPtr ring;
  PresentationPtr presentation;

  const std::vector<Polynomial>* find_ideal(std::string_view name) const;
  const Polynomial* find_element(std::string_view name) const;
  const IdealFamily* find_sequence(std::string_view name) const;

  /// Instantiates a family at one parameter value. `p` and `q = p^value`
  /// are also visible to the expressions.
  QuotientIdeal instantiate(const IdealFamily& family, std::int64_t value) const;

  /// Canonical text form; parsing it yields an equal RingFile.
  std::string serialize() const;
};

bool operator==(const RingFile& a, const RingFile& b);

/// Throws ParseError (with line and column), UnknownVariable, NonPrimeModulus.
/// `order_override` replaces the file's order when non-empty.
RingFile parse_ring_file_text(std::string_view text, const std::string& order_override = "",
                              GbBudget budget = {});
/// Throws Io when the file cannot be read.
RingFile parse_ring_file(const std::string& path, const std::string& order_override = "", GbBudget budget = {});

}  // namespace frob
