#include "frob/ringfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "frob/errors.hpp"

namespace frob {

namespace {

struct Statement {
  std::string keyword;
  std::string head;   // text between the keyword and '='
  std::string value;
  int line = 0;
  int head_column = 0;
  int value_column = 0;
};

[[noreturn]] void fail_at(ErrorKind kind, int line, int column, const std::string& msg) {
  fail(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// Trims [b, e) of `s` and returns the new bounds.
std::pair<std::size_t, std::size_t> trim(std::string_view s, std::size_t b, std::size_t e) {
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return {b, e};
}

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto [b, e] = trim(line, 0, line.size());
    if (b < e) {
      std::size_t eq = line.find('=', b);
      if (eq == std::string_view::npos || eq >= e) fail_at(ErrorKind::ParseError, line_no, int(b) + 1, "expected '='");
      Statement st;
      st.line = line_no;
      auto [hb, he] = trim(line, b, eq);
      std::size_t kw_end = hb;
      while (kw_end < he && (std::isalnum(static_cast<unsigned char>(line[kw_end])) || line[kw_end] == '_')) ++kw_end;
      st.keyword = std::string(line.substr(hb, kw_end - hb));
      if (st.keyword.empty()) fail_at(ErrorKind::ParseError, line_no, int(hb) + 1, "expected a keyword");
      auto [rb, re] = trim(line, kw_end, he);
      st.head = std::string(line.substr(rb, re - rb));
      st.head_column = int(rb) + 1;
      auto [vb, ve] = trim(line, eq + 1, e);
      st.value = std::string(line.substr(vb, ve - vb));
      st.value_column = int(vb) + 1;
      out.push_back(std::move(st));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

void require_no_head(const Statement& st) {
  if (!st.head.empty()) fail_at(ErrorKind::ParseError, st.line, st.head_column, "unexpected '" + st.head + "'");
}

std::string require_name(const Statement& st) {
  if (!is_identifier(st.head)) fail_at(ErrorKind::ParseError, st.line, st.head_column, "expected a name");
  return st.head;
}

// "J(t)" -> {"J", "t"}
std::pair<std::string, std::string> family_head(const Statement& st) {
  std::size_t open = st.head.find('(');
  std::size_t close = st.head.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close != st.head.size() - 1 || close < open) {
    fail_at(ErrorKind::ParseError, st.line, st.head_column, "expected NAME(parameter)");
  }
  auto [nb, ne] = trim(st.head, 0, open);
  auto [pb, pe] = trim(st.head, open + 1, close);
  std::string name = st.head.substr(nb, ne - nb);
  std::string param = st.head.substr(pb, pe - pb);
  if (!is_identifier(name)) fail_at(ErrorKind::ParseError, st.line, st.head_column, "expected a family name");
  if (!is_identifier(param)) {
    fail_at(ErrorKind::ParseError, st.line, st.head_column + int(open) + 1, "expected a parameter name");
  }
  return {name, param};
}

std::vector<std::string> parse_vars(const Statement& st) {
  std::vector<std::string> vars;
  int offset = 0;
  for (const auto& piece : split_top_level(st.value)) {
    auto [b, e] = trim(piece, 0, piece.size());
    std::string v = piece.substr(b, e - b);
    if (!is_identifier(v) || v[0] == '_') {
      fail_at(ErrorKind::ParseError, st.line, st.value_column + offset + int(b), "bad variable name '" + v + "'");
    }
    vars.push_back(v);
    offset += int(piece.size()) + 1;
  }
  if (vars.empty()) fail_at(ErrorKind::ParseError, st.line, st.value_column, "no variables declared");
  return vars;
}

ParamMap family_params(const std::string& param, std::uint32_t p, std::int64_t value) {
  ParamMap params{{param, value}, {"p", p}};
  if (param != "q" && value >= 0) params["q"] = prime_power(p, static_cast<unsigned>(value));
  return params;
}

std::string join(const std::vector<Polynomial>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += fs[i].to_string();
  }
  return out;
}

std::vector<std::string> strings(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

bool same_family(const IdealFamily& a, const IdealFamily& b) {
  return a.name == b.name && a.parameter == b.parameter && a.text == b.text;
}

}  // namespace

const std::vector<Polynomial>* RingFile::find_ideal(std::string_view name) const {
  for (const auto& [n, gens] : ideals)
    if (n == name) return &gens;
  return nullptr;
}

const Polynomial* RingFile::find_element(std::string_view name) const {
  for (const auto& [n, f] : elements)
    if (n == name) return &f;
  return nullptr;
}

const IdealFamily* RingFile::find_sequence(std::string_view name) const {
  for (const auto& s : sequences)
    if (s.name == name) return &s;
  return nullptr;
}

QuotientIdeal RingFile::instantiate(const IdealFamily& family, std::int64_t value) const {
  ParamMap params = family_params(family.parameter, p, value);
  return QuotientIdeal(presentation,
                       parse_polynomial_list(ring, family.text, params, {family.line, family.column}));
}

std::string RingFile::serialize() const {
  std::ostringstream out;
  out << "p = " << p << "\n";
  out << "vars = ";
  for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? ", " : "") << vars[i];
  out << "\norder = " << order << "\n";
  if (!relations.empty()) out << "relations = " << join(relations) << "\n";
  for (const auto& [name, gens] : ideals) out << "ideal " << name << " = " << join(gens) << "\n";
  for (const auto& [name, f] : elements) out << "element " << name << " = " << f.to_string() << "\n";
  if (sop) out << "sop = " << join(*sop) << "\n";
  if (chain) out << "chain " << chain->name << "(" << chain->parameter << ") = " << chain->text << "\n";
  for (const auto& s : sequences) out << "sequence " << s.name << "(" << s.parameter << ") = " << s.text << "\n";
  return out.str();
}

bool operator==(const RingFile& a, const RingFile& b) {
  if (a.p != b.p || a.vars != b.vars || a.order != b.order) return false;
  if (strings(a.relations) != strings(b.relations)) return false;
  if (a.ideals.size() != b.ideals.size() || a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i) {
    if (a.ideals[i].first != b.ideals[i].first) return false;
    if (strings(a.ideals[i].second) != strings(b.ideals[i].second)) return false;
  }
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    if (a.elements[i].first != b.elements[i].first) return false;
    if (a.elements[i].second.to_string() != b.elements[i].second.to_string()) return false;
  }
  if (a.sop.has_value() != b.sop.has_value()) return false;
  if (a.sop && strings(*a.sop) != strings(*b.sop)) return false;
  if (a.chain.has_value() != b.chain.has_value()) return false;
  if (a.chain && !same_family(*a.chain, *b.chain)) return false;
  if (a.sequences.size() != b.sequences.size()) return false;
  for (std::size_t i = 0; i < a.sequences.size(); ++i)
    if (!same_family(a.sequences[i], b.sequences[i])) return false;
  return true;
}

RingFile parse_ring_file_text(std::string_view text, const std::string& order_override, GbBudget budget) {
  std::vector<Statement> statements = split_statements(text);
  RingFile rf;
  const Statement* p_st = nullptr;
  const Statement* vars_st = nullptr;
  const Statement* order_st = nullptr;
  for (const auto& st : statements) {
    const Statement** slot = st.keyword == "p" ? &p_st : st.keyword == "vars" ? &vars_st
                             : st.keyword == "order" ? &order_st : nullptr;
    if (!slot) continue;
    require_no_head(st);
    if (*slot) fail_at(ErrorKind::ParseError, st.line, 1, "duplicate '" + st.keyword + "'");
    *slot = &st;
  }
  if (!p_st) fail(ErrorKind::ParseError, "missing 'p = <prime>'");
  if (!vars_st) fail(ErrorKind::ParseError, "missing 'vars = ...'");

  std::int64_t p = parse_integer_expression(p_st->value, {}, {p_st->line, p_st->value_column});
  if (p < 2 || p > 0x7fffffff || !is_prime(static_cast<std::uint64_t>(p))) {
    fail_at(ErrorKind::NonPrimeModulus, p_st->line, p_st->value_column, std::to_string(p) + " is not a prime below 2^31");
  }
  rf.p = static_cast<std::uint32_t>(p);
  rf.vars = parse_vars(*vars_st);
  if (!order_override.empty()) {
    rf.order = order_override;
  } else if (order_st) {
    rf.order = order_st->value;
  }
  MonomialOrder order;
  try {
    order = MonomialOrder::parse(rf.order);
  } catch (const Error&) {
    if (!order_override.empty() || !order_st) throw;
    fail_at(ErrorKind::ParseError, order_st->line, order_st->value_column, "unknown monomial order '" + rf.order + "'");
  }
  try {
    rf.ring = make_ring(rf.p, rf.vars, order);
  } catch (const Error& e) {
    fail_at(ErrorKind::ParseError, vars_st->line, vars_st->value_column, e.what());
  }

  auto name_taken = [&](const std::string& name) {
    return name == "m" || rf.find_ideal(name) || rf.find_element(name) || rf.find_sequence(name) ||
           (rf.chain && rf.chain->name == name);
  };

  for (const auto& st : statements) {
    const SourcePos pos{st.line, st.value_column};
    if (st.keyword == "p" || st.keyword == "vars" || st.keyword == "order") continue;
    if (st.keyword == "relations") {
      require_no_head(st);
      for (auto& f : parse_polynomial_list(rf.ring, st.value, {}, pos)) rf.relations.push_back(std::move(f));
    } else if (st.keyword == "ideal" || st.keyword == "element") {
      std::string name = require_name(st);
      if (name_taken(name)) fail_at(ErrorKind::ParseError, st.line, st.head_column, "name '" + name + "' already used");
      if (st.keyword == "ideal") {
        rf.ideals.emplace_back(name, parse_polynomial_list(rf.ring, st.value, {}, pos));
      } else {
        rf.elements.emplace_back(name, parse_polynomial(rf.ring, st.value, {}, pos));
      }
    } else if (st.keyword == "sop") {
      require_no_head(st);
      if (rf.sop) fail_at(ErrorKind::ParseError, st.line, 1, "duplicate 'sop'");
      rf.sop = parse_polynomial_list(rf.ring, st.value, {}, pos);
    } else if (st.keyword == "chain" || st.keyword == "sequence") {
      auto [name, param] = family_head(st);
      if (st.keyword == "chain" && rf.chain) fail_at(ErrorKind::ParseError, st.line, 1, "duplicate 'chain'");
      if (name_taken(name)) fail_at(ErrorKind::ParseError, st.line, st.head_column, "name '" + name + "' already used");
      if (rf.ring->variable_index(param) >= 0) {
        fail_at(ErrorKind::ParseError, st.line, st.head_column, "parameter '" + param + "' is also a variable");
      }
      IdealFamily family{name, param, st.value, st.line, st.value_column};
      // Syntax check only; values are re-parsed per parameter.
      parse_polynomial_list(rf.ring, st.value, family_params(param, rf.p, 1), pos);
      if (st.keyword == "chain") {
        rf.chain = std::move(family);
      } else {
        rf.sequences.push_back(std::move(family));
      }
    } else {
      fail_at(ErrorKind::ParseError, st.line, 1, "unknown statement '" + st.keyword + "'");
    }
  }
  rf.presentation = RingPresentation::create(rf.ring, rf.relations, budget);
  return rf;
}

RingFile parse_ring_file(const std::string& path, const std::string& order_override, GbBudget budget) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_file_text(buf.str(), order_override, budget);
}

}  // namespace frob
