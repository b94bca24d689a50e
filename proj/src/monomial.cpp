#include "frob/monomial.hpp"

#include <algorithm>

#include "frob/errors.hpp"

namespace frob {

namespace {

std::int32_t checked_exponent(std::int64_t value) {
  if (value < 0 || value > kMaxExponent) {
    fail(ErrorKind::ExponentOverflow, "exponent " + std::to_string(value) + " outside [0, 2^31)");
  }
  return static_cast<std::int32_t>(value);
}

int grevlex_tail(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept {
  for (std::size_t i = nvars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_tail(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept {
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Monomial Monomial::variable(std::size_t index, std::int32_t power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::int64_t value) {
  if (i >= kMaxVars) fail(ErrorKind::InvalidArgument, "variable index out of range");
  std::int32_t v = checked_exponent(value);
  degree_ += static_cast<std::int64_t>(v) - exps_[i];
  exps_[i] = v;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int32_t e : exps_) {
    h ^= static_cast<std::uint32_t>(e);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != 0 || b[i] != 0) r.set(i, static_cast<std::int64_t>(a[i]) + b[i]);
  }
  return r;
}

Monomial divide(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) r.set(i, a[i] - b[i]);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::int32_t v = std::max(a[i], b[i]);
    if (v != 0) r.set(i, v);
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::int32_t v = std::min(a[i], b[i]);
    if (v != 0) r.set(i, v);
  }
  return r;
}

Monomial scale_exponents(const Monomial& m, std::int64_t factor) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m[i] == 0) continue;
    if (factor != 0 && m[i] > kMaxExponent / factor) {
      fail(ErrorKind::ExponentOverflow, "bracket power exponent " + std::to_string(m[i]) + " * " +
                                            std::to_string(factor) + " exceeds 2^31");
    }
    r.set(i, static_cast<std::int64_t>(m[i]) * factor);
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept {
  for (std::size_t i = 0; i < nvars; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept {
  switch (kind_) {
    case OrderKind::Lex:
      return lex_tail(a, b, nvars);
    case OrderKind::GrLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return lex_tail(a, b, nvars);
    case OrderKind::Elimination: {
      std::int64_t da = 0, db = 0;
      for (std::size_t i = 0; i < block_; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da > db ? 1 : -1;
      [[fallthrough]];
    }
    case OrderKind::GrevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return grevlex_tail(a, b, nvars);
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::Elimination: return "elim" + std::to_string(block_);
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "grevlex") return grevlex();
  if (name == "lex") return lex();
  if (name == "grlex") return grlex();
  fail(ErrorKind::InvalidArgument, "unknown monomial order '" + std::string(name) + "'");
}

}  // namespace frob
