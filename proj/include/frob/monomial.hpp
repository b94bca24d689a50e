#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace frob {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr std::int64_t kMaxExponent = (std::int64_t{1} << 31) - 1;

/// Exponent vector in at most kMaxVars variables. Unused slots stay zero so
/// equality and hashing never need the arity.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, std::int32_t power = 1);

  std::int32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::int64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Sets one exponent; throws ExponentOverflow outside [0, 2^31).
  void set(std::size_t i, std::int64_t value);

  bool divides(const Monomial& other, std::size_t nvars) const noexcept {
    for (std::size_t i = 0; i < nvars; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::int32_t, kMaxVars> exps_{};
  std::int64_t degree_ = 0;
};

/// Checked product. Throws ExponentOverflow.
Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial divide(const Monomial& a, const Monomial& b) noexcept;
Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
Monomial gcd(const Monomial& a, const Monomial& b) noexcept;
/// Every exponent multiplied by factor (Frobenius on monomials). Checked.
Monomial scale_exponents(const Monomial& m, std::int64_t factor);
bool coprime(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { Lex, GrevLex, GrLex, Elimination };

/// Total monomial order on the first `nvars` variables. `Elimination` with
/// block k compares the total degree in the first k variables first and
/// breaks ties by grevlex on all variables, so it eliminates that block.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::size_t block = 0) : kind_(kind), block_(block) {}

  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  static MonomialOrder grlex() { return MonomialOrder(OrderKind::GrLex); }
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(OrderKind::Elimination, block);
  }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  bool degree_compatible() const noexcept {
    return kind_ == OrderKind::GrevLex || kind_ == OrderKind::GrLex;
  }

  /// Negative, zero, or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept;

  std::string name() const;
  /// Parses "grevlex", "lex", "grlex". Throws InvalidArgument otherwise.
  static MonomialOrder parse(std::string_view name);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::GrevLex;
  std::size_t block_ = 0;
};

}  // namespace frob
