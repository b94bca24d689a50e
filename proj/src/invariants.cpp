#include "frob/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "frob/ideal_ops.hpp"

namespace frob {

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::HK: return "HK";
    case TableKind::FSIG: return "FSIG";
    case TableKind::RELHK: return "RELHK";
    case TableKind::PAIR: return "PAIR";
    case TableKind::SEQ: return "SEQ";
  }
  return "?";
}

std::string to_string(TCStatus status) {
  switch (status) {
    case TCStatus::InIdeal: return "InIdeal";
    case TCStatus::InClosureLikely: return "InClosureLikely";
    case TCStatus::NotInClosure: return "NotInClosure";
    case TCStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

BigInt big_pow(const BigInt& base, int n) {
  BigInt r = 1;
  for (int k = 0; k < n; ++k) r *= base;
  return r;
}

BigRational abs_rational(const BigRational& r) { return r < 0 ? BigRational(-r) : r; }

// Runs fn(0..count-1) on up to `threads` threads. Returns the results before
// the first failing index; that failure is stored in `error`.
template <class T, class Fn>
std::vector<T> ordered_map(unsigned count, unsigned threads, Fn fn, std::exception_ptr& error) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  threads = std::max(1u, std::min(threads, count));
  if (threads == 1) {
    for (unsigned i = 0; i < count; ++i) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
        break;
      }
    }
  } else {
    std::atomic<unsigned> next{0};
    std::atomic<unsigned> first_failure{count};
    auto worker = [&] {
      for (;;) {
        unsigned i = next.fetch_add(1);
        if (i >= count || i > first_failure.load()) return;
        try {
          slots[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
          unsigned cur = first_failure.load();
          while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  for (unsigned i = 0; i < count; ++i) {
    if (errors[i]) {
      error = errors[i];
      break;
    }
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

// Rethrows a row failure. Budget and chain failures carry the rows done so far.
void rethrow_with_partial(const std::exception_ptr& error, const InvariantTable& partial) {
  if (!error) return;
  try {
    std::rethrow_exception(error);
  } catch (const PartialTableError&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::ChainExhausted) {
      std::string what = e.what();
      std::string prefix = std::string(to_string(e.kind())) + ": ";
      if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
      throw PartialTableError(e.kind(), what, partial);
    }
    throw;
  }
}

struct Row {
  BigInt length;
  unsigned t = 0;
  std::optional<QuotientIdeal> ideal;
};

InvariantTable make_table(TableKind kind, const PresentationPtr& R, int d) {
  InvariantTable t;
  t.kind = kind;
  t.p = R->characteristic();
  t.d = d;
  return t;
}

// Fills the table from rows 0..e_max and rethrows any failure.
std::vector<Row> fill(InvariantTable& table, unsigned e_max, unsigned threads,
                      const std::function<Row(unsigned)>& fn) {
  std::exception_ptr error;
  std::vector<Row> rows = ordered_map<Row>(e_max + 1, threads, fn, error);
  for (unsigned e = 0; e < rows.size(); ++e) table.add_row(e, rows[e].length, rows[e].t);
  rethrow_with_partial(error, table);
  return rows;
}

std::vector<QuotientIdeal> ideals_of(std::vector<Row>& rows) {
  std::vector<QuotientIdeal> out;
  for (auto& r : rows) out.push_back(std::move(*r.ideal));
  return out;
}

Polynomial delta_power(const Polynomial& delta, unsigned e) { return frobenius_power(delta, e); }

// Intersection of ideals all containing `base`; skips the linear algebra when
// one of them lies inside all the others.
QuotientIdeal intersect_all(const QuotientIdeal& base, std::span<const QuotientIdeal> ideals) {
  for (std::size_t i = ideals.size(); i-- > 0;) {
    bool smallest = true;
    for (std::size_t j = 0; j < ideals.size() && smallest; ++j) smallest = j == i || ideals[j].contains(ideals[i]);
    if (smallest) return ideals[i];
  }
  return ideal_intersect_over(base, ideals);
}

}  // namespace

void InvariantTable::add_row(unsigned e, BigInt length, unsigned t_stabilized) {
  TableRow row;
  row.e = e;
  row.q = big_pow(BigInt(p), static_cast<int>(e));
  row.normalized = BigRational(length, big_pow(row.q, d));
  row.length = std::move(length);
  row.t_stabilized = t_stabilized;
  rows.push_back(std::move(row));
}

bool InvariantTable::check_invariants() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TableRow& r = rows[i];
    if (i > 0 && r.e <= rows[i - 1].e) return false;
    if (r.q != big_pow(BigInt(p), static_cast<int>(r.e))) return false;
    if (r.normalized != BigRational(r.length, big_pow(r.q, d))) return false;
  }
  return true;
}

void require_m_primary(const QuotientIdeal& I, const std::string& what) {
  if (I.is_unit()) fail(ErrorKind::UnitIdeal, what + " is the unit ideal");
  if (!I.is_zero_dimensional()) fail(ErrorKind::NotZeroDimensional, what + " is not zero-dimensional");
  if (!I.is_m_primary()) fail(ErrorKind::NotMPrimary, what + " is not m-primary");
}

InvariantTable hk_function(const QuotientIdeal& I, unsigned e_max, unsigned threads) {
  require_m_primary(I, "ideal");
  InvariantTable table = make_table(TableKind::HK, I.presentation(), I.presentation()->dimension());
  fill(table, e_max, threads, [&](unsigned e) { return Row{bracket_power(I, e).colength(), 0, {}}; });
  return table;
}

Estimate hk_estimate(const InvariantTable& table) {
  const auto& rows = table.rows;
  if (rows.size() < 3) fail(ErrorKind::InsufficientSamples, "estimate needs at least three rows");
  const int d = table.d;
  const TableRow& a = rows[rows.size() - 2];
  const TableRow& b = rows.back();
  const TableRow& c = rows[rows.size() - 3];
  // With u = q^(d-1): l = eta q^d + alpha q^(d-1) becomes l/u = eta q + alpha.
  auto u = [d](const BigInt& q) {
    return d >= 1 ? BigRational(big_pow(q, d - 1)) : BigRational(BigInt(1), q);
  };
  BigRational ya = BigRational(a.length) / u(a.q);
  BigRational yb = BigRational(b.length) / u(b.q);
  Estimate est;
  est.eta = (yb - ya) / BigRational(b.q - a.q);
  est.alpha = ya - est.eta * BigRational(a.q);

  BigRational predicted = est.eta * BigRational(big_pow(c.q, d)) + est.alpha * u(c.q);
  est.residual = (abs_rational(BigRational(c.length) - predicted) / BigRational(big_pow(c.q, d))).convert_to<double>();

  BigRational c_hat = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    BigRational step = abs_rational(rows[i + 1].normalized - rows[i].normalized) * BigRational(rows[i].q);
    c_hat = std::max(c_hat, step);
  }
  est.envelope = (2 * c_hat / BigRational(b.q)).convert_to<double>();

  BigRational lo = rows[0].normalized, hi = rows[0].normalized;
  for (const auto& r : rows) {
    lo = std::min(lo, r.normalized);
    hi = std::max(hi, r.normalized);
  }
  BigRational excess = 0;
  if (est.eta < lo) excess = lo - est.eta;
  if (est.eta > hi) excess = est.eta - hi;
  est.range_excess = excess.convert_to<double>();

  est.error_bound = std::max({est.residual, est.envelope, est.range_excess});
  est.e_first = rows.front().e;
  est.e_last = b.e;
  est.model = "l_e = eta*q^" + std::to_string(d) + " + alpha*q^" + std::to_string(d - 1) + ", fit on e=" +
              std::to_string(a.e) + "," + std::to_string(b.e);
  return est;
}

Estimate fsig_estimate(const InvariantTable& table) { return hk_estimate(table); }

SOP find_sop(const PresentationPtr& R, std::uint64_t seed) {
  const int d = R->dimension();
  const std::size_t n = R->nvars();
  const RingPtr& S = R->ambient();
  SOP sop;
  sop.seed = seed;
  if (d == 0) return sop;
  auto accepts = [&](const std::vector<Polynomial>& elems) { return QuotientIdeal(R, elems).is_m_primary(); };

  if (seed == 0) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + d, true);
    do {
      std::vector<Polynomial> elems;
      for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) elems.push_back(Polynomial::variable(S, i));
      if (accepts(elems)) {
        sop.elements = std::move(elems);
        return sop;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }

  std::mt19937_64 rng(seed);
  const std::uint32_t p = R->characteristic();
  auto coeff = [&] { return static_cast<Coeff>(rng() % p); };
  constexpr int kAttempts = 64;
  for (int degree = 1; degree <= 2; ++degree) {
    std::vector<Monomial> support;
    for (std::size_t i = 0; i < n; ++i) support.push_back(Monomial::variable(i));
    if (degree == 2)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) support.push_back(Monomial::variable(i) * Monomial::variable(j));
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      std::vector<Polynomial> elems;
      for (int k = 0; k < d; ++k) {
        std::vector<Term> terms;
        for (const auto& m : support) terms.push_back({coeff(), m});
        elems.push_back(Polynomial::from_terms(S, std::move(terms)));
      }
      bool any_zero = false;
      for (const auto& f : elems) any_zero = any_zero || f.is_zero();
      if (!any_zero && accepts(elems)) {
        sop.elements = std::move(elems);
        return sop;
      }
    }
  }
  fail(ErrorKind::SOPNotFound, "no system of parameters found; supply one in the ring file");
}

FsigResult fsig_function_gorenstein(const PresentationPtr& R, const SOP& sop, unsigned e_max, unsigned threads) {
  if (static_cast<int>(sop.elements.size()) != R->dimension()) {
    fail(ErrorKind::InvalidArgument, "system of parameters must have dim R elements");
  }
  QuotientIdeal J(R, sop.elements);
  require_m_primary(J, "parameter ideal");
  Polynomial delta;
  try {
    delta = socle_generator(J);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotIrreducible) fail(ErrorKind::NotGorenstein, "parameter ideal is not irreducible");
    throw;
  }
  FsigResult result{make_table(TableKind::FSIG, R, R->dimension()), {}};
  auto rows = fill(result.table, e_max, threads, [&](unsigned e) {
    QuotientIdeal I = ideal_colon(bracket_power(J, e), delta_power(delta, e));
    return Row{I.colength(), 0, I};
  });
  result.ideals = ideals_of(rows);
  return result;
}

ChainFn parameter_power_chain(const PresentationPtr& R, const SOP& sop) {
  return [R, sop](unsigned t) {
    std::vector<Polynomial> gens;
    for (const auto& x : sop.elements) gens.push_back(pow(x, t));
    return QuotientIdeal(R, std::move(gens));
  };
}

namespace {

// J_t and its socle generator, computed once per t.
class ChainCache {
 public:
  explicit ChainCache(const ChainFn& chain) : chain_(chain) {}

  std::pair<QuotientIdeal, Polynomial> get(unsigned t) {
    std::lock_guard lock(mutex_);
    while (entries_.size() < t) {
      unsigned s = static_cast<unsigned>(entries_.size()) + 1;
      QuotientIdeal J = chain_(s);
      require_m_primary(J, "chain ideal J(" + std::to_string(s) + ")");
      if (!entries_.empty() && !entries_.back().first.contains(J)) {
        fail(ErrorKind::HypothesisViolation, "chain is not descending at t = " + std::to_string(s));
      }
      Polynomial delta = socle_generator(J);
      entries_.emplace_back(std::move(J), std::move(delta));
    }
    return entries_[t - 1];
  }

 private:
  const ChainFn& chain_;
  std::mutex mutex_;
  std::vector<std::pair<QuotientIdeal, Polynomial>> entries_;
};

}  // namespace

FsigResult chain_colon_table(TableKind kind, const PresentationPtr& R, const ChainFn& chain, unsigned t_max,
                             unsigned e_max, unsigned threads, const ColonTwist& extra) {
  ChainCache cache(chain);
  FsigResult result{make_table(kind, R, R->dimension()), {}};
  auto rows = fill(result.table, e_max, threads, [&](unsigned e) {
    std::optional<QuotientIdeal> a = extra(e);
    std::optional<BigInt> previous;
    for (unsigned t = 1; t <= t_max; ++t) {
      auto [J, delta] = cache.get(t);
      QuotientIdeal Jq = bracket_power(J, e);
      Polynomial dq = delta_power(delta, e);
      QuotientIdeal I;
      if (a) {
        std::vector<Polynomial> gens;
        for (const auto& g : a->generators()) gens.push_back(g * dq);
        I = ideal_colon_ideal(Jq, QuotientIdeal(R, std::move(gens)));
      } else {
        I = ideal_colon(Jq, dq);
      }
      BigInt len = I.colength();
      if (previous && *previous == len) return Row{len, t, I};
      previous = len;
    }
    fail(ErrorKind::ChainExhausted, "no stabilization within t <= " + std::to_string(t_max) + " at e = " +
                                        std::to_string(e));
  });
  result.ideals = ideals_of(rows);
  return result;
}

FsigResult fsig_function_chain(const PresentationPtr& R, const ChainFn& chain, unsigned t_max, unsigned e_max,
                               unsigned threads) {
  return chain_colon_table(TableKind::FSIG, R, chain, t_max, e_max, threads,
                     [](unsigned) { return std::optional<QuotientIdeal>(); });
}

InvariantTable relative_hk(const QuotientIdeal& I, const Polynomial& x, unsigned e_max, unsigned threads) {
  require_m_primary(I, "ideal");
  InvariantTable table = make_table(TableKind::RELHK, I.presentation(), I.presentation()->dimension());
  std::vector<Polynomial> xs{x};
  QuotientIdeal Ix = ideal_sum(I, xs);
  fill(table, e_max, threads, [&](unsigned e) {
    QuotientIdeal Iq = bracket_power(I, e);
    BigInt difference = Iq.colength() - bracket_power(Ix, e).colength();
    BigInt colon = ideal_colon(Iq, frobenius_power(x, e)).colength();
    if (difference != colon) {
      fail(ErrorKind::IdentityViolation, "length difference " + difference.str() + " != colon length " +
                                             colon.str() + " at e = " + std::to_string(e));
    }
    return Row{colon, 0, {}};
  });
  return table;
}

TCVerdict tc_membership(const QuotientIdeal& I, const Polynomial& x, unsigned e_max, double tau, unsigned threads) {
  require_m_primary(I, "ideal");
  TCVerdict v;
  if (I.contains(x)) {
    v.status = TCStatus::InIdeal;
    v.reason = "element lies in the ideal";
    return v;
  }
  if (e_max < 2) fail(ErrorKind::InsufficientSamples, "tight-closure test needs e_max >= 2");
  try {
    v.table = relative_hk(I, x, e_max, threads);
    v.estimate = hk_estimate(*v.table);
    const auto& rows = v.table->rows;
    BigRational lowest = rows.front().normalized;
    for (const auto& r : rows) lowest = std::min(lowest, r.normalized);
    bool bounded_away = v.estimate->eta_value() >= tau && lowest.convert_to<double>() >= tau;
    bool trend = rows.back().normalized <= rows.front().normalized;
    if (bounded_away && trend) {
      v.status = TCStatus::NotInClosure;
      v.reason = "relative Hilbert-Kunz limit estimate is at least tau";
      return v;
    }
    std::vector<QuotientIdeal> colons;
    for (unsigned e = 0; e <= e_max; ++e) colons.push_back(ideal_colon(bracket_power(I, e), frobenius_power(x, e)));
    auto K = [&](unsigned E) {
      return intersect_all(bracket_power(I, E), std::span<const QuotientIdeal>(colons.data(), E + 1));
    };
    QuotientIdeal last = K(e_max);
    v.multiplier_stabilized = K(e_max - 1) == last;
    v.multiplier = last;
    if (!last.is_zero() && v.multiplier_stabilized) {
      v.status = TCStatus::InClosureLikely;
      v.reason = "nonzero common multiplier ideal stabilized";
    } else {
      v.status = TCStatus::Inconclusive;
      v.reason = "neither criterion met at this e_max";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    v.status = TCStatus::Inconclusive;
    v.budget_exceeded = true;
    v.reason = e.what();
  }
  return v;
}

namespace {

QuotientIdeal truncated_prime(const QuotientIdeal& I, std::uint32_t p, unsigned E) {
  std::int64_t bound = prime_power(p, E - 1) - 1;
  const PresentationPtr& R = I.presentation();
  std::vector<Polynomial> gens;
  for (const auto& g : I.lift().gb().elements())
    if (g.total_degree() <= bound && !R->defining_ideal().contains(g)) gens.push_back(g);
  return QuotientIdeal(R, std::move(gens));
}

}  // namespace

SplittingPrimeResult splitting_prime_probe(const FsigResult& fsig) {
  const auto& rows = fsig.table.rows;
  if (rows.size() < 3 || fsig.ideals.size() != rows.size()) {
    fail(ErrorKind::InsufficientSamples, "splitting prime probe needs rows e = 0..E with E >= 2");
  }
  if (rows[1].length == 0) fail(ErrorKind::NotFPure, "a_1 = 0");
  const unsigned E = rows.back().e;
  const std::uint32_t p = fsig.table.p;
  SplittingPrimeResult out;
  out.ideal = truncated_prime(fsig.ideals[E], p, E);
  out.stabilized = truncated_prime(fsig.ideals[E - 1], p, E - 1) == out.ideal;
  out.n_est = krull_dimension(out.ideal.lift());
  InvariantTable rescaled = fsig.table;
  rescaled.d = out.n_est;
  rescaled.rows.clear();
  for (const auto& r : rows) rescaled.add_row(r.e, r.length, r.t_stabilized);
  out.rf = hk_estimate(rescaled);
  return out;
}

SequenceResult sequence_limit(const PresentationPtr& R, const std::function<QuotientIdeal(unsigned e)>& seq,
                              unsigned e_max, std::optional<int> d_override, unsigned threads) {
  if (e_max < 2) fail(ErrorKind::InsufficientSamples, "sequence limit needs e_max >= 2");
  QuotientIdeal m = R->maximal_ideal();
  SequenceResult out;
  out.table = make_table(TableKind::SEQ, R, d_override.value_or(R->dimension()));
  auto rows = fill(out.table, e_max, threads, [&](unsigned e) {
    QuotientIdeal I = seq(e);
    require_same_presentation(m, I);
    if (!I.contains(bracket_power(m, e))) {
      fail(ErrorKind::HypothesisViolation, "m^[q] is not contained in I_" + std::to_string(e));
    }
    return Row{I.colength(), 0, I};
  });
  std::vector<QuotientIdeal> ideals = ideals_of(rows);
  out.estimate = hk_estimate(out.table);
  auto K = [&](unsigned E) {
    return intersect_all(bracket_power(m, E), std::span<const QuotientIdeal>(ideals.data(), E + 1));
  };
  out.intersection = K(e_max);
  out.intersection_stabilized = K(e_max - 1) == out.intersection;
  return out;
}

InvariantTable fedder_hypersurface_oracle(const PresentationPtr& R, unsigned e_max, unsigned threads) {
  if (!R->is_hypersurface()) fail(ErrorKind::NotHypersurface, "defining ideal is not principal");
  const Polynomial f = R->defining_ideal().gb().elements().front();
  PresentationPtr S = RingPresentation::create(R->ambient(), {}, R->budget());
  QuotientIdeal mS = S->maximal_ideal();
  InvariantTable table = make_table(TableKind::FSIG, R, R->dimension());
  std::vector<Polynomial> fs{f};
  fill(table, e_max, threads, [&](unsigned e) {
    std::uint64_t q = static_cast<std::uint64_t>(prime_power(R->characteristic(), e));
    QuotientIdeal colon = ideal_colon(bracket_power(mS, e), pow(f, q - 1));
    return Row{ideal_sum(colon, fs).colength(), 0, {}};
  });
  return table;
}

}  // namespace frob
