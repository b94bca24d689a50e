#include "frob/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <optional>

#include "frob/errors.hpp"
#include "frob/quotient.hpp"

namespace frob {

namespace {

using DivMask = std::uint32_t;

DivMask divmask(const Monomial& m, std::size_t n) noexcept {
  DivMask mask = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (m[i] != 0) mask |= DivMask{1} << i;
  return mask;
}

struct Reducer {
  const Polynomial* poly;
  Monomial lead;
  DivMask mask;
  Coeff inv_lead;
};

class ReducerSet {
 public:
  explicit ReducerSet(const RingPtr& ring) : ring_(ring) {}

  void add(const Polynomial& g) {
    const PrimeField& F = ring_->field();
    items_.push_back({&g, g.leading_monomial(), divmask(g.leading_monomial(), ring_->nvars()),
                      F.inv(g.leading_coeff())});
  }

  const Reducer* find(const Monomial& m) const noexcept {
    const std::size_t n = ring_->nvars();
    DivMask mm = divmask(m, n);
    for (const auto& r : items_) {
      if ((r.mask & ~mm) != 0) continue;
      if (r.lead.degree() > m.degree()) continue;
      if (r.lead.divides(m, n)) return &r;
    }
    return nullptr;
  }

  bool empty() const noexcept { return items_.empty(); }

 private:
  RingPtr ring_;
  std::vector<Reducer> items_;
};

// Full reduction of f. The work list is kept ascending so the current
// leading term sits at the back.
// `steps`, when given, counts division steps and is checked against `limit`.
Polynomial reduce_full(const Polynomial& f, const ReducerSet& reducers, std::uint64_t* steps = nullptr,
                       std::uint64_t limit = 0) {
  const RingPtr& ring = f.ring();
  if (f.is_zero() || reducers.empty()) return f;
  const PolyRing& R = *ring;
  const PrimeField& F = R.field();
  auto ft = f.terms();
  std::vector<Term> work(ft.rbegin(), ft.rend());
  std::vector<Term> merged;
  std::vector<Term> out;
  while (!work.empty()) {
    const Term lt = work.back();
    const Reducer* r = reducers.find(lt.mono);
    if (!r) {
      out.push_back(lt);
      work.pop_back();
      continue;
    }
    work.pop_back();
    if (steps && ++*steps > limit && limit) {
      fail(ErrorKind::BudgetExceeded, "reduction budget of " + std::to_string(limit) + " exhausted");
    }
    Coeff factor = F.neg(F.mul(lt.coeff, r->inv_lead));
    Monomial shift = divide(lt.mono, r->lead);
    auto gt = r->poly->terms();
    // Merge work (ascending) with factor * shift * tail(g) (descending).
    merged.clear();
    merged.reserve(work.size() + gt.size());
    std::size_t i = 0;
    std::size_t j = gt.size();  // walk g's tail from its smallest term
    while (i < work.size() || j > 1) {
      if (j <= 1) {
        merged.push_back(work[i++]);
        continue;
      }
      Monomial gm = gt[j - 1].mono * shift;
      int cmp = i < work.size() ? R.compare(work[i].mono, gm) : 1;
      if (cmp < 0) {
        merged.push_back(work[i++]);
      } else if (cmp > 0) {
        merged.push_back({F.mul(gt[j - 1].coeff, factor), gm});
        --j;
      } else {
        Coeff v = F.add(work[i].coeff, F.mul(gt[j - 1].coeff, factor));
        if (v != 0) merged.push_back({v, gm});
        ++i;
        --j;
      }
    }
    work.swap(merged);
  }
  return Polynomial::from_sorted_terms(ring, std::move(out));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const PrimeField& F = f.ring()->field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(F.inv(f.leading_coeff()), divide(l, f.leading_monomial()));
  return sub_mul(a, F.inv(g.leading_coeff()), divide(l, g.leading_monomial()), g);
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GbBudget& budget)
      : ring_(std::move(ring)), budget_(budget), start_(std::chrono::steady_clock::now()) {}

  GroebnerBasis run(std::span<const Polynomial> generators) {
    std::vector<Polynomial> inputs;
    for (const auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) fail(ErrorKind::RingMismatch, "generators from different rings");
      if (!g.is_zero()) inputs.push_back(g.monic());
    }
    std::sort(inputs.begin(), inputs.end(), [this](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (const auto& f : inputs) {
      Polynomial h = reduce(f);
      if (!h.is_zero() && add(h.monic())) return unit();
    }
    while (!pairs_.empty()) {
      CriticalPair pair = pop_pair();
      ++stats_.pairs_reduced;
      if (budget_.max_pairs && stats_.pairs_reduced > budget_.max_pairs) {
        fail(ErrorKind::BudgetExceeded, "S-pair budget of " + std::to_string(budget_.max_pairs) + " exhausted");
      }
      Polynomial h = reduce(s_polynomial(polys_[pair.i], polys_[pair.j]));
      if (!h.is_zero() && add(h.monic())) return unit();
    }
    return finish();
  }

 private:
  Polynomial reduce(const Polynomial& f) {
    if (budget_.max_seconds > 0) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds) {
        fail(ErrorKind::BudgetExceeded, "wall-clock budget exhausted");
      }
    }
    ReducerSet reducers(ring_);
    for (std::size_t k : basis_) reducers.add(polys_[k]);
    return reduce_full(f, reducers, &stats_.reductions, budget_.max_reductions);
  }

  // Gebauer–Möller update. Returns true when h is a unit.
  bool add(Polynomial h) {
    if (h.is_constant()) return true;
    const std::size_t n = ring_->nvars();
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& hl = polys_[hi].leading_monomial();

    // Pairs (h, g) surviving criterion M and F.
    std::vector<std::size_t> candidates(basis_.begin(), basis_.end());
    std::vector<Monomial> cand_lcm;
    for (std::size_t g : candidates) cand_lcm.push_back(lcm(hl, polys_[g].leading_monomial()));
    std::vector<std::size_t> kept;
    std::vector<Monomial> kept_lcm;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Monomial& l = cand_lcm[a];
      bool is_coprime = coprime(hl, polys_[candidates[a]].leading_monomial(), n);
      bool dominated = false;
      if (!is_coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
          dominated = cand_lcm[b].divides(l, n);
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) dominated = kept_lcm[b].divides(l, n);
      }
      if (!dominated) {
        kept.push_back(candidates[a]);
        kept_lcm.push_back(l);
      }
    }
    // Criterion B on the old pairs.
    std::vector<CriticalPair> survivors;
    survivors.reserve(pairs_.size());
    for (auto& pr : pairs_) {
      bool drop = hl.divides(pr.lcm, n) &&
                  !(lcm(polys_[pr.i].leading_monomial(), hl) == pr.lcm) &&
                  !(lcm(polys_[pr.j].leading_monomial(), hl) == pr.lcm);
      if (!drop) survivors.push_back(std::move(pr));
    }
    pairs_.swap(survivors);
    // Product criterion on the new ones.
    for (std::size_t a = 0; a < kept.size(); ++a) {
      ++stats_.pairs_considered;
      if (coprime(hl, polys_[kept[a]].leading_monomial(), n)) continue;
      pairs_.push_back({kept[a], hi, kept_lcm[a]});
    }
    std::vector<std::size_t> next;
    for (std::size_t g : basis_)
      if (!hl.divides(polys_[g].leading_monomial(), n)) next.push_back(g);
    next.push_back(hi);
    basis_.swap(next);
    return false;
  }

  CriticalPair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      int cmp = a.lcm.degree() != b.lcm.degree() ? (a.lcm.degree() < b.lcm.degree() ? -1 : 1)
                                                 : ring_->compare(a.lcm, b.lcm);
      if (cmp < 0 || (cmp == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    CriticalPair out = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return out;
  }

  GroebnerBasis unit() {
    std::vector<Polynomial> one{Polynomial::constant(ring_, 1)};
    return GroebnerBasis(ring_, std::move(one), stats_);
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> minimal;
    for (std::size_t g : basis_) minimal.push_back(polys_[g]);
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      ReducerSet others(ring_);
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.add(minimal[b]);
      reduced.push_back(reduce_full(minimal[a], others).monic());
    }
    return GroebnerBasis(ring_, std::move(reduced), stats_);
  }

  RingPtr ring_;
  GbBudget budget_;
  std::chrono::steady_clock::time_point start_;
  GbStats stats_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> basis_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, GbStats stats)
    : ring_(std::move(ring)), elements_(std::move(elements)), stats_(stats) {
  const PolyRing& R = *ring_;
  std::sort(elements_.begin(), elements_.end(), [&R](const Polynomial& a, const Polynomial& b) {
    return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
}

bool GroebnerBasis::is_monomial_ideal() const noexcept {
  return std::all_of(elements_.begin(), elements_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const GbBudget& budget) {
  if (generators.empty()) fail(ErrorKind::InvalidArgument, "buchberger needs a ring; pass at least one generator");
  return Buchberger(generators.front().ring(), budget).run(generators);
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GbBudget& budget) {
  if (generators.empty()) fail(ErrorKind::InvalidArgument, "buchberger needs a ring; pass at least one generator");
  RingPtr ring = generators.front().ring()->order() == order ? generators.front().ring()
                                                             : with_order(generators.front().ring(), order);
  std::vector<Polynomial> moved;
  moved.reserve(generators.size());
  for (const auto& g : generators) moved.push_back(same_ring(g.ring(), ring) ? g : g.in_ring(ring));
  return Buchberger(ring, budget).run(moved);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, std::span<const Polynomial>(gb.elements()));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> reducers) {
  if (f.is_zero() || reducers.empty()) return f;
  ReducerSet set(f.ring());
  for (const auto& g : reducers) {
    if (!same_ring(g.ring(), f.ring())) fail(ErrorKind::RingMismatch, "normal form across rings");
    if (!g.is_zero()) set.add(g);
  }
  return reduce_full(f, set);
}

// ---------------------------------------------------------------------------

struct IdealHandle::State {
  RingPtr ring;
  std::vector<Polynomial> generators;
  GbBudget budget;

  std::mutex gb_mutex;
  std::atomic<bool> gb_ready{false};
  std::optional<GroebnerBasis> gb;

  std::mutex sb_mutex;
  std::atomic<bool> sb_ready{false};
  std::unique_ptr<StandardBasis> sb;
};

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> generators, GbBudget budget)
    : state_(std::make_shared<State>()) {
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) fail(ErrorKind::RingMismatch, "ideal generator from a different ring");
  }
  state_->ring = std::move(ring);
  state_->generators = std::move(generators);
  state_->budget = budget;
}

IdealHandle IdealHandle::from_groebner(GroebnerBasis gb) {
  IdealHandle h(gb.ring(), gb.elements());
  h.state_->gb.emplace(std::move(gb));
  h.state_->gb_ready.store(true, std::memory_order_release);
  return h;
}

const RingPtr& IdealHandle::ring() const noexcept { return state_->ring; }
const std::vector<Polynomial>& IdealHandle::generators() const noexcept { return state_->generators; }
bool IdealHandle::has_gb() const noexcept { return state_ && state_->gb_ready.load(std::memory_order_acquire); }

const GroebnerBasis& IdealHandle::gb() const {
  State& s = *state_;
  if (s.gb_ready.load(std::memory_order_acquire)) return *s.gb;
  std::lock_guard lock(s.gb_mutex);
  if (!s.gb_ready.load(std::memory_order_relaxed)) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : s.generators)
      if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) {
      s.gb.emplace(s.ring, std::vector<Polynomial>{});
    } else {
      s.gb.emplace(buchberger(nonzero, s.budget));
    }
    s.gb_ready.store(true, std::memory_order_release);
  }
  return *s.gb;
}

const StandardBasis& IdealHandle::standard_basis() const {
  State& s = *state_;
  if (s.sb_ready.load(std::memory_order_acquire)) return *s.sb;
  const GroebnerBasis& basis = gb();
  std::lock_guard lock(s.sb_mutex);
  if (!s.sb_ready.load(std::memory_order_relaxed)) {
    s.sb = std::make_unique<StandardBasis>(basis);
    s.sb_ready.store(true, std::memory_order_release);
  }
  return *s.sb;
}

bool IdealHandle::contains(const Polynomial& f) const { return normal_form(f, gb()).is_zero(); }

bool IdealHandle::contains(const IdealHandle& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool IdealHandle::is_zero_dimensional() const { return frob::is_zero_dimensional(gb()); }

bool operator==(const IdealHandle& a, const IdealHandle& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return a.gb() == b.gb();
}

// ---------------------------------------------------------------------------

bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return true;
  const std::size_t n = gb.ring()->nvars();
  std::vector<bool> has_pure(n, false);
  for (const auto& g : gb.elements()) {
    const Monomial& m = g.leading_monomial();
    int support = -1, count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) {
        support = static_cast<int>(i);
        ++count;
      }
    }
    if (count == 1) has_pure[support] = true;
  }
  return std::all_of(has_pure.begin(), has_pure.end(), [](bool b) { return b; });
}

namespace {

std::vector<std::int32_t> pure_power_bounds(const std::vector<Monomial>& lms, std::size_t n) {
  std::vector<std::int32_t> bound(n, -1);
  for (const auto& m : lms) {
    int support = -1, count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) {
        support = static_cast<int>(i);
        ++count;
      }
    }
    if (count == 1 && (bound[support] < 0 || m[support] < bound[support])) bound[support] = m[support];
  }
  return bound;
}

// Counts monomials with fixed prefix (variables < k) that no alive leading
// monomial divides; "alive" means it already divides the prefix.
std::uint64_t count_staircase(std::size_t k, std::size_t n, const std::vector<const Monomial*>& alive,
                              const std::vector<std::int32_t>& bounds) {
  if (k + 1 == n) {
    std::int32_t limit = bounds[k];
    for (const Monomial* g : alive) limit = std::min(limit, (*g)[k]);
    return static_cast<std::uint64_t>(limit);
  }
  std::vector<const Monomial*> sorted(alive);
  std::sort(sorted.begin(), sorted.end(), [k](const Monomial* a, const Monomial* b) { return (*a)[k] < (*b)[k]; });
  std::uint64_t total = 0;
  std::vector<const Monomial*> next;
  std::size_t take = 0;
  for (std::int32_t a = 0; a < bounds[k]; ++a) {
    while (take < sorted.size() && (*sorted[take])[k] <= a) ++take;
    next.assign(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(take));
    // A generator that is a pure power in variables <= k already kills this prefix.
    bool dead = false;
    for (const Monomial* g : next) {
      bool only_prefix = true;
      for (std::size_t i = k + 1; i < n && only_prefix; ++i) only_prefix = (*g)[i] == 0;
      if (only_prefix) {
        dead = true;
        break;
      }
    }
    if (dead) break;
    std::uint64_t c = count_staircase(k + 1, n, next, bounds);
    if (total > UINT64_MAX - c) fail(ErrorKind::BudgetExceeded, "colength exceeds 2^64");
    total += c;
  }
  return total;
}

}  // namespace

BigInt colength(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return 0;
  if (!is_zero_dimensional(gb)) {
    fail(ErrorKind::NotZeroDimensional, "some variable has no pure power among the leading monomials");
  }
  const std::size_t n = gb.ring()->nvars();
  std::vector<Monomial> lms = gb.leading_monomials();
  std::vector<std::int32_t> bounds = pure_power_bounds(lms, n);
  std::vector<const Monomial*> alive;
  alive.reserve(lms.size());
  for (const auto& m : lms) alive.push_back(&m);
  return BigInt(count_staircase(0, n, alive, bounds));
}

BigInt colength(const IdealHandle& ideal) { return colength(ideal.gb()); }

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) fail(ErrorKind::UnitIdeal, "krull dimension of the unit ideal");
  const std::size_t n = gb.ring()->nvars();
  std::vector<DivMask> supports;
  for (const auto& g : gb.elements()) supports.push_back(divmask(g.leading_monomial(), n));
  int best = 0;
  const DivMask full = n == 32 ? ~DivMask{0} : ((DivMask{1} << n) - 1);
  for (DivMask subset = 0;; ++subset) {
    int size = __builtin_popcount(subset);
    if (size > best) {
      bool independent = std::none_of(supports.begin(), supports.end(),
                                      [subset](DivMask s) { return (s & ~subset) == 0; });
      if (independent) best = size;
    }
    if (subset == full) break;
  }
  return best;
}

int krull_dimension(const IdealHandle& ideal) { return krull_dimension(ideal.gb()); }

}  // namespace frob
