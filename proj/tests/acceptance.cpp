// Acceptance checks; prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "frob/cli.hpp"
#include "frob/ideal_ops.hpp"
#include "frob/invariants.hpp"
#include "frob/pairs.hpp"
#include "frob/ringfile.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace frob;
using frob::test::Ps;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << x;
  return s.str();
}

PresentationPtr ring(std::uint32_t p, std::vector<std::string> vars, const std::string& rel = "") {
  auto S = make_ring(p, std::move(vars));
  return RingPresentation::create(S, Ps(S, rel));
}

std::vector<BigInt> lengths(const InvariantTable& t) {
  std::vector<BigInt> out;
  for (const auto& r : t.rows) out.push_back(r.length);
  return out;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

unsigned default_emax(std::uint32_t p) { return p <= 3 ? 3 : 2; }

Outcome criterion_regular() {
  Outcome o;
  auto t0 = Clock::now();
  int tables = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int d = 1; d <= 3; ++d) {
      std::vector<std::string> vars;
      for (int i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i + 1));
      auto R = ring(p, vars);
      unsigned emax = (p == 5 && d == 3) ? 2 : 3;
      InvariantTable hk = hk_function(R->maximal_ideal(), emax);
      InvariantTable fs = fsig_function_gorenstein(R, find_sop(R), emax).table;
      std::string tag = "p=" + std::to_string(p) + " d=" + std::to_string(d);
      for (const InvariantTable* t : {&hk, &fs}) {
        ++tables;
        o.check(t->rows.size() == emax + 1, tag + " row count");
        for (const auto& r : t->rows) {
          o.check(r.length == boost::multiprecision::pow(r.q, static_cast<unsigned>(d)), tag + " row e=" + std::to_string(r.e));
        }
        Estimate est = hk_estimate(*t);
        o.check(est.eta == 1 && est.error_bound == 0, tag + " estimate");
      }
    }
  }
  double secs = seconds_since(t0);
  o.check(secs < 60, "runtime " + fmt(secs) + " s");
  o.detail = std::to_string(tables) + " tables with rows q^d, estimates 1 with error_bound 0, " + fmt(secs, 2) + " s";
  return o;
}

Polynomial random_poly(const RingPtr& S, std::mt19937_64& rng, int max_deg, int terms) {
  const std::uint32_t p = S->characteristic();
  Polynomial f = Polynomial::constant(S, 0);
  for (int k = 0; k < terms; ++k) {
    Polynomial m = Polynomial::constant(S, 1 + static_cast<std::int64_t>(rng() % (p - 1)));
    int deg = 1 + static_cast<int>(rng() % max_deg);
    for (int j = 0; j < deg; ++j) m = m * Polynomial::variable(S, rng() % S->nvars());
    f = f + m;
  }
  return f;
}

Outcome criterion_colon_identity() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::vector<PresentationPtr> rings{ring(2, {"x", "y"}), ring(3, {"x", "y", "z"}, "x*y - z^2"),
                                     ring(3, {"x", "y"}, "y^2 - x^3"), ring(5, {"x", "y"}),
                                     ring(2, {"x", "y", "z"}, "x*y")};
  int instances = 0;
  int checks = 0;
  for (const auto& R : rings) {
    const auto& S = R->ambient();
    int made = 0;
    while (made < 12) {
      std::vector<Polynomial> gens;
      for (std::size_t i = 0; i < R->nvars(); ++i) gens.push_back(pow(Polynomial::variable(S, i), 1 + rng() % 3));
      gens.push_back(random_poly(S, rng, 2, 2));
      QuotientIdeal I(R, gens);
      Polynomial x = random_poly(S, rng, 2, 1 + static_cast<int>(rng() % 2));
      if (x.is_zero() || I.contains(x)) continue;
      ++made;
      ++instances;
      QuotientIdeal Ix = ideal_sum(I, std::vector<Polynomial>{x});
      for (unsigned e = 1; e <= 2; ++e) {
        BigInt lhs = bracket_power(I, e).colength() - bracket_power(Ix, e).colength();
        BigInt rhs = ideal_colon(bracket_power(I, e), frobenius_power(x, e)).colength();
        ++checks;
        o.check(lhs == rhs, I.to_string() + " x=" + x.to_string() + " e=" + std::to_string(e));
      }
    }
  }
  o.check(instances >= 50, "instance count");
  o.detail = std::to_string(instances) + " random (R, I, x) over " + std::to_string(rings.size()) + " rings, " +
             std::to_string(checks) + " exact identities at e = 1, 2";
  return o;
}

Outcome criterion_cross_oracle() {
  Outcome o;
  struct Case {
    std::string name;
    PresentationPtr R;
    unsigned emax;
  };
  std::vector<Case> cases{{"A1 p=3", ring(3, {"x", "y", "z"}, "x*y - z^2"), 2},
                          {"F2[x,y]/(xy)", ring(2, {"x", "y"}, "x*y"), 3}};
  std::string detail;
  for (const auto& c : cases) {
    SOP sop = find_sop(c.R);
    auto gor = lengths(fsig_function_gorenstein(c.R, sop, c.emax).table);
    auto chn = lengths(fsig_function_chain(c.R, parameter_power_chain(c.R, sop), 8, c.emax).table);
    auto fed = lengths(fedder_hypersurface_oracle(c.R, c.emax));
    o.check(gor == chn && gor == fed, c.name + ": " + join(gor) + " / " + join(chn) + " / " + join(fed));
    detail += (detail.empty() ? "" : "; ") + c.name + " rows " + join(gor) + " on all three paths";
  }
  o.detail = detail;
  return o;
}

Outcome criterion_a1() {
  Outcome o;
  auto t0 = Clock::now();
  auto R = ring(3, {"x", "y", "z"}, "x*y - z^2");
  InvariantTable hk = hk_function(R->maximal_ideal(), 3);
  InvariantTable fs = fsig_function_gorenstein(R, SOP{Ps(R->ambient(), "x, y"), 0}, 3).table;
  for (unsigned e = 0; e <= 3; ++e) {
    std::int64_t q = prime_power(3, e);
    o.check(hk.rows[e].length == oracle::a1_hilbert_kunz(q), "hk row e=" + std::to_string(e) + " vs lattice oracle");
    o.check(fs.rows[e].length == oracle::a1_splitting_number(q), "fsig row e=" + std::to_string(e) + " vs lattice oracle");
  }
  // Fixture pinned from the lattice oracle.
  auto pinned = nlohmann::json::parse(std::ifstream("corpus/expected/a1_p3.hk.json"));
  for (unsigned e = 0; e <= 3; ++e) {
    o.check(pinned["tables"][0]["rows"][e]["length"].get<std::string>() == hk.rows[e].length.str(), "pinned fixture");
  }
  double eh = hk_estimate(hk).eta_value();
  double es = fsig_estimate(fs).eta_value();
  o.check(std::abs(eh - 1.5) <= 0.05, "hk estimate " + fmt(eh));
  o.check(std::abs(es - 0.5) <= 0.05, "fsig estimate " + fmt(es));
  double secs = seconds_since(t0);
  o.check(secs < 300, "runtime");
  o.detail = "rows match lattice oracle (hk " + join(lengths(hk)) + ", fsig " + join(lengths(fs)) +
             "); e_HK ~ " + fmt(eh) + ", s ~ " + fmt(es) + ", " + fmt(secs, 2) + " s";
  return o;
}

Outcome criterion_degenerate() {
  Outcome o;
  std::string detail;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = ring(p, {"x"}, "x^2");
    InvariantTable t = fsig_function_gorenstein(R, find_sop(R), default_emax(p)).table;
    double s = fsig_estimate(t).eta_value();
    o.check(s == 0, "nonreduced p=" + std::to_string(p) + " estimate " + fmt(s));
    if (p == 3) detail += "F_3[x]/(x^2) rows " + join(lengths(t)) + ", s = " + fmt(s);
  }
  auto R = ring(3, {"x", "y"});
  auto seq = [&](unsigned e) { return bracket_power(R->maximal_ideal(), e / 2); };
  SequenceResult r = sequence_limit(R, seq, 4);
  double lim = r.estimate.eta_value();
  o.check(lim <= 0.02, "sequence estimate " + fmt(lim));
  // The finite intersection is m^[p^floor(E/2)] and keeps shrinking.
  bool shrinking = true;
  for (unsigned E : {2u, 4u}) {
    SequenceResult rE = sequence_limit(R, seq, E);
    shrinking = shrinking && !rE.intersection_stabilized && rE.intersection == bracket_power(R->maximal_ideal(), E / 2);
  }
  o.check(shrinking, "sequence intersection does not shrink");
  detail += "; m^[3^floor(e/2)] rows " + join(lengths(r.table)) + ", limit ~ " + fmt(lim) +
            ", intersection over e <= E equals m^[3^floor(E/2)] and drops at every even E";
  o.detail = detail;
  return o;
}

std::vector<std::filesystem::path> corpus_rings() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator("corpus"))
    if (entry.path().extension() == ".ring") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome criterion_inequalities() {
  Outcome o;
  int checks = 0;
  auto files = corpus_rings();
  for (const auto& path : files) {
    RingFile rf = parse_ring_file(path.string());
    const PresentationPtr& R = rf.presentation;
    unsigned emax = default_emax(rf.p);
    SOP sop = rf.sop ? SOP{*rf.sop, 0} : find_sop(R);
    FsigResult fs = fsig_function_gorenstein(R, sop, emax);
    InvariantTable hk = hk_function(R->maximal_ideal(), emax);
    const std::string name = path.filename().string();
    for (unsigned e = 0; e <= emax; ++e) {
      ++checks;
      o.check(fs.table.rows[e].length <= hk.rows[e].length, name + " a_e <= l(R/m^[q]) at e=" + std::to_string(e));
    }
    QuotientIdeal J(R, sop.elements);
    for (const QuotientIdeal& I : {J, bracket_power(J, 1)}) {
      Polynomial x = socle_generator(I);
      for (unsigned e = 0; e <= emax; ++e) {
        QuotientIdeal colon = ideal_colon(bracket_power(I, e), frobenius_power(x, e));
        checks += 2;
        o.check(fs.ideals[e].contains(colon), name + " containment at e=" + std::to_string(e));
        o.check(fs.table.rows[e].length <= colon.colength(), name + " colength dominance at e=" + std::to_string(e));
      }
    }
  }
  o.detail = std::to_string(checks) + " exact checks over " + std::to_string(files.size()) + " corpus rings";
  return o;
}

Outcome criterion_pairs() {
  Outcome o;
  std::string detail;
  // xi = 0 against the plain chain table.
  {
    auto R = ring(5, {"x"});
    auto a1 = ring(3, {"x", "y", "z"}, "x*y - z^2");
    int agree = 0;
    for (const auto& [S, emax] : {std::pair{R, 3u}, std::pair{a1, 2u}}) {
      SOP sop = find_sop(S);
      ChainFn chain = parameter_power_chain(S, sop);
      auto plain = lengths(fsig_function_chain(S, chain, 8, emax).table);
      auto pair = lengths(pair_fsig_function(PairSpec{S, S->maximal_ideal(), 0}, chain, 8, emax));
      o.check(plain == pair, "xi = 0 differs from the chain table");
      agree += plain == pair;
    }
    detail += "xi = 0 equals plain table on " + std::to_string(agree) + "/2 rings";
  }
  auto R = ring(5, {"x"});
  QuotientIdeal a(R, Ps(R->ambient(), "x"));
  ChainFn chain = parameter_power_chain(R, find_sop(R));
  {
    InvariantTable t = pair_fsig_function(PairSpec{R, a, BigRational(1, 2)}, chain, 8, 3);
    for (const auto& row : t.rows) {
      o.check(row.length == oracle::principal_pair_length(row.q.convert_to<std::int64_t>(), 1, 2), "xi = 1/2 row vs oracle");
    }
    double s = pair_fsig_estimate(t).eta_value();
    o.check(std::abs(s - 0.5) <= 0.05, "xi = 1/2 estimate " + fmt(s));
    detail += "; F_5[x], a = (x), xi = 1/2: rows " + join(lengths(t)) + " match oracle, estimate " + fmt(s);
  }
  // Rows for xi >= s (number of generators of a), e >= 1. The e = 0 row uses a^0 = R.
  auto R2 = ring(3, {"x", "y"});
  struct Big {
    std::string name;
    PresentationPtr R;
    QuotientIdeal a;
    BigRational xi;
    bool boundary;
  };
  std::vector<Big> bigs{{"F_5[x], a = (x), xi = 1", R, a, 1, true},
                        {"F_5[x], a = (x), xi = 3/2", R, a, BigRational(3, 2), false},
                        {"F_5[x], a = (x), xi = 2", R, a, 2, false},
                        {"F_3[x,y], a = m, xi = 2", R2, R2->maximal_ideal(), 2, true},
                        {"F_3[x,y], a = m, xi = 5/2", R2, R2->maximal_ideal(), BigRational(5, 2), false}};
  int above = 0;
  std::string boundary_rows;
  for (const auto& b : bigs) {
    ChainFn ch = parameter_power_chain(b.R, find_sop(b.R));
    InvariantTable t = pair_fsig_function(PairSpec{b.R, b.a, b.xi}, ch, 8, b.R->nvars() == 1 ? 3 : 2);
    bool zero = true;
    for (const auto& row : t.rows)
      if (row.e >= 1 && row.length != 0) zero = false;
    o.check(zero, b.name + " rows " + join(lengths(t)));
    if (b.boundary) {
      boundary_rows += (boundary_rows.empty() ? "" : "; ") + b.name + ": " + join(lengths(t));
    } else {
      above += zero;
    }
  }
  detail += "; xi > s: rows zero for e >= 1 in " + std::to_string(above) + "/3 tables; xi = s: " + boundary_rows;
  o.detail = detail;
  return o;
}

struct ManifestEntry {
  std::string fixture;
  int code;
  std::vector<std::string> args;
};

std::vector<ManifestEntry> manifest() {
  std::vector<ManifestEntry> out;
  std::ifstream in("corpus/expected/manifest.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, '|')) parts.push_back(part);
    ManifestEntry m;
    std::stringstream name(parts.at(0)), code(parts.at(1)), args(parts.at(2));
    name >> m.fixture;
    code >> m.code;
    for (std::string a; args >> a;) m.args.push_back(a);
    m.args.push_back("--quiet");
    out.push_back(std::move(m));
  }
  return out;
}

std::pair<int, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str()};
}

BigRational parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

Outcome criterion_envelope() {
  Outcome o;
  int tables = 0;
  double worst = 0;
  for (const auto& m : manifest()) {
    if (m.fixture.find(".json") == std::string::npos) continue;
    auto [code, text] = run(m.args);
    if (code != 0) continue;
    auto doc = nlohmann::json::parse(text);
    for (const auto& t : doc["tables"]) {
      std::string kind = t["kind"];
      if (kind != "HK" && kind != "FSIG") continue;
      const auto& rows = t["rows"];
      if (rows.size() < 3) continue;
      ++tables;
      const BigInt p = t["p"].get<unsigned>();
      std::vector<BigRational> steps;  // steps[i] for e = i + 1
      for (std::size_t e = 1; e + 1 < rows.size(); ++e) {
        BigRational diff = parse_fraction(rows[e + 1]["normalized"]) - parse_fraction(rows[e]["normalized"]);
        if (diff < 0) diff = -diff;
        steps.push_back(diff * BigRational(boost::multiprecision::pow(p, static_cast<unsigned>(e))));
      }
      for (const auto& s : steps) {
        bool ok = s <= 10 * steps.front();
        o.check(ok, m.fixture + " envelope");
        if (steps.front() > 0) worst = std::max(worst, BigRational(s / steps.front()).convert_to<double>());
      }
    }
  }
  o.detail = std::to_string(tables) + " HK/FSIG corpus tables; largest step ratio to e = 1 is " + fmt(worst, 3);
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  int fixtures = 0;
  for (const auto& m : manifest()) {
    auto [code1, out1] = run(m.args);
    auto [code2, out2] = run(m.args);
    std::vector<std::string> threaded = m.args;
    threaded.insert(threaded.end(), {"--threads", "3"});
    auto [code3, out3] = run(threaded);
    std::ifstream in("corpus/expected/" + m.fixture, std::ios::binary);
    std::stringstream want;
    want << in.rdbuf();
    o.check(code1 == m.code && code2 == m.code && code3 == m.code, m.fixture + " exit code");
    o.check(out1 == out2 && out1 == out3, m.fixture + " not byte-identical across runs");
    o.check(in && out1 == want.str(), m.fixture + " differs from fixture");
    ++fixtures;
  }
  int files = 0;
  for (const auto& path : corpus_rings()) {
    RingFile a = parse_ring_file(path.string());
    o.check(a == parse_ring_file_text(a.serialize()), path.string() + " round trip");
    ++files;
  }
  o.detail = std::to_string(fixtures) + " fixtures byte-identical over 3 runs (1 and 3 threads); " +
             std::to_string(files) + " ring files round-trip";
  return o;
}

}  // namespace

int main() {
  std::filesystem::current_path(FROB_SOURCE_DIR);
  struct Criterion {
    const char* name;
    std::function<Outcome()> fn;
  };
  const Criterion criteria[] = {
      {"regular exactness", criterion_regular},
      {"per-e colon identity", criterion_colon_identity},
      {"cross-oracle agreement", criterion_cross_oracle},
      {"A1 invariants", criterion_a1},
      {"degenerate paths", criterion_degenerate},
      {"inequality suite", criterion_inequalities},
      {"pair sanity", criterion_pairs},
      {"envelope diagnostic", criterion_envelope},
      {"determinism and format", criterion_determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << c.name << ": " << o.detail << "\n";
    for (std::size_t i = 0; i < o.failures.size() && i < 5; ++i) std::cout << "    failed: " << o.failures[i] << "\n";
    failed += !o.pass;
  }
  std::cout << (9 - failed) << "/9 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
