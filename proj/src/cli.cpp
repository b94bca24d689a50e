#include "frob/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frob/ideal_ops.hpp"
#include "frob/invariants.hpp"
#include "frob/pairs.hpp"
#include "frob/ringfile.hpp"

namespace frob {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string file;
  std::string ideal;
  std::string element;
  std::string method = "gorenstein";
  std::string sequence;
  std::string xi = "0";
  std::string order;
  std::optional<unsigned> emax;
  unsigned tmax = 8;
  std::uint64_t seed = 0;
  std::uint64_t budget = GbBudget{}.max_reductions;
  double tau = 1e-3;
  std::optional<int> dim;
  bool json = false;
  bool csv = false;
  bool text = false;
  bool quiet = false;
  unsigned threads = 1;
};

std::string rational_string(const BigRational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

// "3", "-2", "1/2" or "0.25", exactly.
BigRational parse_rational(const std::string& text) {
  auto bad = [&]() -> BigRational { fail(ErrorKind::InvalidArgument, "bad rational '" + text + "'"); };
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      BigInt den(text.substr(slash + 1));
      if (den == 0) return bad();
      return BigRational(BigInt(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string frac = text.substr(dot + 1);
      std::string whole = text.substr(0, dot);
      bool neg = !whole.empty() && whole[0] == '-';
      if (whole.empty() || whole == "-") whole += "0";
      if (frac.empty()) return BigRational(BigInt(whole));
      BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      BigRational f(BigInt(frac), den);
      return BigRational(BigInt(whole)) + (neg ? -f : f);
    }
    return BigRational(BigInt(text));
  } catch (const std::runtime_error&) {
    return bad();
  }
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

Json table_json(const InvariantTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["e"] = r.e;
    row["q"] = r.q.str();
    row["length"] = r.length.str();
    row["normalized"] = rational_string(r.normalized);
    row["normalized_value"] = r.normalized.convert_to<double>();
    if (r.t_stabilized) row["t_stabilized"] = r.t_stabilized;
    rows.push_back(std::move(row));
  }
  Json j;
  j["kind"] = to_string(t.kind);
  j["p"] = t.p;
  j["d"] = t.d;
  j["rows"] = std::move(rows);
  return j;
}

Json estimate_json(const std::string& name, const Estimate& e) {
  Json j;
  j["name"] = name;
  j["model"] = e.model;
  j["eta"] = rational_string(e.eta);
  j["eta_value"] = e.eta_value();
  j["alpha"] = rational_string(e.alpha);
  j["alpha_value"] = e.alpha_value();
  j["error_bound"] = e.error_bound;
  j["residual"] = e.residual;
  j["envelope"] = e.envelope;
  j["range_excess"] = e.range_excess;
  j["e_first"] = e.e_first;
  j["e_last"] = e.e_last;
  return j;
}

class Runner {
 public:
  Runner(Options opt, std::ostream& out, std::ostream& err) : o_(std::move(opt)), out_(out), err_(err) {}

  int run();

 private:
  void load();
  void dispatch();
  unsigned emax() const;
  QuotientIdeal ideal(const std::string& fallback = "m");
  std::string ideal_label(const std::string& fallback = "m") const { return o_.ideal.empty() ? fallback : o_.ideal; }
  Polynomial element();
  SOP sop();
  ChainFn chain(const std::optional<SOP>& s);
  void add_table(const InvariantTable& t) { doc_["tables"].push_back(table_json(t)); }
  void add_estimate(const std::string& name, const InvariantTable& t);
  void note(const std::string& msg) { doc_["diagnostics"]["messages"].push_back(msg); }
  void emit();
  void emit_text();
  void emit_csv();

  void cmd_gb();
  void cmd_colength();
  void cmd_hk();
  void cmd_fsig();
  void cmd_relhk();
  void cmd_tc();
  void cmd_pair();
  void cmd_seqlim();
  void cmd_splitting();
  void cmd_fedder();
  FsigResult fsig_result(Json& result);

  Options o_;
  std::ostream& out_;
  std::ostream& err_;
  std::string bytes_;
  RingFile rf_;
  PresentationPtr R_;
  Json doc_;
};

unsigned Runner::emax() const {
  if (o_.emax) return *o_.emax;
  std::uint32_t p = rf_.p;
  return p == 2 ? 4 : p == 3 ? 3 : 2;
}

void Runner::load() {
  std::ifstream in(o_.file, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot read '" + o_.file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  bytes_ = buf.str();
  GbBudget budget;
  budget.max_reductions = o_.budget;
  rf_ = parse_ring_file_text(bytes_, o_.order, budget);
  R_ = rf_.presentation;
}

QuotientIdeal Runner::ideal(const std::string& fallback) {
  const std::string name = ideal_label(fallback);
  if (name == "m") return R_->maximal_ideal();
  if (const auto* gens = rf_.find_ideal(name)) return QuotientIdeal(R_, *gens);
  return QuotientIdeal(R_, parse_polynomial_list(rf_.ring, name));
}

Polynomial Runner::element() {
  if (o_.element.empty()) fail(ErrorKind::InvalidArgument, "--element is required");
  if (const auto* f = rf_.find_element(o_.element)) return *f;
  return parse_polynomial(rf_.ring, o_.element);
}

SOP Runner::sop() {
  if (rf_.sop) return SOP{*rf_.sop, 0};
  return find_sop(R_, o_.seed);
}

ChainFn Runner::chain(const std::optional<SOP>& s) {
  if (rf_.chain) {
    return [this](unsigned t) { return rf_.instantiate(*rf_.chain, t); };
  }
  return parameter_power_chain(R_, *s);
}

void Runner::add_estimate(const std::string& name, const InvariantTable& t) {
  if (t.rows.size() < 3) {
    note("estimate skipped: needs at least three rows (e_max >= 2)");
    return;
  }
  doc_["estimates"].push_back(estimate_json(name, hk_estimate(t)));
}

void Runner::cmd_gb() {
  Json& r = doc_["result"];
  const GroebnerBasis* gb;
  std::optional<QuotientIdeal> I;
  if (o_.ideal.empty()) {
    r["ideal"] = "relations";
    gb = &R_->defining_ideal().gb();
  } else {
    r["ideal"] = o_.ideal;
    I = ideal();
    gb = &I->lift().gb();
  }
  r["order"] = rf_.order;
  r["basis"] = poly_strings(gb->elements());
  r["size"] = gb->size();
}

void Runner::cmd_colength() {
  QuotientIdeal I = ideal();
  Json& r = doc_["result"];
  r["ideal"] = ideal_label();
  r["m_primary"] = I.is_m_primary();
  r["colength"] = I.colength().str();
}

void Runner::cmd_hk() {
  QuotientIdeal I = ideal();
  doc_["result"]["ideal"] = ideal_label();
  InvariantTable t = hk_function(I, emax(), o_.threads);
  add_table(t);
  add_estimate("e_HK", t);
}

FsigResult Runner::fsig_result(Json& r) {
  r["method"] = o_.method;
  std::optional<SOP> s;
  if (o_.method == "gorenstein" || !rf_.chain) {
    s = sop();
    r["sop"] = poly_strings(s->elements);
    r["sop_source"] = rf_.sop ? "file" : "search";
    if (!rf_.sop) r["seed"] = s->seed;
  }
  if (o_.method == "gorenstein") return fsig_function_gorenstein(R_, *s, emax(), o_.threads);
  r["chain"] = rf_.chain ? rf_.chain->name : "parameter powers";
  r["t_max"] = o_.tmax;
  return fsig_function_chain(R_, chain(s), o_.tmax, emax(), o_.threads);
}

void Runner::cmd_fsig() {
  FsigResult f = fsig_result(doc_["result"]);
  add_table(f.table);
  add_estimate("s", f.table);
}

void Runner::cmd_relhk() {
  QuotientIdeal I = ideal();
  Polynomial x = element();
  doc_["result"]["ideal"] = ideal_label();
  doc_["result"]["element"] = x.to_string();
  InvariantTable t = relative_hk(I, x, emax(), o_.threads);
  add_table(t);
  add_estimate("e_HK(I) - e_HK(I, x)", t);
}

void Runner::cmd_tc() {
  QuotientIdeal I = ideal();
  Polynomial x = element();
  TCVerdict v = tc_membership(I, x, emax(), o_.tau, o_.threads);
  Json& r = doc_["result"];
  r["ideal"] = ideal_label();
  r["element"] = x.to_string();
  r["tau"] = o_.tau;
  r["status"] = to_string(v.status);
  r["reason"] = v.reason;
  r["budget_exceeded"] = v.budget_exceeded;
  if (v.multiplier) {
    r["multiplier"] = v.multiplier->is_zero() ? std::vector<std::string>{} : poly_strings(v.multiplier->generators());
    r["multiplier_stabilized"] = v.multiplier_stabilized;
  }
  if (v.table) add_table(*v.table);
  if (v.estimate) doc_["estimates"].push_back(estimate_json("e_HK(I) - e_HK(I, x)", *v.estimate));
}

void Runner::cmd_pair() {
  Json& r = doc_["result"];
  QuotientIdeal a = ideal();
  BigRational xi = parse_rational(o_.xi);
  r["a"] = ideal_label();
  r["xi"] = rational_string(xi);
  r["xi_value"] = xi.convert_to<double>();
  std::optional<SOP> s;
  if (!rf_.chain) {
    s = sop();
    r["sop"] = poly_strings(s->elements);
  }
  r["chain"] = rf_.chain ? rf_.chain->name : "parameter powers";
  r["t_max"] = o_.tmax;
  InvariantTable t = pair_fsig_function(PairSpec{R_, a, xi}, chain(s), o_.tmax, emax(), o_.threads);
  add_table(t);
  if (t.rows.size() >= 3) {
    doc_["estimates"].push_back(estimate_json("s(R, a^xi)", pair_fsig_estimate(t)));
  } else {
    note("estimate skipped: needs at least three rows (e_max >= 2)");
  }
}

void Runner::cmd_seqlim() {
  if (rf_.sequences.empty()) fail(ErrorKind::InvalidArgument, "ring file declares no sequence");
  const IdealFamily* fam = o_.sequence.empty() ? &rf_.sequences.front() : rf_.find_sequence(o_.sequence);
  if (!fam) fail(ErrorKind::InvalidArgument, "unknown sequence '" + o_.sequence + "'");
  SequenceResult s = sequence_limit(R_, [&](unsigned e) { return rf_.instantiate(*fam, e); }, emax(), o_.dim,
                                    o_.threads);
  Json& r = doc_["result"];
  r["sequence"] = fam->name;
  r["intersection"] = poly_strings(s.intersection.generators());
  r["intersection_stabilized"] = s.intersection_stabilized;
  add_table(s.table);
  doc_["estimates"].push_back(estimate_json("limit", s.estimate));
}

void Runner::cmd_splitting() {
  Json& r = doc_["result"];
  FsigResult f = fsig_result(r);
  SplittingPrimeResult sp = splitting_prime_probe(f);
  r["prime"] = poly_strings(sp.ideal.generators());
  r["stabilized"] = sp.stabilized;
  r["n_est"] = sp.n_est;
  add_table(f.table);
  doc_["estimates"].push_back(estimate_json("r_F", sp.rf));
}

void Runner::cmd_fedder() {
  InvariantTable t = fedder_hypersurface_oracle(R_, emax(), o_.threads);
  add_table(t);
  add_estimate("s", t);
}

void Runner::dispatch() {
  const std::string& c = o_.command;
  if (c == "gb") return cmd_gb();
  if (c == "colength") return cmd_colength();
  if (c == "hk") return cmd_hk();
  if (c == "fsig") return cmd_fsig();
  if (c == "relhk") return cmd_relhk();
  if (c == "tc") return cmd_tc();
  if (c == "pair-fsig") return cmd_pair();
  if (c == "seqlim") return cmd_seqlim();
  if (c == "splitting-prime") return cmd_splitting();
  if (c == "fedder") return cmd_fedder();
  fail(ErrorKind::InvalidArgument, "unknown command '" + c + "'");
}

int Runner::run() {
  doc_["schema"] = 1;
  doc_["engine_version"] = kEngineVersion;
  Json cmd;
  cmd["name"] = o_.command;
  cmd["input"] = o_.file;
  Json opts;
  if (!o_.ideal.empty()) opts["ideal"] = o_.ideal;
  if (!o_.element.empty()) opts["element"] = o_.element;
  if (!o_.order.empty()) opts["order"] = o_.order;
  if (!o_.sequence.empty()) opts["sequence"] = o_.sequence;
  opts["method"] = o_.method;
  opts["xi"] = o_.xi;
  opts["tmax"] = o_.tmax;
  opts["seed"] = o_.seed;
  opts["budget_reductions"] = o_.budget;
  opts["tau"] = o_.tau;
  if (o_.dim) opts["dim"] = *o_.dim;
  cmd["options"] = std::move(opts);
  doc_["command"] = std::move(cmd);
  doc_["input_hash"] = nullptr;
  doc_["ring"] = nullptr;
  doc_["result"] = Json::object();
  doc_["tables"] = Json::array();
  doc_["estimates"] = Json::array();
  doc_["diagnostics"]["messages"] = Json::array();

  int code = 0;
  try {
    if (o_.csv && (o_.command == "gb" || o_.command == "colength")) {
      fail(ErrorKind::InvalidArgument, "--csv needs a command that produces a table");
    }
    load();
    doc_["input_hash"] = "fnv1a64:" + fnv1a_hex(bytes_);
    doc_["command"]["options"]["emax"] = emax();
    Json ring;
    ring["p"] = rf_.p;
    ring["vars"] = rf_.vars;
    ring["order"] = rf_.order;
    ring["relations"] = poly_strings(R_->relations());
    ring["dimension"] = R_->dimension();
    doc_["ring"] = std::move(ring);
    dispatch();
  } catch (const PartialTableError& e) {
    add_table(e.partial());
    doc_["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    code = exit_code_for(e);
  } catch (const Error& e) {
    doc_["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    code = exit_code_for(e);
  } catch (const std::exception& e) {
    doc_["error"] = {{"kind", "Internal"}, {"message", e.what()}};
    code = 4;
  }
  if (code != 0) err_ << "error: " << doc_["error"]["message"].get<std::string>() << "\n";
  emit();
  return code;
}

void Runner::emit() {
  if (o_.csv) {
    emit_csv();
  } else if (o_.text) {
    emit_text();
  } else {
    out_ << doc_.dump(2) << "\n";
  }
  if (!o_.quiet) {
    for (const auto& m : doc_["diagnostics"]["messages"]) err_ << "note: " << m.get<std::string>() << "\n";
  }
}

void Runner::emit_csv() {
  if (doc_["tables"].empty()) return;
  out_ << "e,q,length,normalized_num,normalized_den\n";
  for (const auto& row : doc_["tables"][0]["rows"]) {
    std::string n = row["normalized"].get<std::string>();
    std::size_t slash = n.find('/');
    out_ << row["e"].get<unsigned>() << "," << row["q"].get<std::string>() << "," << row["length"].get<std::string>()
         << "," << n.substr(0, slash) << "," << n.substr(slash + 1) << "\n";
  }
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    if (v.empty()) return "(0)";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s;
  }
  return v.dump();
}

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void Runner::emit_text() {
  if (doc_["ring"].is_null()) return;
  out_ << o_.command << ": " << o_.file << "  (p = " << rf_.p << ", dim = " << R_->dimension() << ")\n";
  for (const auto& [k, v] : doc_["result"].items()) out_ << "  " << k << ": " << scalar_text(v) << "\n";
  for (const auto& t : doc_["tables"]) {
    out_ << "\n" << t["kind"].get<std::string>() << " table (d = " << t["d"].get<int>() << ")\n";
    out_ << std::setw(4) << "e" << std::setw(12) << "q" << std::setw(16) << "length" << "  normalized\n";
    for (const auto& row : t["rows"]) {
      out_ << std::setw(4) << row["e"].get<unsigned>() << std::setw(12) << row["q"].get<std::string>()
           << std::setw(16) << row["length"].get<std::string>() << "  " << row["normalized"].get<std::string>()
           << " = " << fixed(row["normalized_value"].get<double>()) << "\n";
    }
  }
  for (const auto& e : doc_["estimates"]) {
    out_ << "\nestimate " << e["name"].get<std::string>() << " ~ " << fixed(e["eta_value"].get<double>()) << "  ("
         << e["eta"].get<std::string>() << ")  error bound " << fixed(e["error_bound"].get<double>()) << "\n";
  }
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int exit_code_for(const Error& error) {
  switch (classify(error.kind())) {
    case ErrorClass::Input: return 1;
    case ErrorClass::Hypothesis: return 2;
    case ErrorClass::Budget: return 3;
    case ErrorClass::Internal: return 4;
  }
  return 4;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hilbert-Kunz and F-signature computations over F_p", "frob"};
  app.require_subcommand(1);
  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"gb", "reduced Groebner basis of the relations or of --ideal"},
      {"colength", "colength of --ideal (default m)"},
      {"hk", "Hilbert-Kunz table and multiplicity estimate"},
      {"fsig", "F-signature table and estimate"},
      {"relhk", "relative Hilbert-Kunz table of --ideal and --element"},
      {"tc", "tight-closure membership test for --element in --ideal"},
      {"pair-fsig", "F-signature of the pair (R, a^xi), a = --ideal"},
      {"seqlim", "limit of l(R/I_e)/q^d for a declared sequence"},
      {"splitting-prime", "splitting prime and splitting ratio estimate"},
      {"fedder", "F-signature of a hypersurface by Fedder's criterion"},
  };
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("ringfile", o.file, "ring description file")->required();
    sub->add_option("--emax", o.emax, "largest e (default 4 for p = 2, 3 for p = 3, else 2)");
    sub->add_option("--order", o.order, "monomial order override: grevlex, lex, grlex");
    sub->add_option("--budget-reductions", o.budget, "Groebner division-step budget per basis");
    sub->add_option("--threads", o.threads, "worker threads over e")->check(CLI::Range(1u, 256u));
    sub->add_flag("--quiet", o.quiet, "suppress notes on stderr");
    auto* json = sub->add_flag("--json", o.json, "JSON report (default)");
    auto* csv = sub->add_flag("--csv", o.csv, "CSV of the main table");
    auto* text = sub->add_flag("--text", o.text, "human-readable summary");
    json->excludes(csv)->excludes(text);
    csv->excludes(text);
    sub->add_option("--ideal", o.ideal, "ideal name from the file, 'm', or a generator list");
    sub->add_option("--element", o.element, "element name from the file or a polynomial");
    sub->add_option("--method", o.method, "F-signature method")->check(CLI::IsMember({"gorenstein", "chain"}));
    sub->add_option("--tmax", o.tmax, "largest chain index");
    sub->add_option("--seed", o.seed, "seed for the system-of-parameters search");
    sub->add_option("--tau", o.tau, "threshold of the tight-closure test");
    sub->add_option("--xi", o.xi, "pair exponent, e.g. 1/2");
    sub->add_option("--sequence", o.sequence, "sequence name from the file");
    sub->add_option("--dim", o.dim, "normalizing exponent d for seqlim");
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  for (const auto* sub : app.get_subcommands()) o.command = sub->get_name();
  return Runner(std::move(o), out, err).run();
}

}  // namespace frob
