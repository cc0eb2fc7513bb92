#include "cjcalc/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "cjcalc/expr.hpp"
#include "cjcalc/io.hpp"
#include "cjcalc/parallel.hpp"
#include "cjcalc/pims.hpp"

namespace cjcalc {

namespace {

struct Config {
  std::string type = "A1";
  std::string cartan_path;
  std::optional<Int> p;
  Int r = 1;
  std::string decomp_path;
  std::string qhat_path;
  std::optional<std::string> data_dir;
  std::optional<Int> bound;
  Int nu_max = 3;
  std::string method = "simple_basis";
  std::string format = "pretty";
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Int widen = 1;
  bool no_nu_filter = false;
  bool quiet = false;
};

// Inputs resolved from a Config; data sources are loaded on first use.
class Session {
 public:
  explicit Session(const Config& cfg) : cfg_(cfg) {
    if (cfg.r < 1) throw InputError("-r must be at least 1, got " + std::to_string(cfg.r));
    if (cfg.jobs < 1) throw InputError("--jobs must be at least 1");
    if (cfg.bound && *cfg.bound < 0) throw InputError("--bound must be nonnegative");
    if (cfg.nu_max < 0) throw InputError("--nu-max must be nonnegative");
    if (cfg.widen < 1) throw InputError("--widen must be at least 1");
    if (cfg.format != "pretty" && cfg.format != "json" && cfg.format != "tsv")
      throw InputError("--format must be pretty, json or tsv, got '" + cfg.format + "'");
    const auto method = parse_steinberg_method(cfg.method);
    if (!method) throw InputError("--method must be direct, good_filtration or simple_basis, got '" + cfg.method + "'");
    method_ = *method;
    options_.widen = cfg.widen;
    options_.exact_filter = !cfg.no_nu_filter;
    rs_ = cfg.cartan_path.empty() ? RootSystem::of_type(cfg.type)
                                  : root_system_from_json(read_json_file(resolve_data_path(cfg.cartan_path, cfg.data_dir)));
    if (cfg.p && !is_prime(*cfg.p)) throw InputError("-p must be prime, got " + std::to_string(*cfg.p));
  }

  const Config& cfg() const { return cfg_; }
  const RootSystem& rs() const { return *rs_; }
  Int r() const { return cfg_.r; }
  SteinbergMethod method() const { return method_; }
  const NuRangeOptions& options() const { return options_; }
  bool is_a1() const { return rs_->cartan() == cartan_of_type("A1"); }

  std::optional<Int> maybe_p() {
    if (cfg_.p) return cfg_.p;
    if (!cfg_.decomp_path.empty()) return provider().p();
    return std::nullopt;
  }

  Int p() {
    if (auto p = maybe_p()) return *p;
    throw InputError("this command needs a prime: pass -p");
  }

  Int q() { return checked_pow(p(), r()); }

  const DecompositionProvider& provider() {
    if (provider_) return *provider_;
    if (!cfg_.decomp_path.empty()) {
      provider_ = provider_from_json(read_json_file(resolve_data_path(cfg_.decomp_path, cfg_.data_dir)), rs_);
      if (cfg_.p && *cfg_.p != provider_->p())
        throw InputError("-p " + std::to_string(*cfg_.p) + " does not match decomposition data p = " + std::to_string(provider_->p()));
    } else if (is_a1()) {
      provider_ = DecompositionProvider::builtin_sl2(p());
    } else {
      throw InputError("no built-in decomposition numbers for type " + rs_->name() + ": pass --decomp-data");
    }
    return *provider_;
  }

  bool has_provider_source() const { return !cfg_.decomp_path.empty() || is_a1(); }

  const QrData& qrdata() {
    if (qrdata_) return *qrdata_;
    if (!cfg_.qhat_path.empty()) {
      qrdata_ = qrdata_from_json(read_json_file(resolve_data_path(cfg_.qhat_path, cfg_.data_dir)), rs_);
      if (qrdata_->p() != p() || qrdata_->r() != r())
        throw InputError("Q-hat data is for p = " + std::to_string(qrdata_->p()) + ", r = " + std::to_string(qrdata_->r()) +
                         " but p = " + std::to_string(p()) + ", r = " + std::to_string(r()) + " was requested");
    } else if (is_a1()) {
      qrdata_ = QrData::builtin_a1(p(), r());
    } else {
      throw InputError("no built-in Q-hat data for type " + rs_->name() + ": pass --qhat-data");
    }
    return *qrdata_;
  }

  void note(const std::string& line, std::ostream& err) const {
    if (!cfg_.quiet) err << line << '\n';
  }

 private:
  const Config& cfg_;
  RootSystemPtr rs_;
  SteinbergMethod method_ = SteinbergMethod::SimpleBasis;
  NuRangeOptions options_;
  ProviderPtr provider_;
  QrDataPtr qrdata_;
};

std::string render_pretty(const Character& chi) {
  std::string out = "{";
  bool first = true;
  for (auto it = chi.terms().rbegin(); it != chi.terms().rend(); ++it) {
    if (!first) out += ',';
    first = false;
    out += to_string(it->first) + ":" + std::to_string(it->second);
  }
  return out + "}";
}

std::string join_labels(const std::vector<Weight>& labels, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? sep : "") + to_label(labels[i]);
  return out;
}

void print_matrix_pretty(std::ostream& out, const std::vector<Weight>& labels, const std::vector<std::vector<Int>>& m) {
  std::size_t width = 2;
  for (const Weight& w : labels) width = std::max(width, to_label(w).size());
  for (const auto& row : m)
    for (Int v : row) width = std::max(width, std::to_string(v).size());
  const std::string corner = "lam\\mu";
  const std::size_t first = std::max(width, corner.size());
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  out << pad(corner, first);
  for (const Weight& w : labels) out << "  " << pad(to_label(w), width);
  out << '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << pad(to_label(labels[i]), first);
    for (Int v : m[i]) out << "  " << pad(std::to_string(v), width);
    out << '\n';
  }
}

void print_matrix_tsv(std::ostream& out, const std::vector<Weight>& labels, const std::vector<std::vector<Int>>& m) {
  out << join_labels(labels, "\t") << '\n';
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "\t" : "") << row[j];
    out << '\n';
  }
}

// ---------------------------------------------------------------- char

int cmd_char(Session& s, const std::string& expression, std::ostream& out) {
  ExprContext ctx;
  ctx.rs = &s.rs();
  ctx.r = s.r();
  if (auto p = s.maybe_p()) ctx.p = *p;
  if (ctx.p && s.has_provider_source()) ctx.provider = &s.provider();
  const Character chi = evaluate_expression(expression, ctx);
  const std::string& format = s.cfg().format;
  if (format == "json") {
    out << character_to_json(chi).dump(2) << '\n';
  } else if (format == "tsv") {
    out << "weight\tmult\n";
    for (auto it = chi.terms().rbegin(); it != chi.terms().rend(); ++it) out << to_label(it->first) << '\t' << it->second << '\n';
  } else {
    out << render_pretty(chi) << '\n';
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------- info

int cmd_info(Session& s, std::ostream& out) {
  const RootSystem& rs = s.rs();
  Json roots = Json::array();
  for (const PositiveRoot& a : rs.positive_roots()) roots.push_back({{"weight", weight_to_json(a.weight)}, {"coords", a.coords}});
  Json doc = {{"type", rs.name()},
              {"rank", rs.rank()},
              {"cartan", rs.cartan().entries()},
              {"rho", weight_to_json(rs.rho())},
              {"coxeter_number", rs.coxeter_number()},
              {"highest_short_coroot", rs.highest_short_coroot()},
              {"minus_w0_permutation", rs.minus_w0_permutation()},
              {"positive_roots", std::move(roots)}};
  if (s.cfg().format == "json") {
    out << doc.dump(2) << '\n';
    return kExitSuccess;
  }
  out << "type: " << rs.name() << "\nrank: " << rs.rank() << "\ncoxeter number: " << rs.coxeter_number()
      << "\nrho: " << to_string(rs.rho()) << "\npositive roots:";
  for (const PositiveRoot& a : rs.positive_roots()) out << ' ' << to_string(a.weight);
  out << '\n';
  return kExitSuccess;
}

// ---------------------------------------------------------------- qhat

int cmd_qhat(Session& s, std::ostream& out) {
  const QrData& data = s.qrdata();
  if (s.cfg().format == "json") {
    out << qrdata_to_json(data).dump(2) << '\n';
    return kExitSuccess;
  }
  for (const auto& [lam, entry] : data.entries())
    out << to_label(lam) << "\tqhat=" << render_pretty(entry.qhat) << "\tq=" << render_pretty(entry.q) << '\n';
  return kExitSuccess;
}

// ---------------------------------------------------------------- cj-table

void trace_cell(Session& s, const MultiplicityTable& t, std::size_t i, std::size_t j, std::ostream& err) {
  const Weight& lam = t.labels[i];
  const Weight& mu = t.labels[j];
  const Weight lam_star = dual_weight(lam, s.rs());
  err << "mismatch at lambda=" << to_string(lam) << " mu=" << to_string(mu) << ": lhs=" << t.lhs[i][j]
      << " rhs=" << t.rhs[i][j] << '\n';
  err << "  lambda*=" << to_string(lam_star) << " q_r(lambda*)=" << render_pretty(qr_character(lam_star, s.qrdata())) << '\n';
  err << "  chi_p(mu)=" << render_pretty(s.provider().simple_character(mu)) << '\n';
  for (SteinbergMethod m : {SteinbergMethod::Direct, SteinbergMethod::GoodFiltration, SteinbergMethod::SimpleBasis})
    err << "  lhs via " << to_string(m) << " = " << cj_lhs(lam, mu, s.provider(), s.qrdata(), m, s.options()) << '\n';
  const Int q = s.q();
  for (const Weight& nu : cj_nu_range(lam, mu, s.r(), s.provider(), s.options())) {
    const Character product = multiply(s.provider().simple_character(mu), s.provider().simple_character(nu));
    err << "  rhs term nu=" << to_string(nu) << ": [L(mu)(x)L(nu) : L(" << to_string(lam + q * nu)
        << ")] = " << to_simple_basis(product, s.provider()).at(lam + q * nu) << '\n';
  }
}

int cmd_cj_table(Session& s, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const MultiplicityTable table = cj_table(s.provider(), s.qrdata(), s.method(), s.options(), s.cfg().jobs);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string& format = s.cfg().format;
  if (format == "json") {
    out << table_to_json(table).dump(2) << '\n';
  } else if (format == "tsv") {
    print_matrix_tsv(out, table.labels, table.lhs);
  } else {
    out << "type " << table.type << ", p = " << table.p << ", r = " << table.r << '\n';
    out << "[Q-hat_r(lam) : U_r(mu)] via " << table.lhs_route << ":\n";
    print_matrix_pretty(out, table.labels, table.lhs);
    if (!table.agree()) {
      out << "sum_nu [L(mu) (x) L(nu) : L(lam + q nu)] via " << table.rhs_route << ":\n";
      print_matrix_pretty(out, table.labels, table.rhs);
    }
    out << "routes agree: " << (table.agree() ? "yes" : "no") << " (" << table.mismatches().size() << " mismatches in "
        << table.labels.size() * table.labels.size() << " cells)\n";
  }
  for (const auto& [i, j] : table.mismatches()) trace_cell(s, table, i, j, err);
  std::ostringstream timing;
  timing << "cj-table: " << table.labels.size() * table.labels.size() << " cells in " << seconds << " s";
  s.note(timing.str(), err);
  return table.agree() ? kExitSuccess : kExitMismatch;
}

// ---------------------------------------------------------------- verify

struct CheckResult {
  std::string label;
  Int lhs = 0;
  Int rhs = 0;
};

using Check = std::function<CheckResult()>;

std::vector<Check> prop3x_checks(Session& s, SteinbergMethod route) {
  const Int q = s.q();
  const Int bound = s.cfg().bound.value_or(s.rs().rank() == 1 ? 4 * q : q);
  std::vector<Check> checks;
  for (const Weight& lam : dominant_box(s.rs(), bound))
    checks.push_back([&s, lam, route] {
      const Character& chi = weyl_character(lam, s.rs());
      return CheckResult{"chi=chi(" + to_string(lam) + ")",
                         steinberg_multiplicity(chi, s.r(), s.provider(), route, s.options()),
                         steinberg_multiplicity(chi, s.r(), s.provider(), SteinbergMethod::Direct, s.options())};
    });
  return checks;
}

std::vector<Check> lemma33_checks(Session& s) {
  const Int q = s.q();
  const Int bound = s.cfg().bound.value_or(s.rs().rank() == 1 ? 4 * q : q);
  std::vector<Check> checks;
  for (const Weight& sigma : dominant_box(s.rs(), bound))
    for (const Weight& lam : restricted_weights(s.rs(), s.p(), s.r()))
      for (const Weight& nu : dominant_box(s.rs(), s.cfg().nu_max))
        checks.push_back([&s, sigma, lam, nu] {
          const IdentityCheck c = jantzen_identity_check(weyl_character(sigma, s.rs()), lam, nu, s.provider(), s.qrdata());
          return CheckResult{"chi=chi(" + to_string(sigma) + ") lambda=" + to_string(lam) + " nu=" + to_string(nu), c.lhs, c.rhs};
        });
  return checks;
}

std::vector<Check> thm41_checks(Session& s) {
  std::vector<Check> checks;
  const auto labels = restricted_weights(s.rs(), s.p(), s.r());
  for (const Weight& lam : labels)
    for (const Weight& mu : labels)
      checks.push_back([&s, lam, mu] {
        return CheckResult{"lambda=" + to_string(lam) + " mu=" + to_string(mu),
                           cj_lhs(lam, mu, s.provider(), s.qrdata(), s.method(), s.options()),
                           cj_rhs(lam, mu, s.r(), s.provider(), s.options())};
      });
  return checks;
}

std::vector<Check> thm45a_checks(Session& s) {
  const Int bound = s.cfg().bound.value_or(s.q() - 1);
  std::vector<Check> checks;
  for (const Weight& lam : restricted_weights(s.rs(), s.p(), s.r()))
    for (const Weight& mu : dominant_box(s.rs(), bound))
      checks.push_back([&s, lam, mu] {
        const IdentityCheck c = theorem45a_socle_check(lam, mu, s.r(), s.provider(), s.options());
        return CheckResult{"lambda=" + to_string(lam) + " mu=" + to_string(mu), c.lhs, c.rhs};
      });
  return checks;
}

std::vector<Check> prop44delta_checks(Session& s) {
  std::vector<Check> checks;
  const auto labels = restricted_weights(s.rs(), s.p(), s.r());
  for (const Weight& mu : labels)
    for (const Weight& sigma : labels)
      checks.push_back([&s, mu, sigma] {
        return CheckResult{"mu=" + to_string(mu) + " sigma=" + to_string(sigma),
                           induced_socle_multiplicity(mu, sigma, s.r(), s.provider()), mu == sigma ? 1 : 0};
      });
  return checks;
}

int cmd_verify(Session& s, const std::string& target, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  if (target == "prop31") checks = prop3x_checks(s, SteinbergMethod::GoodFiltration);
  else if (target == "prop32") checks = prop3x_checks(s, SteinbergMethod::SimpleBasis);
  else if (target == "lemma33") checks = lemma33_checks(s);
  else if (target == "thm41") checks = thm41_checks(s);
  else if (target == "thm45a") checks = thm45a_checks(s);
  else if (target == "prop44delta") checks = prop44delta_checks(s);
  else throw InputError("unknown verification target '" + target + "' (expected prop31, prop32, lemma33, thm41, thm45a or prop44delta)");

  // Load shared data before going parallel so load errors surface once.
  s.provider();
  if (target == "lemma33" || target == "thm41") s.qrdata();

  const std::size_t grid = checks.size();
  if (s.cfg().samples > 0 && s.cfg().samples < checks.size()) {
    std::vector<std::size_t> index(checks.size());
    for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
    std::mt19937_64 rng(s.cfg().seed);
    std::shuffle(index.begin(), index.end(), rng);
    index.resize(s.cfg().samples);
    std::sort(index.begin(), index.end());
    std::vector<Check> chosen;
    for (std::size_t i : index) chosen.push_back(std::move(checks[i]));
    checks = std::move(chosen);
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> done{0};
  std::mutex err_mutex;
  const std::size_t step = std::max<std::size_t>(1, checks.size() / 10);
  parallel_for(checks.size(), s.cfg().jobs, [&](std::size_t i) {
    results[i] = checks[i]();
    const std::size_t finished = ++done;
    if (checks.size() >= 100 && finished % step == 0 && !s.cfg().quiet) {
      std::lock_guard lock(err_mutex);
      err << "verify " << target << ": " << finished << "/" << checks.size() << '\n';
    }
  });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<const CheckResult*> mismatches;
  for (const CheckResult& c : results)
    if (c.lhs != c.rhs) mismatches.push_back(&c);

  const std::string& format = s.cfg().format;
  if (format == "json") {
    Json bad = Json::array();
    for (const CheckResult* c : mismatches) bad.push_back({{"case", c->label}, {"lhs", c->lhs}, {"rhs", c->rhs}});
    Json doc = {{"target", target},
                {"type", s.rs().name()},
                {"p", s.p()},
                {"r", s.r()},
                {"grid", grid},
                {"checks", results.size()},
                {"mismatches", std::move(bad)},
                {"seed", s.cfg().seed}};
    out << doc.dump(2) << '\n';
  } else if (format == "tsv") {
    out << "case\tlhs\trhs\n";
    for (const CheckResult& c : results) out << c.label << '\t' << c.lhs << '\t' << c.rhs << '\n';
  } else {
    out << "target: " << target << "\ntype: " << s.rs().name() << "\np: " << s.p() << "\nr: " << s.r()
        << "\nchecks: " << results.size() << " of " << grid << "\nmismatches: " << mismatches.size() << '\n';
    for (const CheckResult* c : mismatches) out << "  " << c->label << ": lhs=" << c->lhs << " rhs=" << c->rhs << '\n';
  }
  std::ostringstream timing;
  timing << "verify " << target << ": " << results.size() << " checks in " << seconds << " s";
  s.note(timing.str(), err);
  return mismatches.empty() ? kExitSuccess : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters, Steinberg multiplicities and PIM multiplicity tables for finite groups of Lie type", "cjcalc"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  auto* type = app.add_option("--type", cfg.type, "Built-in root system: A1, A2, B2 or G2")->capture_default_str();
  app.add_option("--cartan", cfg.cartan_path, "Cartan matrix JSON file")->excludes(type);
  app.add_option("-p", cfg.p, "Prime characteristic");
  app.add_option("-r", cfg.r, "Frobenius exponent, q = p^r")->capture_default_str();
  app.add_option("--decomp-data", cfg.decomp_path, "Decomposition numbers JSON file");
  app.add_option("--qhat-data", cfg.qhat_path, "Q-hat characters JSON file");
  app.add_option("--data-dir", cfg.data_dir, std::string("Directory searched for data files (default: $") + kDataDirEnv + ")");
  app.add_option("--bound", cfg.bound, "Coordinate bound of the weight grid");
  app.add_option("--nu-max", cfg.nu_max, "Coordinate bound of nu in the lemma33 sweep")->capture_default_str();
  app.add_option("--method", cfg.method, "Steinberg multiplicity route: direct, good_filtration or simple_basis")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format: pretty, json or tsv")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for --samples")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Check only this many grid points, chosen by --seed (0 = all)")->capture_default_str();
  app.add_option("--widen", cfg.widen, "Multiply every nu-range box by this factor")->capture_default_str();
  app.add_flag("--no-nu-filter", cfg.no_nu_filter, "Sum over the whole nu-range box without the dominance filter");
  app.add_flag("-q,--quiet", cfg.quiet, "No progress or timing on stderr");

  std::string expression;
  auto* char_cmd = app.add_subcommand("char", "Evaluate a character expression");
  char_cmd->add_option("expression", expression, "e.g. 'weyl(1)*weyl(1)' or 'twist(simple(2),1)'")->required();
  auto* table_cmd = app.add_subcommand("cj-table", "PIM multiplicity table [Q-hat_r(lam) : U_r(mu)] by two routes");
  std::string target;
  auto* verify_cmd = app.add_subcommand("verify", "Run an equality sweep");
  verify_cmd->add_option("target", target, "prop31, prop32, lemma33, thm41, thm45a or prop44delta")->required();
  auto* info_cmd = app.add_subcommand("info", "Show root system data");
  auto* qhat_cmd = app.add_subcommand("qhat", "Show validated Q-hat characters and q_r");
  for (auto* sub : {char_cmd, table_cmd, verify_cmd, info_cmd, qhat_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitInputError;
  }

  try {
    Session session(cfg);
    if (char_cmd->parsed()) return cmd_char(session, expression, out);
    if (table_cmd->parsed()) return cmd_cj_table(session, out, err);
    if (verify_cmd->parsed()) return cmd_verify(session, target, out, err);
    if (info_cmd->parsed()) return cmd_info(session, out);
    if (qhat_cmd->parsed()) return cmd_qhat(session, out);
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace cjcalc
