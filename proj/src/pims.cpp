#include "cjcalc/pims.hpp"

#include "cjcalc/parallel.hpp"

namespace cjcalc {

namespace {

Int q_of(Int p, Int r) {
  if (r < 1) throw InputError("r must be at least 1, got " + std::to_string(r));
  return checked_pow(p, r);
}

void require_restricted(const Weight& w, Int q, const RootSystem& rs, const char* what) {
  rs.check_rank(w);
  if (!is_restricted(w, q))
    throw InputError(std::string(what) + " = " + to_string(w) + " is not p^r-restricted (q = " + std::to_string(q) + ")");
}

void require_same_prime(const DecompositionProvider& provider, const QrData& data) {
  if (provider.p() != data.p())
    throw InputError("decomposition data has p = " + std::to_string(provider.p()) + " but Q-hat data has p = " + std::to_string(data.p()));
  if (provider.root_system().rank() != data.root_system().rank() ||
      provider.root_system().cartan() != data.root_system().cartan())
    throw InputError("decomposition data and Q-hat data use different root systems");
}

}  // namespace

Character character_divide(const Character& num, const Character& den, const RootSystem& rs) {
  if (den.empty()) throw InputError("character division by zero");
  if (num.rank() != den.rank() || num.rank() != rs.rank()) throw InputError("character division: rank mismatch");
  require_w_invariant(num, rs, "character_divide (numerator)");
  require_w_invariant(den, rs, "character_divide (denominator)");
  const Weight delta = *leading_weight(den, rs);
  const Int lead = den.mult(delta);

  Character quotient(rs.rank());
  Character rest = num;
  while (!rest.empty()) {
    const Weight top = *leading_weight(rest, rs);
    const Int c = rest.mult(top);
    const Weight gamma = top - delta;
    if (!gamma.is_dominant() || c % lead != 0)
      throw DivisionError("not divisible: remainder term " + std::to_string(c) + " * chi(" + to_string(top) +
                          ") is not a multiple of the divisor's leading term " + std::to_string(lead) + " * chi(" +
                          to_string(delta) + ")");
    const Int k = c / lead;
    const Character& step = weyl_character(gamma, rs);
    quotient += step.scaled(k);
    rest -= multiply(step, den).scaled(k);
  }
  return quotient;
}

QrDataPtr QrData::builtin_a1(Int p, Int r) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  const Int q = q_of(p, r);
  auto rs = RootSystem::of_type("A1");
  std::vector<Character> base;
  for (Int m = 0; m < p; ++m) {
    Character qhat = weyl_character(Weight{m}, *rs);
    if (m <= p - 2) qhat += weyl_character(Weight{2 * p - 2 - m}, *rs);
    base.push_back(std::move(qhat));
  }
  std::map<Weight, Character> qhat;
  std::map<Weight, Int> expected_dim;
  for (Int lam = 0; lam < q; ++lam) {
    Character ch = Character::unit(1);
    Int dim = 1;
    Int rest = lam;
    for (Int i = 0; i < r; ++i, rest /= p) {
      const Int digit = rest % p;
      ch = multiply(ch, frobenius_twist(base[static_cast<std::size_t>(digit)], p, i));
      dim = checked_mul(dim, digit == p - 1 ? p : 2 * p);
    }
    qhat.emplace(Weight{lam}, std::move(ch));
    expected_dim.emplace(Weight{lam}, dim);
  }
  QrDataPtr data = from_qhat(rs, p, r, std::move(qhat), Provenance::BuiltinA1);
  for (const auto& [lam, entry] : data->entries())
    if (dimension(entry.qhat) != expected_dim.at(lam))
      throw InvariantError("built-in Q-hat character for " + to_string(lam) + " has the wrong dimension");
  return data;
}

QrDataPtr QrData::from_qhat(RootSystemPtr rs, Int p, Int r, std::map<Weight, Character> qhat, Provenance provenance) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  const Int q = q_of(p, r);
  auto data = std::shared_ptr<QrData>(new QrData(rs, p, r, provenance));
  const Character st = steinberg_character(*rs, p, r);
  const Weight st_weight = (q - 1) * rs->rho();
  for (auto& [lam, ch] : qhat) {
    const std::string where = "Q-hat entry for lambda = " + to_string(lam);
    try {
      require_restricted(lam, q, *rs, "lambda");
      if (ch.rank() != rs->rank()) throw InputError("character rank mismatch");
      Character quotient = character_divide(ch, st, *rs);
      if (lam == st_weight && quotient != Character::unit(rs->rank()))
        throw InputError("q_r of the Steinberg weight must be chi(0)");
      data->entries_.emplace(lam, Entry{std::move(ch), std::move(quotient)});
    } catch (const DivisionError& e) {
      throw InputError(where + ": not divisible by ch St_r (" + e.what() + ")");
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return data;
}

bool QrData::covers_restricted_weights() const {
  for (const Weight& lam : restricted_weights(*rs_, p_, r_))
    if (!entries_.count(lam)) return false;
  return true;
}

const QrData::Entry& QrData::entry(const Weight& lam) const {
  auto it = entries_.find(lam);
  if (it == entries_.end())
    throw CoverageError("no Q-hat data for lambda = " + to_string(lam) + " (p = " + std::to_string(p_) + ", r = " + std::to_string(r_) + ")");
  return it->second;
}

const Character& qr_character(const Weight& lam, const QrData& data) { return data.entry(lam).q; }

Int cj_lhs(const Weight& lam, const Weight& mu, const DecompositionProvider& provider, const QrData& data,
           SteinbergMethod method, const NuRangeOptions& options) {
  require_same_prime(provider, data);
  const RootSystem& rs = provider.root_system();
  const Int q = q_of(data.p(), data.r());
  require_restricted(lam, q, rs, "lambda");
  require_restricted(mu, q, rs, "mu");
  const Character chi = multiply(provider.simple_character(mu), qr_character(dual_weight(lam, rs), data));
  return steinberg_multiplicity(chi, data.r(), provider, method, options);
}

std::vector<Weight> cj_nu_range(const Weight& lam, const Weight& mu, Int r, const DecompositionProvider& provider,
                                const NuRangeOptions& options) {
  const Int q = q_of(provider.p(), r);
  const Weight targets[] = {mu};
  return nu_candidates(lam, q - 1, targets, provider.root_system(), options);
}

Int cj_rhs(const Weight& lam, const Weight& mu, Int r, const DecompositionProvider& provider, const NuRangeOptions& options) {
  const RootSystem& rs = provider.root_system();
  const Int q = q_of(provider.p(), r);
  require_restricted(lam, q, rs, "lambda");
  rs.check_rank(mu);
  if (!mu.is_dominant()) throw InputError("mu = " + to_string(mu) + " is not dominant");
  Int total = 0;
  for (const Weight& nu : cj_nu_range(lam, mu, r, provider, options)) {
    const Character product = multiply(provider.simple_character(mu), provider.simple_character(nu));
    const Int term = to_simple_basis(product, provider).at(lam + q * nu);
    if (term < 0) throw InvariantError("negative tensor product multiplicity for nu = " + to_string(nu));
    total = checked_add(total, term);
  }
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> MultiplicityTable::mismatches() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < lhs[i].size(); ++j)
      if (lhs[i][j] != rhs[i][j]) out.emplace_back(i, j);
  return out;
}

MultiplicityTable cj_table(const DecompositionProvider& provider, const QrData& data, SteinbergMethod method,
                           const NuRangeOptions& options, unsigned jobs) {
  require_same_prime(provider, data);
  MultiplicityTable table;
  table.p = data.p();
  table.r = data.r();
  table.type = provider.root_system().name();
  table.labels = restricted_weights(provider.root_system(), data.p(), data.r());
  table.lhs_route = "qhat/" + to_string(method);
  table.rhs_route = "tensor-nu-sum";
  const std::size_t n = table.labels.size();
  for (const Weight& lam : table.labels) data.entry(lam);
  table.lhs.assign(n, std::vector<Int>(n, 0));
  table.rhs.assign(n, std::vector<Int>(n, 0));
  parallel_for(n * n, jobs, [&](std::size_t cell) {
    const std::size_t i = cell / n, j = cell % n;
    table.lhs[i][j] = cj_lhs(table.labels[i], table.labels[j], provider, data, method, options);
    table.rhs[i][j] = cj_rhs(table.labels[i], table.labels[j], data.r(), provider, options);
  });
  return table;
}

IdentityCheck jantzen_identity_check(const Character& chi, const Weight& lam, const Weight& nu,
                                     const DecompositionProvider& provider, const QrData& data) {
  require_same_prime(provider, data);
  const RootSystem& rs = provider.root_system();
  const Int q = q_of(data.p(), data.r());
  require_restricted(lam, q, rs, "lambda");
  rs.check_rank(nu);
  if (!nu.is_dominant()) throw InputError("nu = " + to_string(nu) + " is not dominant");
  IdentityCheck out;
  out.lhs = to_simple_basis(chi, provider).at(q * nu + lam);
  const Character twisted = multiply(chi, qr_character(dual_weight(lam, rs), data));
  out.rhs = to_simple_basis(twisted, provider).at((q - 1) * rs.rho() + q * nu);
  return out;
}

std::map<Weight, Int> barq_multiplicities(const Weight& lam, Int r, const DecompositionProvider& provider,
                                          const NuRangeOptions& options) {
  std::map<Weight, Int> out;
  for (const Weight& mu : restricted_weights(provider.root_system(), provider.p(), r))
    if (Int m = cj_rhs(lam, mu, r, provider, options)) out.emplace(mu, m);
  return out;
}

Int induced_socle_multiplicity(const Weight& mu, const Weight& sigma, Int r, const DecompositionProvider& provider) {
  const RootSystem& rs = provider.root_system();
  const Int q = q_of(provider.p(), r);
  require_restricted(mu, q, rs, "mu");
  rs.check_rank(sigma);
  if (!sigma.is_dominant()) throw InputError("sigma = " + to_string(sigma) + " is not dominant");
  const auto [low, high] = split_restricted(sigma, q);
  const Character product = multiply(provider.simple_character(low), provider.simple_character(high));
  return finite_composition_multiplicities(product, r, provider).at(mu);
}

std::map<Weight, Character> gk_sections(Int bound, Int p, Int r, const RootSystem& rs) {
  if (bound < 0) throw InputError("truncation bound must be nonnegative");
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  q_of(p, r);
  std::map<Weight, Character> out;
  for (const Weight& lam : dominant_box(rs, bound)) {
    if (rs.pair_alpha0(lam) > bound) continue;
    out.emplace(lam, multiply(weyl_character(lam, rs), frobenius_twist(weyl_character(dual_weight(lam, rs), rs), p, r)));
  }
  return out;
}

Character gk_truncated_character(Int bound, Int p, Int r, const RootSystem& rs) {
  Character out(rs.rank());
  for (const auto& [lam, section] : gk_sections(bound, p, r, rs)) out += section;
  return out;
}

IdentityCheck theorem45a_socle_check(const Weight& lam, const Weight& mu, Int r, const DecompositionProvider& provider,
                                     const NuRangeOptions& options) {
  const RootSystem& rs = provider.root_system();
  rs.check_rank(mu);
  if (!mu.is_dominant()) throw InputError("mu = " + to_string(mu) + " is not dominant");
  IdentityCheck out;
  const std::map<Weight, Int>& restriction = restrict_simple(mu, r, provider);
  for (const auto& [summand, exponent] : barq_multiplicities(lam, r, provider, options)) {
    auto it = restriction.find(summand);
    if (it != restriction.end()) out.lhs = checked_add(out.lhs, checked_mul(exponent, it->second));
  }
  out.rhs = cj_rhs(lam, mu, r, provider, options);
  return out;
}

}  // namespace cjcalc
