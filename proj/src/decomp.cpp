#include "cjcalc/decomp.hpp"

#include <algorithm>
#include <set>

namespace cjcalc {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::BuiltinSl2: return "builtin-sl2";
    case Provenance::BuiltinA1: return "builtin-a1";
    case Provenance::File: return "file";
  }
  return "unknown";
}

namespace {

void require_prime(Int p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
}

// SL2 characters as dense strings, kept separate from the general engine.
Character sl2_string(Int n) {
  Character out(1);
  for (Int w = n; w >= -n; w -= 2) out.add_term(Weight{w}, 1);
  return out;
}

}  // namespace

DecompositionRow sl2_decomposition_row(Int m, Int p) {
  if (m < 0) throw InputError("sl2 decomposition row needs m >= 0, got " + std::to_string(m));
  require_prime(p);

  std::vector<Character> simple;
  simple.reserve(static_cast<std::size_t>(m) + 1);
  for (Int n = 0; n <= m; ++n) {
    Character ch = Character::unit(1);
    Int rest = n;
    Int scale = 1;
    while (rest > 0) {
      Character digit(1);
      const Character string = sl2_string(rest % p);
      for (const auto& [w, c] : string.terms()) digit.add_term(scale * w, c);
      ch = multiply(ch, digit);
      rest /= p;
      scale = checked_mul(scale, p);
    }
    simple.push_back(std::move(ch));
  }

  DecompositionRow row;
  Character rest = sl2_string(m);
  while (!rest.empty()) {
    const auto& [top, c] = *rest.terms().rbegin();
    if (top[0] < 0 || c <= 0) throw InvariantError("sl2 peeling produced a negative coefficient for m = " + std::to_string(m));
    const Int n = top[0];
    const Int coeff = c;
    row.emplace(Weight{n}, coeff);
    rest -= simple[static_cast<std::size_t>(n)].scaled(coeff);
  }
  return row;
}

DecompositionProvider::DecompositionProvider(RootSystemPtr rs, Int p, Provenance provenance)
    : rs_(std::move(rs)), p_(p), provenance_(provenance) {
  require_prime(p_);
}

ProviderPtr DecompositionProvider::builtin_sl2(Int p) {
  return ProviderPtr(new DecompositionProvider(RootSystem::of_type("A1"), p, Provenance::BuiltinSl2));
}

ProviderPtr DecompositionProvider::from_rows(RootSystemPtr rs, Int p, std::map<Weight, DecompositionRow> rows,
                                             Provenance provenance) {
  auto provider = std::shared_ptr<DecompositionProvider>(new DecompositionProvider(std::move(rs), p, provenance));
  for (auto& [lam, row] : rows) {
    DecompositionRow cleaned;
    for (const auto& [mu, mult] : row)
      if (mult != 0) cleaned.emplace(mu, mult);
    provider->rows_.emplace(lam, std::move(cleaned));
  }
  provider->validate();
  return provider;
}

void DecompositionProvider::validate() const {
  const RootSystem& rs = *rs_;
  for (const auto& [lam, row] : rows_) {
    const std::string where = "decomposition row for lambda = " + to_string(lam);
    if (lam.rank() != rs.rank()) throw InputError(where + ": rank mismatch");
    if (!lam.is_dominant()) throw InputError(where + ": lambda is not dominant");
    auto self = row.find(lam);
    if (self == row.end() || self->second != 1)
      throw InputError(where + ": unitriangularity violated, [nabla(lambda) : L(lambda)] must be 1");
    for (const auto& [mu, mult] : row) {
      if (mu.rank() != rs.rank()) throw InputError(where + ": factor rank mismatch");
      if (!mu.is_dominant()) throw InputError(where + ": factor " + to_string(mu) + " is not dominant");
      if (mult < 0) throw InputError(where + ": negative multiplicity at " + to_string(mu));
      if (!dominance_leq(mu, lam, rs))
        throw InputError(where + ": unitriangularity violated, factor " + to_string(mu) + " is not below lambda");
    }
  }
  for (const auto& [lam, row] : rows_) {
    const std::string where = "decomposition row for lambda = " + to_string(lam);
    Int expected = dimension(weyl_character(lam, rs));
    Int total = 0;
    Character sum(rs.rank());
    try {
      for (const auto& [mu, mult] : row) {
        const Character& simple = simple_character(mu);
        for (const auto& [w, m] : simple.terms())
          if (m < 0) throw InputError(where + ": derived simple character L(" + to_string(mu) + ") has a negative multiplicity");
        total = checked_add(total, checked_mul(mult, dimension(simple)));
        sum += simple.scaled(mult);
      }
    } catch (const CoverageError& e) {
      throw InputError(where + ": " + e.what());
    }
    if (total != expected)
      throw InputError(where + ": dimension mismatch, factors give " + std::to_string(total) + " but dim nabla(lambda) = " +
                       std::to_string(expected));
    if (sum != weyl_character(lam, rs)) throw InputError(where + ": character mismatch against ch nabla(lambda)");
  }
}

bool DecompositionProvider::has_row(const Weight& lam) const {
  if (provenance_ == Provenance::BuiltinSl2) return lam.rank() == 1 && lam[0] >= 0;
  return rows_.count(lam) > 0;
}

DecompositionRow DecompositionProvider::row(const Weight& lam) const {
  rs_->check_rank(lam);
  if (!lam.is_dominant()) throw InputError("decomposition row needs a dominant weight, got " + to_string(lam));
  if (provenance_ == Provenance::BuiltinSl2) {
    {
      std::lock_guard lock(mutex_);
      auto it = row_cache_.find(lam);
      if (it != row_cache_.end()) return *it->second;
    }
    auto computed = std::make_shared<const DecompositionRow>(sl2_decomposition_row(lam[0], p_));
    std::lock_guard lock(mutex_);
    return *row_cache_.try_emplace(lam, std::move(computed)).first->second;
  }
  auto it = rows_.find(lam);
  if (it == rows_.end())
    throw CoverageError("no decomposition data for lambda = " + to_string(lam) + " (p = " + std::to_string(p_) + ")");
  return it->second;
}

std::vector<Weight> DecompositionProvider::stored_weights() const {
  std::vector<Weight> out;
  for (const auto& [lam, row] : rows_) out.push_back(lam);
  return out;
}

const Character& DecompositionProvider::simple_character(const Weight& lam) const {
  rs_->check_rank(lam);
  if (!lam.is_dominant()) throw InputError("simple character needs a dominant weight, got " + to_string(lam));
  {
    std::lock_guard lock(mutex_);
    auto it = simple_cache_.find(lam);
    if (it != simple_cache_.end()) return *it->second;
  }
  Character computed(rs_->rank());
  if (is_restricted(lam, p_)) {
    computed = restricted_simple_character(lam);
  } else {
    computed = Character::unit(rs_->rank());
    const std::vector<Weight> digits = base_digits(lam, p_);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i].is_zero()) continue;
      computed = multiply(computed, frobenius_twist(simple_character(digits[i]), p_, static_cast<Int>(i)));
    }
  }
  auto entry = std::make_shared<const Character>(std::move(computed));
  std::lock_guard lock(mutex_);
  return *simple_cache_.try_emplace(lam, std::move(entry)).first->second;
}

Character DecompositionProvider::restricted_simple_character(const Weight& lam) const {
  const DecompositionRow r = row(lam);
  Character out = weyl_character(lam, *rs_);
  for (const auto& [mu, mult] : r) {
    if (mu == lam) continue;
    if (!dominance_leq(mu, lam, *rs_))
      throw InputError("decomposition row for " + to_string(lam) + " is not unitriangular at " + to_string(mu));
    out -= simple_character(mu).scaled(mult);
  }
  return out;
}

const std::map<Weight, Int>* DecompositionProvider::find_restriction(Int r, const Weight& mu) const {
  std::lock_guard lock(mutex_);
  auto it = restriction_cache_.find({r, mu});
  return it == restriction_cache_.end() ? nullptr : it->second.get();
}

const std::map<Weight, Int>& DecompositionProvider::store_restriction(Int r, const Weight& mu,
                                                                      std::map<Weight, Int> value) const {
  auto entry = std::make_shared<const std::map<Weight, Int>>(std::move(value));
  std::lock_guard lock(mutex_);
  return *restriction_cache_.try_emplace({r, mu}, std::move(entry)).first->second;
}

const Character& simple_character(const Weight& lam, const DecompositionProvider& provider) {
  return provider.simple_character(lam);
}

BasisExpansion to_simple_basis(const Character& chi, const DecompositionProvider& provider) {
  require_w_invariant(chi, provider.root_system(), "to_simple_basis");
  return eliminate_leading_terms(chi, provider.root_system(),
                                 [&provider](const Weight& lam) -> const Character& { return provider.simple_character(lam); });
}

Character from_simple_basis(const BasisExpansion& expansion, const DecompositionProvider& provider) {
  Character out(provider.root_system().rank());
  for (const auto& [lam, c] : expansion.coeffs) out += provider.simple_character(lam).scaled(c);
  return out;
}

Int BasisChangeMatrices::a_at(const Weight& nu, const Weight& gamma) const {
  auto it = a.find({nu, gamma});
  return it == a.end() ? 0 : it->second;
}

Int BasisChangeMatrices::b_at(const Weight& gamma, const Weight& nu) const {
  auto it = b.find({gamma, nu});
  return it == b.end() ? 0 : it->second;
}

bool BasisChangeMatrices::mutually_inverse() const {
  for (const Weight& lam : window)
    for (const Weight& mu : window) {
      Int s = 0;
      for (const Weight& gamma : window) s = checked_add(s, checked_mul(b_at(lam, gamma), a_at(gamma, mu)));
      if (s != (lam == mu ? 1 : 0)) return false;
    }
  return true;
}

BasisChangeMatrices basis_change_matrices(std::span<const Weight> window, const DecompositionProvider& provider) {
  const RootSystem& rs = provider.root_system();
  std::set<Weight> members(window.begin(), window.end());
  for (const Weight& lam : window) {
    rs.check_rank(lam);
    if (!lam.is_dominant()) throw InputError("basis change window contains non-dominant weight " + to_string(lam));
    for (const Weight& mu : rs.dominant_weights_below(lam))
      if (!members.count(mu))
        throw InputError("basis change window is not dominance-closed: " + to_string(mu) + " <= " + to_string(lam) + " is missing");
  }
  BasisChangeMatrices out;
  out.window.assign(members.begin(), members.end());
  for (const Weight& nu : out.window) {
    for (const auto& [gamma, c] : to_weyl_basis(provider.simple_character(nu), rs).coeffs) out.a.emplace(std::pair{nu, gamma}, c);
    for (const auto& [mu, c] : provider.row(nu)) out.b.emplace(std::pair{nu, mu}, c);
  }
  return out;
}

}  // namespace cjcalc
