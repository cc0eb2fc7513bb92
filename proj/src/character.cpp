#include "cjcalc/character.hpp"

#include <mutex>
#include <unordered_map>

namespace cjcalc {

namespace detail {

struct WeylCharacterEntry {
  Character full;
  std::map<Weight, Int> dominant;
};

// Write-once memo: concurrent computation of one entry may race, the first
// insertion wins and later ones are discarded (they are identical).
struct WeylCharacterCache {
  std::mutex mutex;
  std::map<Weight, std::shared_ptr<const WeylCharacterEntry>> entries;
};

std::shared_ptr<WeylCharacterCache> make_weyl_character_cache() { return std::make_shared<WeylCharacterCache>(); }

}  // namespace detail

Character::Character(std::size_t rank, std::initializer_list<std::pair<Weight, Int>> terms) : rank_(rank) {
  for (const auto& [w, m] : terms) add_term(w, m);
}

Character Character::unit(std::size_t rank) {
  Character c(rank);
  c.add_term(Weight(rank), 1);
  return c;
}

Int Character::mult(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void Character::add_term(const Weight& w, Int mult) {
  check_rank(w);
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (!inserted) {
    it->second = checked_add(it->second, mult);
    if (it->second == 0) terms_.erase(it);
  }
}

Character& Character::operator+=(const Character& other) {
  check_rank(other);
  for (const auto& [w, m] : other.terms_) add_term(w, m);
  return *this;
}

Character& Character::operator-=(const Character& other) {
  check_rank(other);
  for (const auto& [w, m] : other.terms_) add_term(w, checked_neg(m));
  return *this;
}

Character Character::scaled(Int k) const {
  Character out(rank_);
  if (k == 0) return out;
  for (const auto& [w, m] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, checked_mul(k, m));
  return out;
}

Character operator*(const Character& a, const Character& b) { return multiply(a, b); }

void Character::check_rank(const Weight& w) const {
  if (w.rank() != rank_)
    throw InputError("weight " + to_string(w) + " does not match character rank " + std::to_string(rank_));
}

void Character::check_rank(const Character& other) const {
  if (other.rank_ != rank_)
    throw InputError("character rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(other.rank_));
}

Character multiply(const Character& a, const Character& b) {
  if (a.rank() != b.rank())
    throw InputError("character rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  std::unordered_map<Weight, Int, WeightHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [wa, ma] : a.terms())
    for (const auto& [wb, mb] : b.terms()) {
      Int& slot = acc[wa + wb];
      slot = checked_add(slot, checked_mul(ma, mb));
    }
  Character out(a.rank());
  for (const auto& [w, m] : acc) out.add_term(w, m);
  return out;
}

namespace {

std::map<Weight, Int> freudenthal(const Weight& lam, const RootSystem& rs) {
  std::map<Weight, Int> mult;
  const std::vector<Weight> dominant = rs.dominant_weights_below(lam);
  const Int top = rs.height_key(lam);
  const Weight lam_rho = lam + rs.rho();
  mult.emplace(lam, 1);
  for (std::size_t idx = 1; idx < dominant.size(); ++idx) {
    const Weight& mu = dominant[idx];
    const std::vector<Int> delta = *rs.root_coordinates(lam - mu);
    const Int denom = checked_sub(checked_mul(2, rs.inner_with_root(lam_rho, delta)), rs.root_norm(delta));
    Int num = 0;
    for (const auto& root : rs.positive_roots()) {
      for (Weight x = mu + root.weight; rs.height_key(x) <= top; x += root.weight) {
        auto it = mult.find(rs.dominant_conjugate(x));
        if (it == mult.end()) continue;
        num = checked_add(num, checked_mul(rs.inner_with_root(x, root.coords), it->second));
      }
    }
    num = checked_mul(2, num);
    if (denom <= 0 || num % denom != 0)
      throw InvariantError("Freudenthal recursion produced a non-integral multiplicity at " + to_string(mu));
    if (num != 0) mult.emplace(mu, num / denom);
  }
  return mult;
}

std::shared_ptr<const detail::WeylCharacterEntry> weyl_entry(const Weight& lam, const RootSystem& rs) {
  rs.check_rank(lam);
  if (!lam.is_dominant()) throw InputError("Weyl character needs a dominant weight, got " + to_string(lam));
  auto& cache = rs.weyl_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.entries.find(lam);
    if (it != cache.entries.end()) return it->second;
  }
  auto entry = std::make_shared<detail::WeylCharacterEntry>();
  entry->full = Character(rs.rank());
  if (rs.rank() == 1) {
    for (Int w = lam[0]; w >= -lam[0]; w -= 2) entry->full.add_term(Weight{w}, 1);
    entry->dominant.emplace(lam, 1);
    for (Int w = lam[0] - 2; w >= 0; w -= 2) entry->dominant.emplace(Weight{w}, 1);
  } else {
    entry->dominant = freudenthal(lam, rs);
    for (const auto& [mu, m] : entry->dominant)
      for (const Weight& w : weyl_orbit(mu, rs)) entry->full.add_term(w, m);
  }
  std::lock_guard lock(cache.mutex);
  return cache.entries.try_emplace(lam, std::move(entry)).first->second;
}

}  // namespace

const Character& weyl_character(const Weight& lam, const RootSystem& rs) { return weyl_entry(lam, rs)->full; }

const std::map<Weight, Int>& weyl_dominant_multiplicities(const Weight& lam, const RootSystem& rs) {
  return weyl_entry(lam, rs)->dominant;
}

Character frobenius_twist(const Character& chi, Int p, Int s) {
  if (s < 0) throw InputError("Frobenius twist exponent must be nonnegative, got " + std::to_string(s));
  if (p < 2) throw InputError("Frobenius twist needs p >= 2");
  const Int scale = checked_pow(p, s);
  Character out(chi.rank());
  for (const auto& [w, m] : chi.terms()) out.add_term(scale * w, m);
  return out;
}

Character formal_dual(const Character& chi) {
  Character out(chi.rank());
  for (const auto& [w, m] : chi.terms()) out.add_term(-w, m);
  return out;
}

Int dimension(const Character& chi) {
  Int s = 0;
  for (const auto& [w, m] : chi.terms()) s = checked_add(s, m);
  return s;
}

Character steinberg_character(const RootSystem& rs, Int p, Int r) {
  if (p < 2 || !is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (r < 1) throw InputError("r must be at least 1");
  return weyl_character((checked_pow(p, r) - 1) * rs.rho(), rs);
}

std::optional<Weight> find_invariance_violation(const Character& chi, const RootSystem& rs) {
  if (chi.rank() != rs.rank())
    throw InputError("character rank " + std::to_string(chi.rank()) + " does not match root system rank " + std::to_string(rs.rank()));
  for (const auto& [w, m] : chi.terms())
    for (std::size_t i = 0; i < rs.rank(); ++i)
      if (w[i] != 0 && chi.mult(rs.reflect(w, i)) != m) return w;
  return std::nullopt;
}

void require_w_invariant(const Character& chi, const RootSystem& rs, const char* what) {
  if (auto bad = find_invariance_violation(chi, rs))
    throw InputError(std::string(what) + ": character is not W-invariant at weight " + to_string(*bad));
}

std::optional<Weight> leading_weight(const Character& chi, const RootSystem& rs) {
  std::optional<Weight> best;
  Int best_key = 0;
  for (const auto& [w, m] : chi.terms()) {
    Int key = rs.height_key(w);
    if (!best || key > best_key || (key == best_key && w > *best)) {
      best = w;
      best_key = key;
    }
  }
  return best;
}

std::vector<Weight> maximal_dominant_weights(const Character& chi, const RootSystem& rs) {
  std::vector<Weight> dominant;
  for (const auto& [w, m] : chi.terms())
    if (w.is_dominant()) dominant.push_back(w);
  std::vector<Weight> out;
  for (const Weight& w : dominant) {
    bool maximal = true;
    for (const Weight& other : dominant)
      if (other != w && dominance_leq(w, other, rs)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(w);
  }
  return out;
}

BasisExpansion eliminate_leading_terms(const Character& chi, const RootSystem& rs,
                                       const std::function<const Character&(const Weight&)>& basis) {
  using Key = std::pair<Int, Weight>;
  std::map<Key, Int> work;
  for (const auto& [w, m] : chi.terms())
    if (w.is_dominant()) work.emplace(Key{rs.height_key(w), w}, m);

  BasisExpansion out;
  while (!work.empty()) {
    const auto top_it = std::prev(work.end());
    const Key top_key = top_it->first;
    const Weight top = top_key.second;
    const Int c = top_it->second;
    out.coeffs.emplace(top, c);
    const Character& element = basis(top);
    for (const auto& [w, m] : element.terms()) {
      if (!w.is_dominant()) continue;
      const Key key{rs.height_key(w), w};
      if (key > top_key)
        throw InvariantError("basis element at " + to_string(top) + " has support above its highest weight");
      auto [it, inserted] = work.try_emplace(key, 0);
      it->second = checked_sub(it->second, checked_mul(c, m));
      if (it->second == 0) work.erase(it);
    }
    if (work.count(top_key))
      throw InvariantError("basis element at " + to_string(top) + " does not have leading multiplicity 1");
  }
  return out;
}

WeylBasisExpansion to_weyl_basis(const Character& chi, const RootSystem& rs) {
  require_w_invariant(chi, rs, "to_weyl_basis");
  return eliminate_leading_terms(chi, rs, [&rs](const Weight& lam) -> const Character& { return weyl_character(lam, rs); });
}

Character from_weyl_basis(const WeylBasisExpansion& expansion, const RootSystem& rs) {
  Character out(rs.rank());
  for (const auto& [lam, c] : expansion.coeffs) out += weyl_character(lam, rs).scaled(c);
  return out;
}

}  // namespace cjcalc
