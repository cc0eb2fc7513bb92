#include "cjcalc/finite.hpp"

#include <algorithm>

namespace cjcalc {

namespace {

Int q_of(Int p, Int r) {
  if (r < 1) throw InputError("r must be at least 1, got " + std::to_string(r));
  return checked_pow(p, r);
}

// prod_j ch L(mu_j) over the base-q digits of mu, i.e. ch L(mu) with every
// q-power twist dropped.
Character untwisted_product(const Weight& mu, Int q, const DecompositionProvider& provider) {
  Character out = Character::unit(provider.root_system().rank());
  for (const Weight& digit : base_digits(mu, q)) {
    if (digit.is_zero()) continue;
    out = multiply(out, provider.simple_character(digit));
  }
  return out;
}

BasisExpansion untwisted_expansion(const Weight& mu, Int q, const DecompositionProvider& provider) {
  const RootSystem& rs = provider.root_system();
  BasisExpansion expansion = to_simple_basis(untwisted_product(mu, q, provider), provider);
  const Int ceiling = rs.height_key(mu);
  for (const auto& [nu, c] : expansion.coeffs)
    if (rs.height_key(nu) >= ceiling)
      throw InvariantError("untwisting did not descend: " + to_string(nu) + " from " + to_string(mu));
  return expansion;
}

}  // namespace

const std::map<Weight, Int>& restrict_simple(const Weight& mu, Int r, const DecompositionProvider& provider) {
  if (const auto* hit = provider.find_restriction(r, mu)) return *hit;
  const Int q = q_of(provider.p(), r);
  std::map<Weight, Int> out;
  if (is_restricted(mu, q)) {
    out.emplace(mu, 1);
  } else {
    for (const auto& [nu, c] : untwisted_expansion(mu, q, provider).coeffs)
      for (const auto& [lam, m] : restrict_simple(nu, r, provider)) {
        Int& slot = out[lam];
        slot = checked_add(slot, checked_mul(c, m));
      }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  }
  return provider.store_restriction(r, mu, std::move(out));
}

int untwisting_depth(const Weight& mu, Int r, const DecompositionProvider& provider) {
  const Int q = q_of(provider.p(), r);
  if (is_restricted(mu, q)) return 0;
  int deepest = 0;
  for (const auto& [nu, c] : untwisted_expansion(mu, q, provider).coeffs)
    deepest = std::max(deepest, untwisting_depth(nu, r, provider));
  return deepest + 1;
}

FiniteMultiplicities finite_composition_multiplicities(const Character& chi, Int r, const DecompositionProvider& provider) {
  FiniteMultiplicities out;
  out.p = provider.p();
  out.r = r;
  q_of(out.p, r);
  for (const auto& [mu, c] : to_simple_basis(chi, provider).coeffs)
    for (const auto& [lam, m] : restrict_simple(mu, r, provider)) {
      Int& slot = out.values[lam];
      slot = checked_add(slot, checked_mul(c, m));
    }
  std::erase_if(out.values, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string to_string(SteinbergMethod m) {
  switch (m) {
    case SteinbergMethod::Direct: return "direct";
    case SteinbergMethod::GoodFiltration: return "good_filtration";
    case SteinbergMethod::SimpleBasis: return "simple_basis";
  }
  return "unknown";
}

std::optional<SteinbergMethod> parse_steinberg_method(std::string_view name) {
  if (name == "direct") return SteinbergMethod::Direct;
  if (name == "good_filtration") return SteinbergMethod::GoodFiltration;
  if (name == "simple_basis") return SteinbergMethod::SimpleBasis;
  return std::nullopt;
}

std::vector<Weight> nu_candidates(const Weight& base, Int step, std::span<const Weight> targets, const RootSystem& rs,
                                  const NuRangeOptions& options) {
  if (step < 1) throw InputError("nu-range step must be positive");
  if (options.widen < 1) throw InputError("nu-range widening factor must be at least 1");
  const std::size_t n = rs.rank();
  const auto& coeffs = rs.height_key_coefficients();
  std::vector<Int> box(n, -1);
  for (const Weight& t : targets) {
    const Int slack = checked_sub(rs.height_key(t), rs.height_key(base));
    if (slack < 0) continue;
    for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], slack / checked_mul(step, coeffs[i]));
  }
  std::vector<Weight> out;
  if (box[0] < 0) return out;
  for (Int& b : box) b = checked_mul(b + 1, options.widen) - 1;

  Weight nu(n);
  for (;;) {
    bool keep = !options.exact_filter;
    if (!keep) {
      const Weight shifted = base + step * nu;
      keep = std::any_of(targets.begin(), targets.end(), [&](const Weight& t) { return dominance_leq(shifted, t, rs); });
    }
    if (keep) out.push_back(nu);
    std::size_t i = n;
    while (i > 0 && nu[i - 1] == box[i - 1]) {
      nu[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++nu[i - 1];
  }
  return out;
}

std::vector<Weight> nu_bound(const Character& chi, Int p, Int r, const RootSystem& rs, const NuRangeOptions& options) {
  const Int q = q_of(p, r);
  const std::vector<Weight> targets = maximal_dominant_weights(chi, rs);
  if (targets.empty()) return {};
  return nu_candidates((q - 1) * rs.rho(), q - 1, targets, rs, options);
}

Int steinberg_multiplicity_good_filtration(const Character& chi, Int p, Int r, const RootSystem& rs,
                                           const NuRangeOptions& options) {
  require_w_invariant(chi, rs, "steinberg_multiplicity");
  const Int q = q_of(p, r);
  const Weight st = (q - 1) * rs.rho();
  Int total = 0;
  for (const Weight& nu : nu_bound(chi, p, r, rs, options)) {
    const Character product = multiply(chi, weyl_character(nu, rs));
    total = checked_add(total, to_weyl_basis(product, rs).at(st + q * nu));
  }
  return total;
}

Int steinberg_multiplicity(const Character& chi, Int r, const DecompositionProvider& provider, SteinbergMethod method,
                           const NuRangeOptions& options) {
  const RootSystem& rs = provider.root_system();
  const Int p = provider.p();
  const Int q = q_of(p, r);
  const Weight st = (q - 1) * rs.rho();
  switch (method) {
    case SteinbergMethod::Direct:
      return finite_composition_multiplicities(chi, r, provider).at(st);
    case SteinbergMethod::GoodFiltration:
      return steinberg_multiplicity_good_filtration(chi, p, r, rs, options);
    case SteinbergMethod::SimpleBasis: {
      require_w_invariant(chi, rs, "steinberg_multiplicity");
      Int total = 0;
      for (const Weight& nu : nu_bound(chi, p, r, rs, options)) {
        const Character product = multiply(chi, provider.simple_character(nu));
        total = checked_add(total, to_simple_basis(product, provider).at(st + q * nu));
      }
      return total;
    }
  }
  throw InputError("unknown Steinberg multiplicity method");
}

}  // namespace cjcalc
