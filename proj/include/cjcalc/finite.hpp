#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cjcalc/character.hpp"
#include "cjcalc/decomp.hpp"

namespace cjcalc {

/// [chi : L(lam)]_{G(F_q)} for lam in X_r, q = p^r. Only nonzero values are stored.
struct FiniteMultiplicities {
  Int p = 0;
  Int r = 0;
  std::map<Weight, Int> values;

  Int at(const Weight& lam) const {
    auto it = values.find(lam);
    return it == values.end() ? 0 : it->second;
  }
  friend bool operator==(const FiniteMultiplicities&, const FiniteMultiplicities&) = default;
};

/// Restriction of chi to G(F_q): expand chi in the simple basis, then
/// restrict each L(mu) by recursive untwisting over base-q digits (the q-th
/// power Frobenius is trivial on F_q-points).
FiniteMultiplicities finite_composition_multiplicities(const Character& chi, Int r, const DecompositionProvider& provider);

/// [L(mu) : L(lam)]_{G(F_q)} for all lam, memoized in the provider.
const std::map<Weight, Int>& restrict_simple(const Weight& mu, Int r, const DecompositionProvider& provider);

/// Depth of the untwisting recursion used for mu (0 when mu is q-restricted).
int untwisting_depth(const Weight& mu, Int r, const DecompositionProvider& provider);

enum class SteinbergMethod { Direct, GoodFiltration, SimpleBasis };
std::string to_string(SteinbergMethod m);
std::optional<SteinbergMethod> parse_steinberg_method(std::string_view name);

/// Controls the finite nu-range used by the nu-sums. `widen` multiplies the
/// size of each coordinate box; with `exact_filter` off every box point is
/// summed, which must not change any result when the box is sound.
struct NuRangeOptions {
  Int widen = 1;
  bool exact_filter = true;
};

/// Dominant nu with base + step * nu <= t for some target t, enumerated over
/// a per-coordinate box derived from the height functional.
std::vector<Weight> nu_candidates(const Weight& base, Int step, std::span<const Weight> targets, const RootSystem& rs,
                                  const NuRangeOptions& options = {});

/// Finite set of dominant nu that can contribute to the Steinberg nu-sums
/// for chi: (q - 1) rho + q nu <= lam_max + nu for a maximal dominant
/// support weight lam_max.
std::vector<Weight> nu_bound(const Character& chi, Int p, Int r, const RootSystem& rs, const NuRangeOptions& options = {});

/// [chi : St_r]_{G(F_q)} by the selected route. The good-filtration route
/// does not consult the provider beyond its root system.
Int steinberg_multiplicity(const Character& chi, Int r, const DecompositionProvider& provider, SteinbergMethod method,
                           const NuRangeOptions& options = {});

/// Good-filtration route without any decomposition data.
Int steinberg_multiplicity_good_filtration(const Character& chi, Int p, Int r, const RootSystem& rs,
                                           const NuRangeOptions& options = {});

}  // namespace cjcalc
