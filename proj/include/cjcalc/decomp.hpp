#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>

#include "cjcalc/character.hpp"
#include "cjcalc/rootdata.hpp"

namespace cjcalc {

/// One row of decomposition numbers: mu -> [nabla(lam) : L(mu)].
using DecompositionRow = std::map<Weight, Int>;

enum class Provenance { BuiltinSl2, BuiltinA1, File };
std::string to_string(Provenance p);

class DecompositionProvider;
using ProviderPtr = std::shared_ptr<const DecompositionProvider>;

/// Source of decomposition numbers [nabla(lam) : L(mu)] for a fixed root
/// system and prime p, plus the simple characters derived from them.
///
/// Simple characters of restricted weights are recovered by triangular
/// inversion of the rows; all other simple characters come from the twisted
/// tensor product over base-p digits. Both are memoized (write-once).
class DecompositionProvider {
 public:
  /// Type A1: rows are computed on demand for every m >= 0.
  static ProviderPtr builtin_sl2(Int p);

  /// Rows from data. Validates unitriangularity, nonnegativity and
  /// dimension consistency for every row; throws InputError naming lambda.
  static ProviderPtr from_rows(RootSystemPtr rs, Int p, std::map<Weight, DecompositionRow> rows,
                               Provenance provenance = Provenance::File);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  Int p() const { return p_; }
  Provenance provenance() const { return provenance_; }

  bool has_row(const Weight& lam) const;
  /// Throws CoverageError when the row is unavailable.
  DecompositionRow row(const Weight& lam) const;
  /// Weights with stored rows (empty for the algorithmic provider).
  std::vector<Weight> stored_weights() const;

  const Character& simple_character(const Weight& lam) const;

  /// Memo slot for [L(mu) : L(lam)]_{G(F_q)}, keyed by (r, mu).
  const std::map<Weight, Int>* find_restriction(Int r, const Weight& mu) const;
  const std::map<Weight, Int>& store_restriction(Int r, const Weight& mu, std::map<Weight, Int> value) const;

 private:
  DecompositionProvider(RootSystemPtr rs, Int p, Provenance provenance);
  void validate() const;
  Character restricted_simple_character(const Weight& lam) const;

  RootSystemPtr rs_;
  Int p_;
  Provenance provenance_;
  std::map<Weight, DecompositionRow> rows_;

  mutable std::mutex mutex_;
  mutable std::map<Weight, std::shared_ptr<const Character>> simple_cache_;
  mutable std::map<Weight, std::shared_ptr<const DecompositionRow>> row_cache_;
  mutable std::map<std::pair<Int, Weight>, std::shared_ptr<const std::map<Weight, Int>>> restriction_cache_;
};

/// [nabla(m) : L(n)] for SL2 in characteristic p, computed by peeling
/// ch nabla(m) against simple characters built bottom-up from the twisted
/// tensor product.
DecompositionRow sl2_decomposition_row(Int m, Int p);

/// ch L(lam).
const Character& simple_character(const Weight& lam, const DecompositionProvider& provider);

/// Coefficients [chi : chi_p(lam)]_G.
BasisExpansion to_simple_basis(const Character& chi, const DecompositionProvider& provider);
Character from_simple_basis(const BasisExpansion& expansion, const DecompositionProvider& provider);

/// a_{nu gamma} = [chi_p(nu) : chi(gamma)]_G and b_{gamma nu} = [chi(gamma) : chi_p(nu)]_G
/// on a dominance-closed window.
struct BasisChangeMatrices {
  std::vector<Weight> window;
  std::map<std::pair<Weight, Weight>, Int> a;  // (nu, gamma)
  std::map<std::pair<Weight, Weight>, Int> b;  // (gamma, nu)

  Int a_at(const Weight& nu, const Weight& gamma) const;
  Int b_at(const Weight& gamma, const Weight& nu) const;
  /// sum_gamma b(lam, gamma) a(gamma, mu) == delta(lam, mu) on the window.
  bool mutually_inverse() const;
};

BasisChangeMatrices basis_change_matrices(std::span<const Weight> window, const DecompositionProvider& provider);

}  // namespace cjcalc
