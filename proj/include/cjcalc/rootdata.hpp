#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cjcalc/integer.hpp"
#include "cjcalc/weight.hpp"

namespace cjcalc {

/// Square integer matrix with entry (i, j) = <alpha_i, alpha_j^vee>, so row i
/// is the simple root alpha_i written in fundamental-weight coordinates.
///
/// The constructor validates: square, nonempty, rank <= kMaxRank, diagonal 2,
/// off-diagonal <= 0, a_ij == 0 iff a_ji == 0, and finite type (all principal
/// minors positive). Violations throw InputError naming the entry.
class CartanMatrix {
 public:
  explicit CartanMatrix(std::vector<std::vector<Int>> entries);

  std::size_t rank() const { return entries_.size(); }
  Int operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<Int>>& entries() const { return entries_; }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::vector<std::vector<Int>> entries_;
};

/// Built-in Cartan matrices: "A1", "A2", "B2" (alpha_1 long), "G2" (alpha_1 short).
CartanMatrix cartan_of_type(std::string_view name);
std::vector<std::string> builtin_type_names();

struct PositiveRoot {
  Weight weight;              // fundamental-weight coordinates
  std::vector<Int> coords;    // simple-root coordinates
  Int height = 0;
};

namespace detail {
struct WeylCharacterCache;
std::shared_ptr<WeylCharacterCache> make_weyl_character_cache();
}  // namespace detail

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Root-system data derived once from a Cartan matrix. Immutable; the only
/// mutable state is the write-once Weyl character memo owned through
/// weyl_cache().
class RootSystem {
 public:
  static RootSystemPtr build(CartanMatrix cartan, std::string name = {});
  static RootSystemPtr of_type(std::string_view name);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return cartan_.rank(); }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  const Weight& rho() const { return rho_; }
  Int coxeter_number() const { return coxeter_number_; }

  /// alpha_0^vee in the basis of simple coroots.
  const std::vector<Int>& highest_short_coroot() const { return highest_short_coroot_; }
  /// Squared lengths of the simple roots divided by two, as coprime integers.
  const std::vector<Int>& symmetrizer() const { return symmetrizer_; }

  /// -w0 permutes fundamental weights: -w0(omega_i) = omega_{perm[i]}.
  const std::vector<std::size_t>& minus_w0_permutation() const { return minus_w0_perm_; }
  /// Reduced word of the longest element, applied left to right.
  const std::vector<std::size_t>& w0_word() const { return w0_word_; }

  Weight zero() const { return Weight(rank()); }
  Weight simple_root(std::size_t i) const;
  Weight reflect(const Weight& w, std::size_t i) const;
  Weight apply_w0(const Weight& w) const;
  Weight dominant_conjugate(const Weight& w) const;

  /// Coordinates of w in the simple-root basis, or nullopt when w is
  /// outside the root lattice.
  std::optional<std::vector<Int>> root_coordinates(const Weight& w) const;

  /// det(A) times the sum of simple-root coordinates of w. Strictly
  /// increasing along the dominance order; positive on nonzero dominant weights.
  Int height_key(const Weight& w) const;
  /// height_key(omega_i) for each i (all positive for finite type).
  const std::vector<Int>& height_key_coefficients() const { return height_coeffs_; }

  /// (w, sum_j n_j alpha_j) for the normalization (omega_i, alpha_j) = delta_ij d_j.
  Int inner_with_root(const Weight& w, const std::vector<Int>& root_coords) const;
  /// (beta, beta) for beta = sum_j n_j alpha_j.
  Int root_norm(const std::vector<Int>& root_coords) const;

  /// <w, alpha_0^vee>.
  Int pair_alpha0(const Weight& w) const;

  /// All dominant weights mu with mu <= lam, sorted by descending
  /// (height_key, lexicographic); lam itself comes first.
  std::vector<Weight> dominant_weights_below(const Weight& lam) const;

  void check_rank(const Weight& w) const;

  detail::WeylCharacterCache& weyl_cache() const { return *weyl_cache_; }

 private:
  RootSystem(CartanMatrix cartan, std::string name);

  CartanMatrix cartan_;
  std::string name_;
  std::vector<PositiveRoot> positive_roots_;
  Weight rho_;
  Int coxeter_number_ = 0;
  std::vector<Int> highest_short_coroot_;
  std::vector<Int> symmetrizer_;
  std::vector<std::size_t> minus_w0_perm_;
  std::vector<std::size_t> w0_word_;
  std::vector<std::vector<Int>> adjugate_t_;  // adj(A^T)
  Int det_ = 0;
  std::vector<Int> height_coeffs_;
  std::shared_ptr<detail::WeylCharacterCache> weyl_cache_;
};

/// mu <= lam: lam - mu is a nonnegative integer combination of simple roots.
bool dominance_leq(const Weight& mu, const Weight& lam, const RootSystem& rs);

/// Full W-orbit by simple-reflection closure, sorted lexicographically.
std::vector<Weight> weyl_orbit(const Weight& lam, const RootSystem& rs);

/// nu* = -w0 nu.
Weight dual_weight(const Weight& nu, const RootSystem& rs);

/// Weights with every coordinate in [0, p^r - 1], lexicographic order.
std::vector<Weight> restricted_weights(const RootSystem& rs, Int p, Int r);

/// <nu, alpha_0^vee> < h, for dominant nu.
bool in_gamma_h(const Weight& nu, const RootSystem& rs);

/// Dominant weights with every coordinate in [0, bound], lexicographic order.
std::vector<Weight> dominant_box(const RootSystem& rs, Int bound);

}  // namespace cjcalc
