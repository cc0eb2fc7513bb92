#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "cjcalc/integer.hpp"
#include "cjcalc/rootdata.hpp"
#include "cjcalc/weight.hpp"

namespace cjcalc {

/// A finitely supported integer-valued function on the weight lattice,
/// i.e. an element of Z[X]. Elements of Z[X]^W are the W-invariant ones;
/// invariance is checked by the operations that need it, not enforced here.
/// Zero multiplicities are never stored.
class Character {
 public:
  using Terms = std::map<Weight, Int>;

  Character() = default;
  explicit Character(std::size_t rank) : rank_(rank) {}
  Character(std::size_t rank, std::initializer_list<std::pair<Weight, Int>> terms);

  static Character unit(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Int mult(const Weight& w) const;

  void add_term(const Weight& w, Int mult);

  Character& operator+=(const Character& other);
  Character& operator-=(const Character& other);
  Character scaled(Int k) const;

  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character&, const Character&) = default;

 private:
  void check_rank(const Weight& w) const;
  void check_rank(const Character& other) const;

  std::size_t rank_ = 0;
  Terms terms_;
};

/// Coefficients of a character in one of the bases {chi(lam)} or {chi_p(lam)}.
struct BasisExpansion {
  std::map<Weight, Int> coeffs;

  Int at(const Weight& w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? 0 : it->second;
  }
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};
using WeylBasisExpansion = BasisExpansion;

Character multiply(const Character& a, const Character& b);

/// ch nabla(lam): Freudenthal recursion (closed string formula in rank 1),
/// memoized per root system.
const Character& weyl_character(const Weight& lam, const RootSystem& rs);

/// Dominant multiplicities of nabla(lam), keyed by dominant weight.
const std::map<Weight, Int>& weyl_dominant_multiplicities(const Weight& lam, const RootSystem& rs);

/// Every weight w replaced by p^s w.
Character frobenius_twist(const Character& chi, Int p, Int s);

/// w -> -w.
Character formal_dual(const Character& chi);

Int dimension(const Character& chi);

/// chi((p^r - 1) rho).
Character steinberg_character(const RootSystem& rs, Int p, Int r);

/// First weight (lexicographic) at which invariance under a simple
/// reflection fails, or nullopt when chi is W-invariant.
std::optional<Weight> find_invariance_violation(const Character& chi, const RootSystem& rs);

/// Throws InputError naming the offending weight when chi is not W-invariant.
void require_w_invariant(const Character& chi, const RootSystem& rs, const char* what);

/// Unique expansion in the Weyl basis by leading-term elimination.
WeylBasisExpansion to_weyl_basis(const Character& chi, const RootSystem& rs);

Character from_weyl_basis(const WeylBasisExpansion& expansion, const RootSystem& rs);

/// The support weight that is maximal for (height_key, lexicographic) order.
/// For a W-invariant character this weight is dominant and maximal under
/// dominance.
std::optional<Weight> leading_weight(const Character& chi, const RootSystem& rs);

/// Dominant weights of chi's support that are maximal under dominance.
std::vector<Weight> maximal_dominant_weights(const Character& chi, const RootSystem& rs);

/// Leading-term elimination against a unitriangular basis {basis(lam)} whose
/// element basis(lam) has highest weight lam with multiplicity 1. Works on
/// dominant parts only; the caller is responsible for W-invariance.
BasisExpansion eliminate_leading_terms(const Character& chi, const RootSystem& rs,
                                       const std::function<const Character&(const Weight&)>& basis);

}  // namespace cjcalc
