#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cjcalc/character.hpp"
#include "cjcalc/decomp.hpp"
#include "cjcalc/finite.hpp"

namespace cjcalc {

/// Exact quotient q with den * q == num, by leading-term long division.
/// Throws DivisionError naming the first obstructing remainder term.
Character character_divide(const Character& num, const Character& den, const RootSystem& rs);

class QrData;
using QrDataPtr = std::shared_ptr<const QrData>;

/// ch Q-hat_r(lam) for lam in X_r together with q_r(lam) = ch Q-hat_r(lam) / ch St_r.
class QrData {
 public:
  struct Entry {
    Character qhat;
    Character q;
  };

  /// Type A1: ch Q-hat_1(m) = chi(2p-2-m) + chi(m) for m <= p-2, chi(p-1)
  /// for m = p-1; for r > 1 the product of twisted Q-hat_1 over base-p digits.
  static QrDataPtr builtin_a1(Int p, Int r);

  /// Validates W-invariance and exact divisibility by ch St_r for every
  /// entry, and q_r((q-1) rho) == chi(0) when the Steinberg entry is present.
  static QrDataPtr from_qhat(RootSystemPtr rs, Int p, Int r, std::map<Weight, Character> qhat,
                             Provenance provenance = Provenance::File);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  Int p() const { return p_; }
  Int r() const { return r_; }
  Provenance provenance() const { return provenance_; }
  const std::map<Weight, Entry>& entries() const { return entries_; }

  bool covers_restricted_weights() const;
  /// Throws CoverageError for a missing lam.
  const Entry& entry(const Weight& lam) const;

 private:
  QrData(RootSystemPtr rs, Int p, Int r, Provenance provenance) : rs_(std::move(rs)), p_(p), r_(r), provenance_(provenance) {}

  RootSystemPtr rs_;
  Int p_;
  Int r_;
  Provenance provenance_;
  std::map<Weight, Entry> entries_;
};

const Character& qr_character(const Weight& lam, const QrData& data);

/// [Q-hat_r(lam) : U_r(mu)] = [chi_p(mu) q_r(lam*) : St_r]_{G(F_q)}.
Int cj_lhs(const Weight& lam, const Weight& mu, const DecompositionProvider& provider, const QrData& data,
           SteinbergMethod method = SteinbergMethod::SimpleBasis, const NuRangeOptions& options = {});

/// sum_nu [L(mu) (x) L(nu) : L(lam + q nu)]_G.
Int cj_rhs(const Weight& lam, const Weight& mu, Int r, const DecompositionProvider& provider, const NuRangeOptions& options = {});

/// The nu that can contribute to cj_rhs(lam, mu): lam + (q - 1) nu <= mu.
std::vector<Weight> cj_nu_range(const Weight& lam, const Weight& mu, Int r, const DecompositionProvider& provider,
                                const NuRangeOptions& options = {});

/// Row labels lam, column labels mu, both X_r in lexicographic order.
struct MultiplicityTable {
  Int p = 0;
  Int r = 0;
  std::string type;
  std::vector<Weight> labels;
  std::vector<std::vector<Int>> lhs;  // [Q-hat_r(lam) : U_r(mu)] via q_r
  std::vector<std::vector<Int>> rhs;  // tensor-product nu-sum
  std::string lhs_route;
  std::string rhs_route;

  bool agree() const { return lhs == rhs; }
  /// (row, column) index pairs where the routes differ.
  std::vector<std::pair<std::size_t, std::size_t>> mismatches() const;
};

MultiplicityTable cj_table(const DecompositionProvider& provider, const QrData& data,
                           SteinbergMethod method = SteinbergMethod::SimpleBasis, const NuRangeOptions& options = {},
                           unsigned jobs = 1);

struct IdentityCheck {
  Int lhs = 0;
  Int rhs = 0;
  bool holds() const { return lhs == rhs; }
};

/// [chi : chi_p(q nu + lam)]_G against [chi q_r(lam*) : chi_p((q-1) rho + q nu)]_G.
IdentityCheck jantzen_identity_check(const Character& chi, const Weight& lam, const Weight& nu,
                                     const DecompositionProvider& provider, const QrData& data);

/// mu -> sum_nu [L(mu) (x) L(nu) : L(lam + q nu)]_G over mu in X_r: the
/// exponents of U_r(mu) in bar-Q_r(lam).
std::map<Weight, Int> barq_multiplicities(const Weight& lam, Int r, const DecompositionProvider& provider,
                                          const NuRangeOptions& options = {});

/// [G(U_r(mu)) : I(sigma)] = [L(sigma_0) (x) L(sigma_1) : L(mu)]_{G(F_q)}.
Int induced_socle_multiplicity(const Weight& mu, const Weight& sigma, Int r, const DecompositionProvider& provider);

/// The sections chi(lam) * chi(lam*)^{(r)} for dominant lam with
/// <lam, alpha_0^vee> <= bound, keyed by lam.
std::map<Weight, Character> gk_sections(Int bound, Int p, Int r, const RootSystem& rs);

/// Sum of gk_sections.
Character gk_truncated_character(Int bound, Int p, Int r, const RootSystem& rs);

/// Socle multiplicity of L(mu) in G(bar-Q_r(lam)) (through Hom into the
/// injective hulls U_r(mu')) against the socle count of
/// (+)_nu L(nu) (x) I(lam + q nu*). mu may be any dominant weight.
IdentityCheck theorem45a_socle_check(const Weight& lam, const Weight& mu, Int r, const DecompositionProvider& provider,
                                     const NuRangeOptions& options = {});

}  // namespace cjcalc
