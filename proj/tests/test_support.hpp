#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "cjcalc/character.hpp"
#include "cjcalc/decomp.hpp"
#include "oracles.hpp"

namespace testing {

inline std::filesystem::path source_path(const std::string& relative) {
  return std::filesystem::path(CJCALC_SOURCE_DIR) / relative;
}

inline oracle::Matrix matrix_of(const cjcalc::RootSystem& rs) {
  oracle::Matrix m;
  for (const auto& row : rs.cartan().entries()) m.emplace_back(row.begin(), row.end());
  return m;
}

inline oracle::Vec vec_of(const cjcalc::Weight& w) { return oracle::Vec(w.begin(), w.end()); }

inline cjcalc::Weight weight_of(const oracle::Vec& v) {
  const std::vector<cjcalc::Int> coords(v.begin(), v.end());
  return cjcalc::Weight(std::span<const cjcalc::Int>(coords));
}

inline oracle::Poly poly_of(const cjcalc::Character& chi) {
  oracle::Poly out;
  for (const auto& [w, c] : chi.terms()) out[vec_of(w)] = c;
  return out;
}

inline cjcalc::Character character_of(const oracle::Poly& p, std::size_t rank) {
  cjcalc::Character out(rank);
  for (const auto& [w, c] : p) out.add_term(weight_of(w), c);
  return out;
}

// Random virtual combination sum c_i chi(lam_i) with up to `terms` summands.
inline cjcalc::Character random_combination(const cjcalc::RootSystem& rs, std::mt19937_64& rng, int terms, cjcalc::Int max_coord,
                                            bool allow_negative) {
  std::uniform_int_distribution<int> count(1, terms);
  std::uniform_int_distribution<cjcalc::Int> coord(0, max_coord);
  std::uniform_int_distribution<cjcalc::Int> coeff(allow_negative ? -3 : 1, 3);
  cjcalc::Character out(rs.rank());
  for (int k = count(rng); k > 0; --k) {
    cjcalc::Weight lam(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) lam[i] = coord(rng);
    out += cjcalc::weyl_character(lam, rs).scaled(coeff(rng));
  }
  return out;
}

}  // namespace testing
