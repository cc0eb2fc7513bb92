#include "cjcalc/weight.hpp"

#include <sstream>

namespace cjcalc {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Weight::Weight(std::size_t rank) {
  if (rank > kMaxRank) throw InputError("rank " + std::to_string(rank) + " exceeds supported maximum " + std::to_string(kMaxRank));
  rank_ = static_cast<std::uint8_t>(rank);
}

Weight::Weight(std::initializer_list<Int> coords) : Weight(coords.size()) {
  std::size_t i = 0;
  for (Int c : coords) coords_[i++] = c;
}

Weight::Weight(std::span<const Int> coords) : Weight(coords.size()) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = coords[i];
}

Weight Weight::unit(std::size_t rank, std::size_t i) {
  Weight w(rank);
  w.coords_[i] = 1;
  return w;
}

Weight Weight::constant(std::size_t rank, Int value) {
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w.coords_[i] = value;
  return w;
}

bool Weight::is_zero() const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (coords_[i] < 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank_ != rank_) throw InputError("weight rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] = checked_add(coords_[i], other.coords_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank_ != rank_) throw InputError("weight rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] = checked_sub(coords_[i], other.coords_[i]);
  return *this;
}

Weight operator-(const Weight& a) {
  Weight out(a.rank_);
  for (std::size_t i = 0; i < a.rank_; ++i) out.coords_[i] = checked_neg(a.coords_[i]);
  return out;
}

Weight operator*(Int k, const Weight& a) {
  Weight out(a.rank_);
  for (std::size_t i = 0; i < a.rank_; ++i) out.coords_[i] = checked_mul(k, a.coords_[i]);
  return out;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = w.rank();
  for (Int c : w) h = h * 1000003u ^ static_cast<std::size_t>(c + 0x9e3779b9);
  return h;
}

std::string to_string(const Weight& w) {
  if (w.rank() == 1) return std::to_string(w[0]);
  return "(" + to_label(w) + ")";
}

std::string to_label(const Weight& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  return out.str();
}

std::vector<Weight> base_digits(const Weight& w, Int base) {
  if (base < 2) throw InputError("digit base must be at least 2");
  if (!w.is_dominant()) throw InputError("digit decomposition needs a dominant weight, got " + to_string(w));
  std::vector<Weight> digits;
  Weight rest = w;
  do {
    Weight digit(w.rank());
    for (std::size_t i = 0; i < w.rank(); ++i) {
      digit[i] = rest[i] % base;
      rest[i] /= base;
    }
    digits.push_back(digit);
  } while (!rest.is_zero());
  return digits;
}

std::pair<Weight, Weight> split_restricted(const Weight& w, Int base) {
  if (!w.is_dominant()) throw InputError("restricted split needs a dominant weight, got " + to_string(w));
  Weight low(w.rank()), high(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i) {
    low[i] = w[i] % base;
    high[i] = w[i] / base;
  }
  return {low, high};
}

bool is_restricted(const Weight& w, Int bound) {
  for (Int c : w)
    if (c < 0 || c >= bound) return false;
  return true;
}

}  // namespace cjcalc
