#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cjcalc/integer.hpp"

namespace cjcalc {

inline constexpr std::size_t kMaxRank = 8;

/// A point of the weight lattice X, in fundamental-weight coordinates.
///
/// Storage is inline (no allocation); ranks up to kMaxRank are supported.
/// Unused trailing coordinates are kept at zero so the defaulted ordering
/// is the lexicographic order on the used coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<Int> coords);
  explicit Weight(std::span<const Int> coords);

  static Weight unit(std::size_t rank, std::size_t i);
  static Weight constant(std::size_t rank, Int value);

  std::size_t rank() const { return rank_; }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }

  const Int* begin() const { return coords_.data(); }
  const Int* end() const { return coords_.data() + rank_; }

  bool is_zero() const;
  bool is_dominant() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(const Weight& a);
  friend Weight operator*(Int k, const Weight& a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::array<Int, kMaxRank> coords_{};
  std::uint8_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// "(1,0)" for rank >= 2, "3" for rank 1.
std::string to_string(const Weight& w);

/// "1,0": the comma-joined form used for table headers.
std::string to_label(const Weight& w);

/// Coordinate-wise base-`base` digits of a dominant weight, least
/// significant first. Always returns at least one digit.
std::vector<Weight> base_digits(const Weight& w, Int base);

/// Coordinate-wise (w mod base, w div base) for a dominant weight.
std::pair<Weight, Weight> split_restricted(const Weight& w, Int base);

bool is_restricted(const Weight& w, Int bound);

}  // namespace cjcalc
