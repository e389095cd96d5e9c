#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace monstrous::gf2 {

/// Largest ambient dimension a packed vector can carry.
inline constexpr int kMaxDim = 64;

inline constexpr std::uint64_t low_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

inline constexpr int parity(std::uint64_t w) noexcept { return std::popcount(w) & 1; }

/// Bit vector over F2 of fixed length `dim` (<= 64), bit i = coordinate i.
class GF2Vector {
 public:
  constexpr GF2Vector() = default;
  constexpr GF2Vector(int dim, std::uint64_t bits) : bits_(bits & low_mask(dim)), dim_(dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("GF2Vector: dimension out of range");
  }

  static constexpr GF2Vector zero(int dim) { return GF2Vector(dim, 0); }
  static constexpr GF2Vector unit(int dim, int i) { return GF2Vector(dim, std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int dim() const noexcept { return dim_; }
  constexpr bool bit(int i) const noexcept { return (bits_ >> i) & 1u; }
  constexpr bool is_zero() const noexcept { return bits_ == 0; }
  constexpr int weight() const noexcept { return std::popcount(bits_); }

  GF2Vector& operator+=(const GF2Vector& o) {
    check_same(o);
    bits_ ^= o.bits_;
    return *this;
  }
  friend GF2Vector operator+(GF2Vector a, const GF2Vector& b) { return a += b; }

  /// Standard dot product sum_i u_i v_i.
  int dot(const GF2Vector& o) const {
    check_same(o);
    return parity(bits_ & o.bits_);
  }

  friend constexpr bool operator==(const GF2Vector&, const GF2Vector&) = default;
  friend constexpr auto operator<=>(const GF2Vector&, const GF2Vector&) = default;

  /// Coordinates as a 0/1 string, coordinate 0 first.
  std::string to_string() const {
    std::string s(static_cast<std::size_t>(dim_), '0');
    for (int i = 0; i < dim_; ++i)
      if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

 private:
  void check_same(const GF2Vector& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("GF2Vector: dimension mismatch");
  }

  std::uint64_t bits_ = 0;
  int dim_ = 0;
};

}  // namespace monstrous::gf2
