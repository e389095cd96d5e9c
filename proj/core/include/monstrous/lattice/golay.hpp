#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace monstrous::lattice {

/// Extended binary Golay code, built from the cyclic quadratic-residue code
/// of length 23 with generator polynomial x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
/// and an overall parity bit in coordinate 23. Codewords are 24-bit masks.
class GolayCode {
 public:
  /// Builds the code and verifies [24, 12, 8]; throws std::logic_error otherwise.
  GolayCode();

  const std::array<std::uint32_t, 12>& generators() const noexcept { return gens_; }
  /// All 4096 codewords, in Gray-code order of the generators (0 first).
  const std::vector<std::uint32_t>& codewords() const noexcept { return words_; }
  /// The 759 weight-8 codewords, sorted.
  std::vector<std::uint32_t> octads() const;
  /// Counts indexed by weight 0..24.
  std::array<std::uint32_t, 25> weight_distribution() const;
  int min_distance() const;
  int rank() const;

 private:
  std::array<std::uint32_t, 12> gens_{};
  std::vector<std::uint32_t> words_;
};

const GolayCode& golay_code();

}  // namespace monstrous::lattice
