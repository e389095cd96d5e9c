#include "monstrous/lattice/golay.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace monstrous::lattice {

GolayCode::GolayCode() {
  constexpr std::uint32_t g = (1u << 11) | (1u << 10) | (1u << 6) | (1u << 5) | (1u << 4) | (1u << 2) | 1u;
  for (int i = 0; i < 12; ++i) {
    const std::uint32_t w = g << i;  // degree <= 22, so no wraparound
    gens_[static_cast<std::size_t>(i)] = w | (static_cast<std::uint32_t>(std::popcount(w) & 1) << 23);
  }
  words_.reserve(4096);
  std::uint32_t v = 0;
  words_.push_back(v);
  for (std::uint32_t i = 1; i < 4096; ++i) {
    v ^= gens_[static_cast<std::size_t>(std::countr_zero(i))];
    words_.push_back(v);
  }
  if (rank() != 12 || min_distance() != 8) throw std::logic_error("GolayCode: generator does not yield [24,12,8]");
}

std::vector<std::uint32_t> GolayCode::octads() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t w : words_)
    if (std::popcount(w) == 8) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::array<std::uint32_t, 25> GolayCode::weight_distribution() const {
  std::array<std::uint32_t, 25> d{};
  for (std::uint32_t w : words_) ++d[static_cast<std::size_t>(std::popcount(w))];
  return d;
}

int GolayCode::min_distance() const {
  int best = 25;
  for (std::uint32_t w : words_)
    if (w != 0) best = std::min(best, std::popcount(w));
  return best;
}

int GolayCode::rank() const {
  std::vector<std::uint32_t> sorted(words_);
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  return std::bit_width(distinct) - 1;
}

const GolayCode& golay_code() {
  static const GolayCode code;
  return code;
}

}  // namespace monstrous::lattice
