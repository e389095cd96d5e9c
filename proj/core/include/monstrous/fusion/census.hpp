#pragma once

#include <cstdint>
#include <string>

#include "monstrous/fusion/space.hpp"

namespace monstrous::fusion {

/// The headline numbers of the singular-space construction for one choice
/// of (phi, psi).
struct FusionCensus {
  std::string generator_choice;
  std::uint64_t case1 = 0;
  std::uint64_t case2 = 0;
  std::uint64_t dim2 = 0;
  std::int64_t trace_z = 0;
  std::uint64_t dim1_tilde = 0;

  friend bool operator==(const FusionCensus&, const FusionCensus&) = default;
};

FusionCensus compute_census(const RSpace& r);

/// {generator_choice, case1, case2, dim2, trace_z, dim1_tilde}
std::string census_json(const FusionCensus& c);
FusionCensus census_from_json(const std::string& text);

}  // namespace monstrous::fusion
