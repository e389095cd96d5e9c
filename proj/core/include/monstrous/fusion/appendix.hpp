#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monstrous/lattice/lattice.hpp"

namespace monstrous::fusion {

/// <alpha, beta/2> mod 2 for alpha, beta in EE8, given in the ambient
/// coordinates of `ee8` (as built by lattice::build_EE8). Throws
/// std::invalid_argument when either vector is outside EE8.
int appendix_form_eval(const lattice::IntegerLattice& ee8, const std::vector<std::int64_t>& alpha,
                       const std::vector<std::int64_t>& beta);

/// The two kinds of module labels the pairing below knows about: untwisted
/// cosets V^eps_{beta/2 + EE8} and twisted modules (V^{T_chi})^eps.
struct ModuleLabel {
  enum class Kind { kCoset, kTwisted };

  Kind kind = Kind::kCoset;
  int eps = 1;
  std::vector<std::int64_t> beta;  // coset labels only

  static ModuleLabel coset(std::vector<std::int64_t> beta, int eps) { return {Kind::kCoset, eps, std::move(beta)}; }
  /// V^-_{EE8}, the coset of 0 with sign -1.
  static ModuleLabel minus() { return coset(std::vector<std::int64_t>(8, 0), -1); }
  static ModuleLabel twisted(int eps) { return {Kind::kTwisted, eps, {}}; }

  bool is_minus() const;
};

/// The pairing on labels where it is determined: coset against coset by
/// appendix_form_eval, V^- against a twisted label is 1. Every other
/// combination is left undetermined (nullopt).
std::optional<int> label_pairing(const lattice::IntegerLattice& ee8, const ModuleLabel& a, const ModuleLabel& b);

}  // namespace monstrous::fusion
