#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "monstrous/gf2/forms.hpp"
#include "monstrous/gf2/subspace.hpp"

namespace monstrous::fusion {

// Weights are half-integers; everywhere in this module they are carried
// doubled, so weight 3/2 is the integer 3.

class InsufficientProfileData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ElementClass { kZero, kSingular, kNonsingular };

std::string to_string(ElementClass c);

/// Minimal weight and the few graded dimensions known for one class of
/// simple current module. Below the minimal weight every dimension is 0;
/// a weight missing from `dims` at or above it is unknown.
struct ModuleClassProfile {
  int min_weight2 = 0;
  std::map<int, std::uint64_t> dims;

  std::optional<std::uint64_t> dim_at(int weight2) const;

  static ModuleClassProfile zero_class();
  static ModuleClassProfile singular_class();
  static ModuleClassProfile nonsingular_class();
};

/// R(U): F2^10 with a plus-type form and a complementary pair of maximal
/// totally singular subspaces.
class RSpace {
 public:
  /// Five hyperbolic planes; phi spanned by e0,e2,..,e8 and psi by e1,e3,..,e9.
  static RSpace standard();

  /// Validates: q nondegenerate of type (0, plus, 5), phi and psi maximal
  /// totally singular with zero intersection.
  RSpace(gf2::QuadraticForm q, gf2::Subspace phi, gf2::Subspace psi);

  const gf2::QuadraticForm& q() const noexcept { return q_; }
  const gf2::BilinearForm& b() const noexcept { return b_; }
  const gf2::Subspace& phi() const noexcept { return phi_; }
  const gf2::Subspace& psi() const noexcept { return psi_; }

  ElementClass class_of(std::uint64_t a) const noexcept {
    return a == 0 ? ElementClass::kZero : (q_(a) == 0 ? ElementClass::kSingular : ElementClass::kNonsingular);
  }
  const ModuleClassProfile& profile(ElementClass c) const noexcept { return profiles_[static_cast<int>(c)]; }
  void set_profile(ElementClass c, ModuleClassProfile p) { profiles_[static_cast<int>(c)] = std::move(p); }

  /// The lowest-pivot basis vector of phi.
  std::uint64_t designated_x() const;
  /// The smallest element of psi pairing to 1 with designated_x().
  std::uint64_t designated_y() const;

 private:
  gf2::QuadraticForm q_;
  gf2::BilinearForm b_;
  gf2::Subspace phi_, psi_;
  std::array<ModuleClassProfile, 3> profiles_;
};

/// R(U)^3 with q(a,b,c) = q(a) + q(b) + q(c); a sits in bits 0..9, b in
/// 10..19, c in 20..29.
class TripleSpace {
 public:
  static constexpr int kDim = 30;

  explicit TripleSpace(RSpace base);

  const RSpace& base() const noexcept { return base_; }
  const gf2::QuadraticForm& q3() const noexcept { return q3_; }
  const gf2::BilinearForm& b3() const noexcept { return b3_; }

  static constexpr std::uint64_t pack(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    return a | (b << 10) | (c << 20);
  }
  static constexpr std::uint64_t component(std::uint64_t t, int i) noexcept { return (t >> (10 * i)) & 0x3ffu; }

  /// Sum of the component minimal weights (doubled).
  int min_weight2(std::uint64_t t) const noexcept;
  /// Dimension of the doubled-weight piece of the triple module labelled t,
  /// summed over all compositions of the weight into three parts. Throws
  /// InsufficientProfileData when an unknown dimension meets a nonzero cofactor.
  std::uint64_t weight_dim(std::uint64_t t, int weight2) const;

 private:
  RSpace base_;
  gf2::QuadraticForm q3_;
  gf2::BilinearForm b3_;
};

}  // namespace monstrous::fusion
