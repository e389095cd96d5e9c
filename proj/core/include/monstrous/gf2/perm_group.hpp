#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monstrous/bigint.hpp"
#include "monstrous/gf2/forms.hpp"
#include "monstrous/gf2/subspace.hpp"

namespace monstrous::gf2 {

/// Permutation as an image array; composition a * b applies a first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t p) const noexcept { return images_[p]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  Perm inverse() const;
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Permutation group given by generators.
///
/// When `vector_dim` is set the points are the nonzero vectors of F2^n,
/// point p standing for the vector with bits p + 1, and every generator is
/// the restriction of a linear map.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::optional<int> vector_dim = std::nullopt);

  /// Group of linear maps of F2^n acting on nonzero vectors; each map is given
  /// by the images of the unit vectors.
  static PermGroup from_linear_maps(int n, const std::vector<std::vector<std::uint64_t>>& maps);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return gens_; }
  std::optional<int> vector_dim() const noexcept { return vector_dim_; }

  /// Image of a vector under generator g (requires vector_dim).
  std::uint64_t apply_to_vector(std::size_t g, std::uint64_t v) const;

 private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::optional<int> vector_dim_;
};

/// Base and strong generating set computed by deterministic Schreier-Sims.
///
/// New base points are taken from the element that first reaches an empty
/// level: among the points it moves, the one on its shortest cycle (lowest
/// index on ties). Schreier generators are processed in a fixed order.
class StabilizerChain {
 public:
  explicit StabilizerChain(const PermGroup& g);

  BigInt order() const;
  std::vector<std::uint32_t> base() const;
  /// Basic orbit lengths |b_i^{G_i}|; their product is order().
  std::vector<std::size_t> orbit_lengths() const;
  bool contains(const Perm& p) const;

 private:
  struct Level {
    std::uint32_t base_point;
    std::vector<Perm> gens;
    std::vector<std::optional<Perm>> transversal;  // indexed by point
    std::vector<std::optional<Perm>> inverse;
    std::vector<std::uint32_t> orbit;
  };

  bool sifts_to_identity(std::size_t level, Perm p) const;
  void insert(std::size_t level, const Perm& p);
  void extend(std::size_t level, const Perm& h);
  void new_level(const Perm& moved_by);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Order of the group via its stabilizer chain.
BigInt group_order(const PermGroup& g);

/// Orthogonal reflections v -> v + B(v,a) a in nonsingular vectors a.
///
/// The reflection vectors are chosen greedily in increasing order, keeping a
/// only if it is outside the orbit of those already chosen; at the end the
/// chosen maps generate every reflection by conjugation. Requires a
/// nondegenerate form of dimension <= 16.
PermGroup transvection_generators(const QuadraticForm& q);

std::size_t orbit_of_point(const PermGroup& g, std::uint32_t point);
/// Length of the orbit of s under the induced action (requires vector_dim).
std::size_t orbit_of_subspace(const PermGroup& g, const Subspace& s);

/// Number of invertible n x n matrices preserving q, by scanning all of them
/// (n <= 4); the maps themselves are appended to `out` when given.
std::uint64_t count_isometries_exhaustive(const QuadraticForm& q,
                                          std::vector<std::vector<std::uint64_t>>* out = nullptr);

}  // namespace monstrous::gf2
