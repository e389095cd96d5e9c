#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monstrous/bigint.hpp"
#include "monstrous/gf2/forms.hpp"
#include "monstrous/lattice/matrix.hpp"

namespace monstrous::lattice {

/// Full-rank lattice given by basis rows in integer ambient coordinates.
///
/// Ambient coordinates may be scaled so that they stay integral: the inner
/// product of lattice vectors is (x . y) / scale, and gram() is reported in
/// that normalisation.
class IntegerLattice {
 public:
  /// Throws when the rows are not independent or some inner product is not
  /// an integer after dividing by `scale`.
  IntegerLattice(std::string name, IntMatrix basis, std::int64_t scale, std::string scale_note = {});
  /// The lattice spanned by arbitrary generators, held by its Hermite basis.
  static IntegerLattice from_generators(std::string name, const IntMatrix& generators, std::int64_t scale,
                                        std::string scale_note = {});
  /// Abstract lattice given only by a Gram matrix (basis = identity, scale 1
  /// is not implied: inner products are read straight from the Gram matrix).
  static IntegerLattice from_gram(std::string name, IntMatrix gram);

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return gram_.size(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  std::int64_t scale() const noexcept { return scale_; }
  const std::string& scale_note() const noexcept { return scale_note_; }
  bool has_ambient() const noexcept { return !basis_.empty(); }

  BigInt det() const;
  bool is_even() const;

  /// Inner product of two ambient vectors under the declared scale.
  std::int64_t inner(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const;
  std::int64_t norm(const std::vector<std::int64_t>& x) const { return inner(x, x); }
  /// Coordinates in the basis when x lies in the lattice (triangular basis only).
  std::optional<std::vector<std::int64_t>> coordinates(const std::vector<std::int64_t>& x) const;
  bool contains(const std::vector<std::int64_t>& x) const { return coordinates(x).has_value(); }
  std::vector<std::int64_t> ambient(const std::vector<std::int64_t>& coords) const;

 private:
  IntegerLattice() = default;
  void check_gram() const;

  std::string name_;
  IntMatrix basis_;
  IntMatrix gram_;
  std::int64_t scale_ = 1;
  std::string scale_note_;
  bool triangular_ = false;
};

/// E8 in doubled coordinates (x . y / 4): all coordinates of one parity
/// with sum divisible by 4.
IntegerLattice build_E8();
/// R(E8) with R(u, v) = (u + v, u - v) on consecutive coordinate pairs; a
/// copy of E8 with norms doubled sitting inside E8 with index 16.
IntegerLattice build_EE8();
/// span{(R b, 0), (0, R b), (b, b) : b in E8} in 16 doubled coordinates.
IntegerLattice build_BW16();
/// Golay-code construction in coordinates scaled by sqrt 8 (x . y / 8):
/// x = m 1 + 2 c (mod 4) for a codeword c, sum(x) = 4 m (mod 8).
IntegerLattice build_Leech();

struct ShellCount {
  std::int64_t norm = 0;
  std::uint64_t count = 0;
};

/// Every lattice vector of the given norm, by Fincke-Pohst enumeration on
/// the Gram matrix; each candidate is confirmed in exact arithmetic.
/// Results are coordinate vectors in the basis.
std::vector<std::vector<std::int64_t>> shell_vectors(const IntegerLattice& l, std::int64_t norm);
ShellCount shells(const IntegerLattice& l, std::int64_t norm);

/// Invariant factors of the Gram matrix that exceed 1.
std::vector<BigInt> discriminant_group(const IntegerLattice& l);

/// Index of a full-rank sublattice (given by ambient basis rows) and the
/// invariant factors of the quotient.
struct SublatticeIndex {
  BigInt index;
  std::vector<BigInt> quotient;  // factors > 1
};
SublatticeIndex sublattice_index(const IntegerLattice& l, const IntMatrix& sub_basis);

/// q(v) = ((sum v_i b_i)^2 / 2) mod 2 on L / 2L in basis coordinates.
gf2::QuadraticForm mod2_quadratic_space(const IntegerLattice& l);
/// Basis coordinates mod 2 of an ambient lattice vector, packed.
std::uint64_t mod2_image(const IntegerLattice& l, const std::vector<std::int64_t>& x);

/// Basis rows, one per line, entries separated by single spaces.
std::string basis_text(const IntegerLattice& l);

/// Applies a random unimodular change of basis (a product of `steps`
/// elementary row operations) and returns the lattice as a Gram matrix.
IntegerLattice random_basis_change(const IntegerLattice& l, std::uint64_t seed, int steps);

}  // namespace monstrous::lattice
