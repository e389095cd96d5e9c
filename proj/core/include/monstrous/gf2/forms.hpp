#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monstrous/gf2/vector.hpp"

namespace monstrous::gf2 {

/// Symmetric bilinear form over F2 stored by rows: B(u,v) = parity(u & (M v)).
class BilinearForm {
 public:
  BilinearForm() = default;
  /// rows[i] holds row i of the Gram matrix; throws if the matrix is not symmetric.
  BilinearForm(int dim, std::vector<std::uint64_t> rows);

  int dim() const noexcept { return dim_; }
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }

  /// M v, i.e. the functional B(., v) packed as a vector.
  std::uint64_t apply(std::uint64_t v) const noexcept {
    std::uint64_t out = 0;
    for (int i = 0; i < dim_; ++i) out |= static_cast<std::uint64_t>(parity(rows_[i] & v)) << i;
    return out;
  }
  int operator()(std::uint64_t u, std::uint64_t v) const noexcept { return parity(u & apply(v)); }
  int operator()(const GF2Vector& u, const GF2Vector& v) const { return (*this)(u.bits(), v.bits()); }

  bool is_alternating() const noexcept;
  int rank() const;
  /// Basis of {v : B(v, .) = 0}.
  std::vector<std::uint64_t> radical() const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Quadratic form q(v) = v^T U v with U upper triangular over F2.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  /// upper[i] is row i of U; bits below the diagonal must be clear.
  QuadraticForm(int dim, std::vector<std::uint64_t> upper);

  /// Sum of `planes` hyperbolic planes x_{2i} x_{2i+1}.
  static QuadraticForm hyperbolic(int planes);
  /// x0^2 + x0 x1 + x1^2, the anisotropic plane.
  static QuadraticForm anisotropic_plane();
  /// Orthogonal sum with `other` placed in the coordinates after this form's.
  QuadraticForm direct_sum(const QuadraticForm& other) const;

  int dim() const noexcept { return dim_; }
  std::span<const std::uint64_t> upper() const noexcept { return upper_; }

  int operator()(std::uint64_t v) const noexcept {
    int acc = 0;
    for (std::uint64_t w = v; w != 0; w &= w - 1) acc ^= parity(upper_[std::countr_zero(w)] & v);
    return acc;
  }
  int operator()(const GF2Vector& v) const { return (*this)(v.bits()); }

  /// q evaluated on the standard basis vectors, packed.
  std::uint64_t diagonal() const noexcept;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> upper_;
};

/// B(u,v) = q(u+v) + q(u) + q(v); the matrix is U + U^T with zero diagonal.
BilinearForm polarize(const QuadraticForm& q);

enum class SignType { kPlus, kMinus };

std::string to_string(SignType t);

struct FormClass {
  int radical_dim = 0;
  SignType sign = SignType::kPlus;
  int witt_index = 0;

  friend bool operator==(const FormClass&, const FormClass&) = default;
};

std::string to_string(const FormClass& c);

/// Radical dimension, Arf-invariant sign type and Witt index of q.
///
/// The radical of the polarization must be totally singular (otherwise the
/// quotient carries no well-defined plus/minus type); a defective form throws
/// std::domain_error. The Witt index includes the radical.
FormClass classify(const QuadraticForm& q);

/// Number of nonzero v with q(v) = 0, by a Gray-code scan of F2^n (n <= 32).
/// Throws std::domain_error when the polarization is degenerate.
std::uint64_t count_singular(const QuadraticForm& q);

/// Hyperbolic decomposition pieces used by classify and the MTS routines.
struct WittDecomposition {
  std::vector<std::uint64_t> pair_e;  // singular where possible
  std::vector<std::uint64_t> pair_f;  // B(e_i, f_j) = delta_ij
  std::vector<std::uint64_t> radical; // basis of rad B
};

/// Symplectic basis of a complement of rad B, with e_i, f_i singular for all
/// hyperbolic pairs the form admits (at most one anisotropic pair remains last).
WittDecomposition witt_decompose(const QuadraticForm& q);

}  // namespace monstrous::gf2
