#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "monstrous/bigint.hpp"
#include "monstrous/gf2/forms.hpp"
#include "monstrous/lattice/lattice.hpp"
#include "monstrous/lattice/leech.hpp"

namespace monstrous::cvcc {

using lattice::LeechVector;

enum class Sign { kPlus, kMinus };

inline Sign flip(Sign s) noexcept { return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus; }

/// Conformal vector label: a norm-4 Leech vector up to sign, and a sign.
/// The vector is stored as the lexicographically smaller of alpha, -alpha.
class CvccLabel {
 public:
  /// Throws std::invalid_argument unless alpha has norm 4.
  CvccLabel(const LeechVector& alpha, Sign eps);

  const LeechVector& alpha() const noexcept { return alpha_; }
  Sign eps() const noexcept { return eps_; }
  CvccLabel with_eps(Sign e) const { return CvccLabel(alpha_, e); }

  friend bool operator==(const CvccLabel&, const CvccLabel&) = default;
  friend auto operator<=>(const CvccLabel&, const CvccLabel&) = default;

 private:
  LeechVector alpha_;
  Sign eps_;
};

/// 1/4 if the labels agree, 0 for the same vector with opposite signs,
/// otherwise <alpha, beta>^2 / 128.
Rational gram(const CvccLabel& a, const CvccLabel& b);

/// <alpha, beta> of the underlying vectors (sign of the representatives).
std::int64_t label_inner(const CvccLabel& a, const CvccLabel& b);

struct BoundAudit {
  std::map<Rational, std::uint64_t> histogram;
  std::uint64_t pairs = 0;
  std::uint64_t outside_bound = 0;  // values outside [0, 1/12]
  std::uint64_t unexpected = 0;     // values outside {0, 1/128, 1/32}

  bool ok() const noexcept { return outside_bound == 0 && unexpected == 0 && pairs > 0; }
};

/// Audits the given pairs; equal labels are rejected with std::invalid_argument.
BoundAudit bound_audit(const std::vector<std::pair<CvccLabel, CvccLabel>>& pairs);

/// Draws `samples` pairs of distinct labels from the shell. Samples are cut
/// into fixed blocks, each with its own generator seeded from (seed, block),
/// so the result does not depend on `threads`.
BoundAudit sampled_bound_audit(const std::vector<LeechVector>& shell, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads = 1);

/// t2 with its sign flipped iff <alpha, beta> is odd.
CvccLabel conjugate(const CvccLabel& t1, const CvccLabel& t2);

/// <alpha, beta> mod 2.
int commutator_value(const CvccLabel& t1, const CvccLabel& t2);

struct ExtraspecialElement {
  int s = 0;            // central coordinate in F2
  std::uint64_t v = 0;  // vector in L / 2L

  friend bool operator==(const ExtraspecialElement&, const ExtraspecialElement&) = default;
};

/// 2^{1+n} as pairs (s, v) with (s1, v1)(s2, v2) = (s1 + s2 + c(v1, v2), v1 + v2),
/// where c(u, v) = u^T M v and M is the upper-triangular matrix of q.
class ExtraspecialGroup {
 public:
  explicit ExtraspecialGroup(gf2::QuadraticForm q);

  int dim() const noexcept { return q_.dim(); }
  const gf2::QuadraticForm& form() const noexcept { return q_; }
  const gf2::BilinearForm& polarization() const noexcept { return b_; }

  int cocycle(std::uint64_t u, std::uint64_t v) const noexcept;
  ExtraspecialElement multiply(const ExtraspecialElement& a, const ExtraspecialElement& b) const noexcept {
    return {a.s ^ b.s ^ cocycle(a.v, b.v), a.v ^ b.v};
  }
  ExtraspecialElement inverse(const ExtraspecialElement& a) const noexcept { return {a.s ^ cocycle(a.v, a.v), a.v}; }
  ExtraspecialElement square(const ExtraspecialElement& a) const noexcept { return multiply(a, a); }
  /// a b a^-1 b^-1
  ExtraspecialElement commutator(const ExtraspecialElement& a, const ExtraspecialElement& b) const noexcept {
    return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
  }
  static constexpr ExtraspecialElement identity() noexcept { return {0, 0}; }
  static constexpr ExtraspecialElement central() noexcept { return {1, 0}; }

  BigInt order() const { return BigInt(1) << (1 + dim()); }
  /// Elements commuting with every generator (1,0), (0,e_i), found by a
  /// Gray-code scan of all v; each v contributes both central coordinates.
  std::uint64_t center_size() const;

 private:
  gf2::QuadraticForm q_;
  gf2::BilinearForm b_;
};

ExtraspecialGroup build_extraspecial(const gf2::QuadraticForm& q24);

/// (eps == minus ? 1 : 0, alpha mod 2L) in the basis of `leech`.
ExtraspecialElement lift(const lattice::IntegerLattice& leech, const CvccLabel& t);

}  // namespace monstrous::cvcc
