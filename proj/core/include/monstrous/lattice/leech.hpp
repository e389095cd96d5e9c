#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "monstrous/bigint.hpp"
#include "monstrous/lattice/lattice.hpp"

namespace monstrous::lattice {

/// A Leech vector in the sqrt 8-scaled coordinates of build_Leech().
using LeechVector = std::array<std::int8_t, 24>;

std::vector<std::int64_t> widen(const LeechVector& v);
/// Inner product in the conventional normalisation (x . y / 8).
std::int64_t leech_inner(const LeechVector& a, const LeechVector& b);

/// Number of Leech vectors of the given norm, summed over the 2 x 4096
/// cosets (m, c) of the code construction; each coset is counted by a
/// dynamic programme over (partial norm, coordinate sum mod 8). Cosets are
/// split across `threads` workers and the counts added in a fixed order.
BigInt leech_shell_count(std::int64_t norm, unsigned threads = 1);

/// The vectors themselves, coset by coset with norm pruning; the output
/// order is the coset order whatever the thread count. Norms up to 8.
std::vector<LeechVector> leech_shell_vectors(std::int64_t norm, unsigned threads = 1);

/// Lazily computed norm-4 shell (196560 vectors), shared process-wide.
const std::vector<LeechVector>& leech_minimal_vectors();

struct EE8CubedEmbedding {
  std::array<std::uint32_t, 3> trio{};  // three disjoint octads covering the coordinates
  IntegerLattice sublattice;            // basis rows: 2 * (E8 basis) on each octad
  SublatticeIndex index;
};

/// Finds a trio of octads in the code and places a copy of EE8 on each; the
/// sum is a sublattice of `leech`. Throws std::runtime_error if no trio is
/// found or a block fails to lie in the lattice.
EE8CubedEmbedding embed_EE8_cubed(const IntegerLattice& leech);

/// Histogram of inner products over `samples` uniformly random ordered pairs.
std::map<std::int64_t, std::uint64_t> inner_product_spectrum(const std::vector<LeechVector>& vectors,
                                                             std::uint64_t samples, std::uint64_t seed);

}  // namespace monstrous::lattice
