#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "monstrous/gf2/forms.hpp"
#include "monstrous/gf2/subspace.hpp"

namespace monstrous::gf2 {

/// True iff q vanishes on s: q(b_i) = 0 on the basis and B(b_i, b_j) = 0 pairwise.
bool is_totally_singular(const Subspace& s, const QuadraticForm& q);

/// Every maximal totally singular subspace of a nondegenerate plus-type form,
/// each exactly once, in increasing canonical order.
///
/// Depth-first extension of totally singular flags by singular vectors of the
/// current perp, deduplicated per level on the canonical echelon basis.
/// Throws std::domain_error for degenerate or minus-type forms.
std::vector<Subspace> enumerate_mts(const QuadraticForm& q);
void for_each_mts(const QuadraticForm& q, const std::function<void(const Subspace&)>& f);

/// Two maximal totally singular subspaces with zero intersection, built from a
/// hyperbolic basis (e_i spans the first, f_i the second).
std::pair<Subspace, Subspace> complementary_mts_pair(const QuadraticForm& q);

}  // namespace monstrous::gf2
