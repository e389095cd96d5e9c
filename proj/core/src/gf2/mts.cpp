#include "monstrous/gf2/mts.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace monstrous::gf2 {

bool is_totally_singular(const Subspace& s, const QuadraticForm& q) {
  if (s.ambient_dim() != q.dim()) throw std::invalid_argument("is_totally_singular: dimension mismatch");
  const BilinearForm b = polarize(q);
  auto rows = s.basis_bits();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (q(rows[i]) != 0) return false;
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (b(rows[i], rows[j]) != 0) return false;
  }
  return true;
}

namespace {

struct MtsSearch {
  const QuadraticForm& q;
  BilinearForm b;
  std::vector<std::uint64_t> singular;  // nonzero singular vectors, increasing
  int target = 0;
  std::vector<Subspace> found;

  // Children of `cur` are cur + v with v singular, v in cur^perp, v free of
  // cur's pivot columns, pivot(v) above every pivot of cur, and no row of cur
  // touching pivot(v). That makes v the top canonical row of the child, so
  // every totally singular subspace is reached from exactly one parent.
  void extend(const Subspace& cur, std::uint64_t pivot_mask, int top_pivot, std::uint64_t row_union) {
    if (cur.dim() == target) {
      found.push_back(cur);
      return;
    }
    auto rows = cur.basis_bits();
    for (std::uint64_t v : singular) {
      const int p = 63 - std::countl_zero(v);
      if (p <= top_pivot) continue;
      if (v & pivot_mask) continue;
      if ((row_union >> p) & 1u) continue;
      bool perp = true;
      for (std::uint64_t r : rows)
        if (b(r, v)) {
          perp = false;
          break;
        }
      if (!perp) continue;
      Subspace child = cur;
      child.insert(v);
      extend(child, pivot_mask | (std::uint64_t{1} << p), p, row_union | v);
    }
  }
};

void check_plus_nondegenerate(const QuadraticForm& q) {
  const FormClass c = classify(q);
  if (c.radical_dim != 0) throw std::domain_error("MTS enumeration requires a nondegenerate form");
  if (c.sign != SignType::kPlus) throw std::domain_error("MTS enumeration requires a plus-type form");
}

}  // namespace

std::vector<Subspace> enumerate_mts(const QuadraticForm& q) {
  check_plus_nondegenerate(q);
  if (q.dim() > 24) throw std::domain_error("enumerate_mts: dimension too large for exhaustive search");
  MtsSearch search{q, polarize(q), {}, q.dim() / 2, {}};
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << q.dim()); ++v)
    if (q(v) == 0) search.singular.push_back(v);
  search.extend(Subspace(q.dim()), 0, -1, 0);
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

void for_each_mts(const QuadraticForm& q, const std::function<void(const Subspace&)>& f) {
  for (const Subspace& s : enumerate_mts(q)) f(s);
}

std::pair<Subspace, Subspace> complementary_mts_pair(const QuadraticForm& q) {
  check_plus_nondegenerate(q);
  const WittDecomposition w = witt_decompose(q);
  return {Subspace::span(q.dim(), w.pair_e), Subspace::span(q.dim(), w.pair_f)};
}

}  // namespace monstrous::gf2
