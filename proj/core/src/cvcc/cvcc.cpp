#include "monstrous/cvcc/cvcc.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <thread>

namespace monstrous::cvcc {

namespace {

LeechVector canonical(const LeechVector& a) {
  LeechVector neg;
  for (std::size_t i = 0; i < 24; ++i) neg[i] = static_cast<std::int8_t>(-a[i]);
  return std::min(a, neg);
}

}  // namespace

CvccLabel::CvccLabel(const LeechVector& alpha, Sign eps) : alpha_(canonical(alpha)), eps_(eps) {
  std::int64_t sq = 0;
  for (std::int8_t x : alpha) sq += static_cast<std::int64_t>(x) * x;
  if (sq != 32) throw std::invalid_argument("CvccLabel: vector must have norm 4");
}

std::int64_t label_inner(const CvccLabel& a, const CvccLabel& b) { return lattice::leech_inner(a.alpha(), b.alpha()); }

Rational gram(const CvccLabel& a, const CvccLabel& b) {
  if (a.alpha() == b.alpha()) return a.eps() == b.eps() ? Rational(1, 4) : Rational(0);
  const std::int64_t ip = label_inner(a, b);
  return Rational(ip * ip, 128);
}

namespace {

void tally(BoundAudit& audit, const Rational& g) {
  ++audit.histogram[g];
  ++audit.pairs;
  if (g.numerator() < 0 || 12 * g.numerator() > g.denominator()) ++audit.outside_bound;
  if (g != Rational(0) && g != Rational(1, 128) && g != Rational(1, 32)) ++audit.unexpected;
}

void merge(BoundAudit& into, const BoundAudit& from) {
  for (const auto& [k, n] : from.histogram) into.histogram[k] += n;
  into.pairs += from.pairs;
  into.outside_bound += from.outside_bound;
  into.unexpected += from.unexpected;
}

}  // namespace

BoundAudit bound_audit(const std::vector<std::pair<CvccLabel, CvccLabel>>& pairs) {
  BoundAudit audit;
  for (const auto& [a, b] : pairs) {
    if (a == b) throw std::invalid_argument("bound_audit: pair of equal labels");
    tally(audit, gram(a, b));
  }
  return audit;
}

BoundAudit sampled_bound_audit(const std::vector<LeechVector>& shell, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads) {
  if (shell.empty()) throw std::invalid_argument("sampled_bound_audit: empty shell");
  constexpr std::uint64_t kBlock = 1 << 16;
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  threads = std::max(1u, std::min<unsigned>(threads, 64));
  std::vector<BoundAudit> per_block(blocks);

  auto run_block = [&](std::uint64_t blk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(blk), static_cast<std::uint32_t>(blk >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> pick(0, shell.size() - 1);
    const std::uint64_t n = std::min(kBlock, samples - blk * kBlock);
    BoundAudit& audit = per_block[blk];
    for (std::uint64_t i = 0; i < n;) {
      const CvccLabel a(shell[pick(rng)], (rng() & 1) ? Sign::kMinus : Sign::kPlus);
      const CvccLabel b(shell[pick(rng)], (rng() & 1) ? Sign::kMinus : Sign::kPlus);
      if (a == b) continue;
      tally(audit, gram(a, b));
      ++i;
    }
  };

  if (threads == 1) {
    for (std::uint64_t blk = 0; blk < blocks; ++blk) run_block(blk);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::uint64_t blk = t; blk < blocks; blk += threads) run_block(blk);
      });
    for (auto& th : pool) th.join();
  }
  BoundAudit total;
  for (const BoundAudit& b : per_block) merge(total, b);
  return total;
}

CvccLabel conjugate(const CvccLabel& t1, const CvccLabel& t2) {
  return commutator_value(t1, t2) ? t2.with_eps(flip(t2.eps())) : t2;
}

int commutator_value(const CvccLabel& t1, const CvccLabel& t2) {
  return static_cast<int>(((label_inner(t1, t2) % 2) + 2) % 2);
}

ExtraspecialGroup::ExtraspecialGroup(gf2::QuadraticForm q) : q_(std::move(q)), b_(gf2::polarize(q_)) {}

int ExtraspecialGroup::cocycle(std::uint64_t u, std::uint64_t v) const noexcept {
  const auto up = q_.upper();
  int acc = 0;
  for (std::uint64_t w = u; w != 0; w &= w - 1) acc ^= gf2::parity(up[static_cast<std::size_t>(std::countr_zero(w))] & v);
  return acc;
}

std::uint64_t ExtraspecialGroup::center_size() const {
  const int n = dim();
  if (n > 32) throw std::domain_error("center_size: scan limited to dimension 32");
  // (s, v) commutes with (0, e_i) iff B(v, e_i) = 0, and always with (1, 0).
  const auto rows = b_.rows();
  std::uint64_t bv = 0, central_vectors = 1;  // v = 0
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
    bv ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    central_vectors += bv == 0;
  }
  return 2 * central_vectors;
}

ExtraspecialGroup build_extraspecial(const gf2::QuadraticForm& q24) {
  ExtraspecialGroup g(q24);
  // M + M^T is the polarization and diag(M) gives q, because M is q's own matrix;
  // the square map then equals q on every basis vector.
  for (int i = 0; i < q24.dim(); ++i) {
    const std::uint64_t e = std::uint64_t{1} << i;
    if (g.square({0, e}).s != q24(e) || g.square({0, e}).v != 0)
      throw std::logic_error("build_extraspecial: cocycle does not square to q");
  }
  return g;
}

ExtraspecialElement lift(const lattice::IntegerLattice& leech, const CvccLabel& t) {
  return {t.eps() == Sign::kMinus ? 1 : 0, lattice::mod2_image(leech, lattice::widen(t.alpha()))};
}

}  // namespace monstrous::cvcc
