#include "monstrous/lattice/leech.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "monstrous/lattice/golay.hpp"

namespace monstrous::lattice {

std::vector<std::int64_t> widen(const LeechVector& v) { return {v.begin(), v.end()}; }

std::int64_t leech_inner(const LeechVector& a, const LeechVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < 24; ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  return s / 8;
}

namespace {

constexpr std::size_t kCosets = 2 * 4096;

// Residue of coordinate i mod 4 in coset (m, c).
inline int residue(int m, std::uint32_t c, int i) { return (m + 2 * static_cast<int>((c >> i) & 1u)) & 3; }

// Values v = r (mod 4) with v^2 <= limit.
std::vector<int> values_with_residue(int r, std::int64_t limit) {
  std::vector<int> out;
  for (int v = -16; v <= 16; ++v)
    if (((v % 4) + 4) % 4 == r && static_cast<std::int64_t>(v) * v <= limit) out.push_back(v);
  return out;
}

template <class Work>
void for_cosets_parallel(unsigned threads, Work&& work) {
  threads = std::max(1u, std::min<unsigned>(threads, 64));
  if (threads == 1) {
    work(0, kCosets, 0u);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (kCosets + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(kCosets, lo + chunk);
    pool.emplace_back([&, lo, hi, t] { work(lo, hi, t); });
  }
  for (auto& th : pool) th.join();
}

std::uint64_t count_coset(int m, std::uint32_t c, std::int64_t target) {
  // ways[s][r] = number of partial vectors with square sum s and coordinate sum = r (mod 8)
  std::vector<std::array<std::uint64_t, 8>> ways(static_cast<std::size_t>(target + 1));
  ways[0][0] = 1;
  const std::vector<int> vals[4] = {values_with_residue(0, target), values_with_residue(1, target),
                                    values_with_residue(2, target), values_with_residue(3, target)};
  for (int i = 0; i < 24; ++i) {
    std::vector<std::array<std::uint64_t, 8>> next(ways.size());
    for (std::size_t s = 0; s < ways.size(); ++s)
      for (int r = 0; r < 8; ++r) {
        if (ways[s][static_cast<std::size_t>(r)] == 0) continue;
        for (int v : vals[residue(m, c, i)]) {
          const std::size_t s2 = s + static_cast<std::size_t>(v * v);
          if (s2 >= ways.size()) continue;
          next[s2][static_cast<std::size_t>(((r + v) % 8 + 8) % 8)] += ways[s][static_cast<std::size_t>(r)];
        }
      }
    ways.swap(next);
  }
  return ways[static_cast<std::size_t>(target)][static_cast<std::size_t>(4 * m)];
}

void list_coset(int m, std::uint32_t c, std::int64_t target, std::vector<LeechVector>& out) {
  int res[24];
  std::int64_t suffix_min[25];
  suffix_min[24] = 0;
  for (int i = 23; i >= 0; --i) {
    res[i] = residue(m, c, i);
    const int r = res[i];
    const std::int64_t cost = r == 0 ? 0 : (r == 2 ? 4 : 1);
    suffix_min[i] = suffix_min[i + 1] + cost;
  }
  if (suffix_min[0] > target) return;
  const std::vector<int> vals[4] = {values_with_residue(0, target), values_with_residue(1, target),
                                    values_with_residue(2, target), values_with_residue(3, target)};
  LeechVector x{};
  auto rec = [&](auto&& self, int i, std::int64_t left, int sum) -> void {
    if (i == 24) {
      if (left == 0 && ((sum % 8) + 8) % 8 == 4 * m) out.push_back(x);
      return;
    }
    for (int v : vals[res[i]]) {
      const std::int64_t rest = left - static_cast<std::int64_t>(v) * v;
      if (rest < suffix_min[i + 1]) continue;
      x[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
      self(self, i + 1, rest, sum + v);
    }
  };
  rec(rec, 0, target, 0);
}

}  // namespace

BigInt leech_shell_count(std::int64_t norm, unsigned threads) {
  if (norm < 0) return 0;
  const std::int64_t target = 8 * norm;
  const auto& words = golay_code().codewords();
  std::vector<BigInt> partial(std::max(1u, std::min<unsigned>(threads, 64)));
  for_cosets_parallel(threads, [&](std::size_t lo, std::size_t hi, unsigned t) {
    BigInt acc = 0;
    for (std::size_t k = lo; k < hi; ++k) acc += count_coset(static_cast<int>(k / 4096), words[k % 4096], target);
    partial[t] = acc;
  });
  BigInt total = 0;
  for (const BigInt& p : partial) total += p;
  return total;
}

std::vector<LeechVector> leech_shell_vectors(std::int64_t norm, unsigned threads) {
  if (norm < 0 || norm > 8) throw std::invalid_argument("leech_shell_vectors: norm must lie in [0, 8]");
  const std::int64_t target = 8 * norm;
  const auto& words = golay_code().codewords();
  std::vector<std::vector<LeechVector>> per_coset(kCosets);
  for_cosets_parallel(threads, [&](std::size_t lo, std::size_t hi, unsigned) {
    for (std::size_t k = lo; k < hi; ++k) list_coset(static_cast<int>(k / 4096), words[k % 4096], target, per_coset[k]);
  });
  std::vector<LeechVector> out;
  for (auto& v : per_coset) out.insert(out.end(), v.begin(), v.end());
  return out;
}

const std::vector<LeechVector>& leech_minimal_vectors() {
  static std::once_flag once;
  static std::vector<LeechVector> v;
  std::call_once(once, [] { v = leech_shell_vectors(4, std::max(1u, std::thread::hardware_concurrency())); });
  return v;
}

EE8CubedEmbedding embed_EE8_cubed(const IntegerLattice& leech) {
  if (leech.rank() != 24 || leech.scale() != 8) throw std::invalid_argument("embed_EE8_cubed: expects build_Leech()");
  const auto octads = golay_code().octads();
  const std::vector<std::uint32_t> set(octads.begin(), octads.end());
  constexpr std::uint32_t all = (1u << 24) - 1;
  std::array<std::uint32_t, 3> trio{};
  bool found = false;
  for (std::uint32_t o1 : octads) {
    if (!(o1 & 1u)) continue;
    for (std::uint32_t o2 : octads) {
      if (o1 & o2) continue;
      const std::uint32_t o3 = all & ~(o1 | o2);
      if (std::binary_search(set.begin(), set.end(), o3)) {
        trio = {o1, o2, o3};
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) throw std::runtime_error("embed_EE8_cubed: no trio of octads found");

  const IntegerLattice e8 = build_E8();
  IntMatrix rows;
  for (std::uint32_t o : trio) {
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < 24; ++i)
      if ((o >> i) & 1u) coords.push_back(i);
    IntMatrix block;
    for (const auto& b : e8.basis()) {
      std::vector<std::int64_t> v(24, 0);
      for (std::size_t k = 0; k < 8; ++k) v[coords[k]] = 2 * b[k];
      if (!leech.contains(v)) throw std::runtime_error("embed_EE8_cubed: block vector outside the lattice");
      block.push_back(v);
      rows.push_back(v);
    }
    // The block is E8 with every inner product doubled.
    const IntegerLattice blk("EE8 block", [&] {
      IntMatrix sq;
      for (std::size_t k = 0; k < 8; ++k) {
        std::vector<std::int64_t> r;
        for (std::size_t c : coords) r.push_back(block[k][c]);
        sq.push_back(r);
      }
      return sq;
    }(), 8);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if (blk.gram()[i][j] != 2 * e8.gram()[i][j]) throw std::runtime_error("embed_EE8_cubed: block is not EE8");
  }
  SublatticeIndex idx = sublattice_index(leech, rows);
  return {trio, IntegerLattice("EE8^3", rows, 8, leech.scale_note()), std::move(idx)};
}

std::map<std::int64_t, std::uint64_t> inner_product_spectrum(const std::vector<LeechVector>& vectors,
                                                             std::uint64_t samples, std::uint64_t seed) {
  std::map<std::int64_t, std::uint64_t> hist;
  if (vectors.empty()) return hist;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vectors.size() - 1);
  for (std::uint64_t s = 0; s < samples; ++s) ++hist[leech_inner(vectors[pick(rng)], vectors[pick(rng)])];
  return hist;
}

}  // namespace monstrous::lattice
