#include "monstrous/gf2/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace monstrous::gf2 {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("Perm: not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Perm(std::move(im));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch");
  Perm r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::optional<int> vector_dim)
    : degree_(degree), gens_(std::move(generators)), vector_dim_(vector_dim) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
  if (vector_dim_ && (std::size_t{1} << *vector_dim_) - 1 != degree_)
    throw std::invalid_argument("PermGroup: degree does not match 2^n - 1");
}

namespace {

Perm perm_from_linear_map(int n, std::span<const std::uint64_t> unit_images) {
  const std::size_t deg = (std::size_t{1} << n) - 1;
  std::vector<std::uint32_t> im(deg);
  // Gray-code walk keeps one XOR per point.
  std::uint64_t v = 0, fv = 0;
  for (std::uint64_t i = 1; i <= deg; ++i) {
    const int k = std::countr_zero(i);
    v ^= std::uint64_t{1} << k;
    fv ^= unit_images[static_cast<std::size_t>(k)];
    if (fv == 0) throw std::invalid_argument("linear map is singular");
    im[v - 1] = static_cast<std::uint32_t>(fv - 1);
  }
  return Perm(std::move(im));
}

}  // namespace

PermGroup PermGroup::from_linear_maps(int n, const std::vector<std::vector<std::uint64_t>>& maps) {
  if (n < 1 || n > 20) throw std::invalid_argument("from_linear_maps: dimension out of range");
  std::vector<Perm> gens;
  gens.reserve(maps.size());
  for (const auto& m : maps) {
    if (static_cast<int>(m.size()) != n) throw std::invalid_argument("from_linear_maps: map shape");
    gens.push_back(perm_from_linear_map(n, m));
  }
  return PermGroup((std::size_t{1} << n) - 1, std::move(gens), n);
}

std::uint64_t PermGroup::apply_to_vector(std::size_t g, std::uint64_t v) const {
  if (!vector_dim_) throw std::logic_error("PermGroup: points are not vectors");
  if (v == 0) return 0;
  return static_cast<std::uint64_t>(gens_[g][v - 1]) + 1;
}

// --- Schreier-Sims -------------------------------------------------------

StabilizerChain::StabilizerChain(const PermGroup& g) : degree_(g.degree()) {
  for (const Perm& p : g.generators())
    if (!p.is_identity()) insert(0, p);
}

bool StabilizerChain::sifts_to_identity(std::size_t level, Perm p) const {
  for (std::size_t j = level; j < levels_.size(); ++j) {
    const Level& L = levels_[j];
    const std::uint32_t img = p[L.base_point];
    if (!L.transversal[img]) return false;
    if (img == L.base_point) continue;
    p = p * *L.inverse[img];
  }
  return p.is_identity();
}

void StabilizerChain::new_level(const Perm& moved_by) {
  std::vector<bool> seen(degree_, false);
  std::size_t best_len = degree_ + 1;
  std::uint32_t best = 0;
  for (std::uint32_t start = 0; start < degree_; ++start) {
    if (seen[start] || moved_by[start] == start) continue;
    std::size_t len = 0;
    std::uint32_t lowest = start;
    for (std::uint32_t x = start; !seen[x]; x = moved_by[x]) {
      seen[x] = true;
      lowest = std::min(lowest, x);
      ++len;
    }
    if (len < best_len) {
      best_len = len;
      best = lowest;
    }
  }
  Level L;
  L.base_point = best;
  L.transversal.resize(degree_);
  L.inverse.resize(degree_);
  L.transversal[best] = Perm::identity(degree_);
  L.inverse[best] = Perm::identity(degree_);
  L.orbit.push_back(best);
  levels_.push_back(std::move(L));
}

void StabilizerChain::insert(std::size_t level, const Perm& p) {
  if (sifts_to_identity(level, p)) return;
  if (level == levels_.size()) new_level(p);
  levels_[level].gens.push_back(p);
  const std::size_t known = levels_[level].orbit.size();
  for (std::size_t i = 0; i < known; ++i) {
    const std::uint32_t pt = levels_[level].orbit[i];
    extend(level, *levels_[level].transversal[pt] * p);
  }
}

void StabilizerChain::extend(std::size_t level, const Perm& h) {
  const std::uint32_t pt = h[levels_[level].base_point];
  if (levels_[level].transversal[pt]) {
    Perm schreier = h * *levels_[level].inverse[pt];
    if (!schreier.is_identity()) insert(level + 1, schreier);
    return;
  }
  levels_[level].transversal[pt] = h;
  levels_[level].inverse[pt] = h.inverse();
  levels_[level].orbit.push_back(pt);
  const std::size_t ngens = levels_[level].gens.size();
  for (std::size_t g = 0; g < ngens; ++g) {
    Perm next = h * levels_[level].gens[g];
    extend(level, next);
  }
}

BigInt StabilizerChain::order() const {
  BigInt r = 1;
  for (const Level& L : levels_) r *= L.orbit.size();
  return r;
}

std::vector<std::uint32_t> StabilizerChain::base() const {
  std::vector<std::uint32_t> b;
  for (const Level& L : levels_) b.push_back(L.base_point);
  return b;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
  std::vector<std::size_t> r;
  for (const Level& L : levels_) r.push_back(L.orbit.size());
  return r;
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return sifts_to_identity(0, p);
}

BigInt group_order(const PermGroup& g) { return StabilizerChain(g).order(); }

// --- orthogonal group generators -------------------------------------------

PermGroup transvection_generators(const QuadraticForm& q) {
  const int n = q.dim();
  if (n < 1 || n > 16) throw std::domain_error("transvection_generators: dimension must be in [1, 16]");
  const BilinearForm b = polarize(q);
  if (!b.radical().empty()) throw std::domain_error("transvection_generators: form is degenerate");
  const std::size_t deg = (std::size_t{1} << n) - 1;

  auto reflection = [&](std::uint64_t a) {
    std::vector<std::uint64_t> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const std::uint64_t e = std::uint64_t{1} << i;
      images[static_cast<std::size_t>(i)] = b(e, a) ? (e ^ a) : e;
    }
    return images;
  };

  std::vector<std::vector<std::uint64_t>> chosen;
  std::vector<bool> covered(deg + 1, false);
  std::vector<std::uint64_t> covered_list;
  for (std::uint64_t a = 1; a <= deg; ++a) {
    if (q(a) != 1 || covered[a]) continue;
    chosen.push_back(reflection(a));
    // Recompute the orbit closure of all chosen vectors under the chosen maps.
    const PermGroup g = PermGroup::from_linear_maps(n, chosen);
    std::deque<std::uint64_t> queue;
    if (!covered[a]) {
      covered[a] = true;
      covered_list.push_back(a);
    }
    queue.insert(queue.end(), covered_list.begin(), covered_list.end());
    while (!queue.empty()) {
      const std::uint64_t v = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        const std::uint64_t w = g.apply_to_vector(k, v);
        if (!covered[w]) {
          covered[w] = true;
          covered_list.push_back(w);
          queue.push_back(w);
        }
      }
    }
  }
  return PermGroup::from_linear_maps(n, chosen);
}

std::size_t orbit_of_point(const PermGroup& g, std::uint32_t point) {
  if (point >= g.degree()) throw std::out_of_range("orbit_of_point: point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::uint32_t> stack{point};
  seen[point] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    for (const Perm& p : g.generators()) {
      const std::uint32_t y = p[x];
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count;
}

std::size_t orbit_of_subspace(const PermGroup& g, const Subspace& s) {
  if (!g.vector_dim() || *g.vector_dim() != s.ambient_dim())
    throw std::invalid_argument("orbit_of_subspace: group does not act on the ambient space of s");
  std::unordered_set<Subspace, SubspaceHash> seen{s};
  std::vector<Subspace> stack{s};
  while (!stack.empty()) {
    const Subspace cur = std::move(stack.back());
    stack.pop_back();
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      Subspace img = cur.image([&](std::uint64_t v) { return g.apply_to_vector(k, v); });
      if (seen.insert(img).second) stack.push_back(std::move(img));
    }
  }
  return seen.size();
}

std::uint64_t count_isometries_exhaustive(const QuadraticForm& q, std::vector<std::vector<std::uint64_t>>* out) {
  const int n = q.dim();
  if (n < 1 || n > 4) throw std::domain_error("count_isometries_exhaustive: dimension must be <= 4");
  const std::uint64_t nvec = std::uint64_t{1} << n;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> images(static_cast<std::size_t>(n));
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (code >> (i * n)) & (nvec - 1);
    if (Subspace::span(n, images).dim() != n) continue;
    bool ok = true;
    for (std::uint64_t v = 1; v < nvec && ok; ++v) {
      std::uint64_t fv = 0;
      for (int i = 0; i < n; ++i)
        if ((v >> i) & 1u) fv ^= images[static_cast<std::size_t>(i)];
      ok = q(fv) == q(v);
    }
    if (!ok) continue;
    ++count;
    if (out) out->push_back(images);
  }
  return count;
}

}  // namespace monstrous::gf2
