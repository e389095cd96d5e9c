#include "monstrous/gf2/subspace.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace monstrous::gf2 {

namespace {
int pivot_of(std::uint64_t v) { return 63 - std::countl_zero(v); }
}  // namespace

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim) {
  if (ambient_dim < 0 || ambient_dim > kMaxDim) throw std::invalid_argument("Subspace: dimension out of range");
}

Subspace Subspace::span(int ambient_dim, std::span<const std::uint64_t> vectors) {
  Subspace s(ambient_dim);
  for (std::uint64_t v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::span(int ambient_dim, std::span<const GF2Vector> vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) {
    if (v.dim() != ambient_dim) throw std::invalid_argument("Subspace::span: dimension mismatch");
    s.insert(v.bits());
  }
  return s;
}

Subspace Subspace::whole(int ambient_dim) {
  Subspace s(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.insert(std::uint64_t{1} << i);
  return s;
}

std::vector<GF2Vector> Subspace::basis() const {
  std::vector<GF2Vector> out;
  out.reserve(rows_.size());
  for (std::uint64_t r : rows_) out.emplace_back(ambient_, r);
  return out;
}

std::uint64_t Subspace::reduce(std::uint64_t v) const noexcept {
  for (std::uint64_t r : rows_)
    if ((v >> pivot_of(r)) & 1u) v ^= r;
  return v;
}

bool Subspace::insert(std::uint64_t v) {
  if (v & ~low_mask(ambient_)) throw std::invalid_argument("Subspace::insert: vector outside ambient space");
  v = reduce(v);
  if (v == 0) return false;
  const int p = pivot_of(v);
  for (std::uint64_t& r : rows_)
    if ((r >> p) & 1u) r ^= v;
  auto pos = std::find_if(rows_.begin(), rows_.end(), [p](std::uint64_t r) { return pivot_of(r) < p; });
  rows_.insert(pos, v);
  return true;
}

bool Subspace::contains(const Subspace& other) const noexcept {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](std::uint64_t r) { return contains(r); });
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: dimension mismatch");
  Subspace s = *this;
  for (std::uint64_t r : other.rows_) s.insert(r);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::intersect: dimension mismatch");
  return orthogonal_complement_dot().sum(other.orthogonal_complement_dot()).orthogonal_complement_dot();
}

Subspace Subspace::orthogonal_complement_dot() const {
  std::uint64_t pivots = 0;
  for (std::uint64_t r : rows_) pivots |= std::uint64_t{1} << pivot_of(r);
  Subspace out(ambient_);
  for (int j = 0; j < ambient_; ++j) {
    if ((pivots >> j) & 1u) continue;
    std::uint64_t v = std::uint64_t{1} << j;
    for (std::uint64_t r : rows_)
      if ((r >> j) & 1u) v |= std::uint64_t{1} << pivot_of(r);
    out.insert(v);
  }
  return out;
}

std::vector<std::uint64_t> Subspace::complement_basis() const {
  std::uint64_t pivots = 0;
  for (std::uint64_t r : rows_) pivots |= std::uint64_t{1} << pivot_of(r);
  std::vector<std::uint64_t> out;
  for (int j = 0; j < ambient_; ++j)
    if (!((pivots >> j) & 1u)) out.push_back(std::uint64_t{1} << j);
  return out;
}

void Subspace::for_each_element(const std::function<void(std::uint64_t)>& f) const {
  std::uint64_t v = 0;
  f(v);
  const std::uint64_t n = size();
  for (std::uint64_t i = 1; i < n; ++i) {
    v ^= rows_[static_cast<std::size_t>(std::countr_zero(i))];
    f(v);
  }
}

std::vector<std::uint64_t> Subspace::elements() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for_each_element([&out](std::uint64_t v) { out.push_back(v); });
  return out;
}

Subspace Subspace::image(const std::function<std::uint64_t(std::uint64_t)>& linear_map) const {
  Subspace out(ambient_);
  for (std::uint64_t r : rows_) out.insert(linear_map(r));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "span{";
  bool first = true;
  for (std::uint64_t r : s.basis_bits()) {
    os << (first ? "" : ", ") << GF2Vector(s.ambient_dim(), r).to_string();
    first = false;
  }
  return os << "}";
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(s.ambient_dim());
  for (std::uint64_t r : s.basis_bits()) {
    h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace monstrous::gf2
