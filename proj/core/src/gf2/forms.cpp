#include "monstrous/gf2/forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "monstrous/gf2/subspace.hpp"

namespace monstrous::gf2 {

BilinearForm::BilinearForm(int dim, std::vector<std::uint64_t> rows) : dim_(dim), rows_(std::move(rows)) {
  if (dim < 0 || dim > kMaxDim || static_cast<int>(rows_.size()) != dim)
    throw std::invalid_argument("BilinearForm: bad shape");
  for (int i = 0; i < dim_; ++i) {
    rows_[i] &= low_mask(dim_);
    for (int j = 0; j < dim_; ++j)
      if (((rows_[i] >> j) & 1u) != ((rows_[j] >> i) & 1u))
        throw std::invalid_argument("BilinearForm: matrix not symmetric");
  }
}

bool BilinearForm::is_alternating() const noexcept {
  for (int i = 0; i < dim_; ++i)
    if ((rows_[i] >> i) & 1u) return false;
  return true;
}

int BilinearForm::rank() const { return dim_ - static_cast<int>(radical().size()); }

std::vector<std::uint64_t> BilinearForm::radical() const {
  // Kernel of the symmetric matrix: solve M v = 0 via the row space of M.
  // v is in the kernel iff v is orthogonal (dot product) to every row.
  std::vector<std::uint64_t> rows(rows_.begin(), rows_.end());
  const Subspace kernel = Subspace::span(dim_, rows).orthogonal_complement_dot();
  return {kernel.basis_bits().begin(), kernel.basis_bits().end()};
}

QuadraticForm::QuadraticForm(int dim, std::vector<std::uint64_t> upper) : dim_(dim), upper_(std::move(upper)) {
  if (dim < 0 || dim > kMaxDim || static_cast<int>(upper_.size()) != dim)
    throw std::invalid_argument("QuadraticForm: bad shape");
  for (int i = 0; i < dim_; ++i) {
    if (upper_[i] & low_mask(i)) throw std::invalid_argument("QuadraticForm: matrix not upper triangular");
    upper_[i] &= low_mask(dim_);
  }
}

QuadraticForm QuadraticForm::hyperbolic(int planes) {
  const int n = 2 * planes;
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < planes; ++i) up[2 * i] = std::uint64_t{1} << (2 * i + 1);
  return QuadraticForm(n, std::move(up));
}

QuadraticForm QuadraticForm::anisotropic_plane() { return QuadraticForm(2, {0b11, 0b10}); }

QuadraticForm QuadraticForm::direct_sum(const QuadraticForm& other) const {
  const int n = dim_ + other.dim_;
  if (n > kMaxDim) throw std::invalid_argument("QuadraticForm::direct_sum: dimension exceeds 64");
  std::vector<std::uint64_t> up(upper_);
  for (int i = 0; i < other.dim_; ++i) up.push_back(other.upper_[i] << dim_);
  return QuadraticForm(n, std::move(up));
}

std::uint64_t QuadraticForm::diagonal() const noexcept {
  std::uint64_t d = 0;
  for (int i = 0; i < dim_; ++i) d |= ((upper_[i] >> i) & 1u) << i;
  return d;
}

BilinearForm polarize(const QuadraticForm& q) {
  const int n = q.dim();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  auto up = q.upper();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((up[i] >> j) & 1u) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
  return BilinearForm(n, std::move(rows));
}

std::string to_string(SignType t) { return t == SignType::kPlus ? "plus" : "minus"; }

std::string to_string(const FormClass& c) {
  return "(" + std::to_string(c.radical_dim) + ", " + to_string(c.sign) + ", " + std::to_string(c.witt_index) + ")";
}

namespace {

// Any singular nonzero vector in span(basis), scanning in Gray-code order.
std::uint64_t find_singular(const QuadraticForm& q, const std::vector<std::uint64_t>& basis) {
  const std::size_t k = basis.size();
  if (k >= 63) throw std::domain_error("find_singular: basis too large");
  std::uint64_t v = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    v ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    if (q(v) == 0) return v;
  }
  return 0;
}

}  // namespace

WittDecomposition witt_decompose(const QuadraticForm& q) {
  const BilinearForm b = polarize(q);
  WittDecomposition out;
  out.radical = b.radical();
  const Subspace rad = Subspace::span(q.dim(), out.radical);
  std::vector<std::uint64_t> work = rad.complement_basis();

  while (!work.empty()) {
    std::uint64_t e = find_singular(q, work);
    if (e == 0) e = work.front();
    std::uint64_t f = 0;
    for (std::uint64_t w : work)
      if (b(e, w)) {
        f = w;
        break;
      }
    if (f == 0) throw std::logic_error("witt_decompose: form degenerate on complement");
    if (q(e) == 0 && q(f) == 1) f ^= e;
    out.pair_e.push_back(e);
    out.pair_f.push_back(f);

    std::vector<std::uint64_t> projected;
    projected.reserve(work.size());
    for (std::uint64_t w : work) {
      std::uint64_t p = w;
      if (b(w, f)) p ^= e;
      if (b(w, e)) p ^= f;
      projected.push_back(p);
    }
    const Subspace reduced = Subspace::span(q.dim(), projected);
    work.assign(reduced.basis_bits().begin(), reduced.basis_bits().end());
    std::sort(work.begin(), work.end());
  }
  return out;
}

FormClass classify(const QuadraticForm& q) {
  const WittDecomposition w = witt_decompose(q);
  for (std::uint64_t r : w.radical)
    if (q(r) != 0) throw std::domain_error("classify: radical is not totally singular (defective form)");
  int arf = 0;
  for (std::size_t i = 0; i < w.pair_e.size(); ++i) arf ^= q(w.pair_e[i]) & q(w.pair_f[i]);
  FormClass c;
  c.radical_dim = static_cast<int>(w.radical.size());
  c.sign = arf == 0 ? SignType::kPlus : SignType::kMinus;
  const int m = static_cast<int>(w.pair_e.size());
  c.witt_index = c.radical_dim + (arf == 0 ? m : m - 1);
  return c;
}

std::uint64_t count_singular(const QuadraticForm& q) {
  const int n = q.dim();
  if (n > 32) throw std::domain_error("count_singular: exhaustive scan limited to dimension 32");
  const BilinearForm b = polarize(q);
  if (!b.radical().empty()) throw std::domain_error("count_singular: form is degenerate; quotient the radical first");
  const std::uint64_t diag = q.diagonal();
  auto rows = b.rows();
  std::uint64_t v = 0;
  int qv = 0;
  std::uint64_t zeros = 1;  // v = 0
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
    const int k = std::countr_zero(i);
    qv ^= static_cast<int>((diag >> k) & 1u) ^ parity(v & rows[static_cast<std::size_t>(k)]);
    v ^= std::uint64_t{1} << k;
    zeros += qv == 0;
  }
  return zeros - 1;
}

}  // namespace monstrous::gf2
