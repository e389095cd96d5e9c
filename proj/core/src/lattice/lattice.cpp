#include "monstrous/lattice/lattice.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "monstrous/lattice/golay.hpp"

namespace monstrous::lattice {

namespace {

bool is_upper_triangular(const IntMatrix& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i][i] == 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (b[i][j] != 0) return false;
  }
  return true;
}

std::int64_t dot(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

IntegerLattice::IntegerLattice(std::string name, IntMatrix basis, std::int64_t scale, std::string scale_note)
    : name_(std::move(name)), basis_(std::move(basis)), scale_(scale), scale_note_(std::move(scale_note)) {
  if (scale_ <= 0) throw std::invalid_argument("IntegerLattice: scale must be positive");
  const std::size_t n = basis_.size();
  for (const auto& row : basis_)
    if (row.size() != n) throw std::invalid_argument("IntegerLattice: basis must be square");
  gram_.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t d = dot(basis_[i], basis_[j]);
      if (d % scale_ != 0) throw std::invalid_argument("IntegerLattice: inner products not integral at this scale");
      gram_[i][j] = d / scale_;
    }
  if (determinant(gram_) == 0) throw std::invalid_argument("IntegerLattice: basis rows are dependent");
  triangular_ = is_upper_triangular(basis_);
}

IntegerLattice IntegerLattice::from_generators(std::string name, const IntMatrix& generators, std::int64_t scale,
                                               std::string scale_note) {
  return IntegerLattice(std::move(name), to_int(hermite_normal_form(to_big(generators))), scale,
                        std::move(scale_note));
}

IntegerLattice IntegerLattice::from_gram(std::string name, IntMatrix gram) {
  IntegerLattice l;
  l.name_ = std::move(name);
  l.gram_ = std::move(gram);
  l.check_gram();
  return l;
}

void IntegerLattice::check_gram() const {
  const std::size_t n = gram_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw std::invalid_argument("IntegerLattice: Gram matrix must be square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("IntegerLattice: Gram matrix not symmetric");
  }
  if (determinant(gram_) == 0) throw std::invalid_argument("IntegerLattice: Gram matrix is singular");
}

BigInt IntegerLattice::det() const { return determinant(gram_); }

bool IntegerLattice::is_even() const {
  for (std::size_t i = 0; i < gram_.size(); ++i)
    if (gram_[i][i] % 2 != 0) return false;
  return true;
}

std::int64_t IntegerLattice::inner(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
  if (!has_ambient()) throw std::logic_error("IntegerLattice::inner: lattice has no ambient coordinates");
  const std::int64_t d = dot(x, y);
  if (d % scale_ != 0) throw std::invalid_argument("IntegerLattice::inner: vectors not in the lattice scale");
  return d / scale_;
}

std::optional<std::vector<std::int64_t>> IntegerLattice::coordinates(const std::vector<std::int64_t>& x) const {
  if (!triangular_) throw std::logic_error("IntegerLattice::coordinates: basis is not triangular");
  return triangular_coordinates(basis_, x);
}

std::vector<std::int64_t> IntegerLattice::ambient(const std::vector<std::int64_t>& coords) const {
  if (!has_ambient()) throw std::logic_error("IntegerLattice::ambient: lattice has no ambient coordinates");
  const std::size_t n = rank();
  if (coords.size() != n) throw std::invalid_argument("IntegerLattice::ambient: dimension mismatch");
  std::vector<std::int64_t> x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (coords[i] != 0)
      for (std::size_t j = 0; j < n; ++j) x[j] += coords[i] * basis_[i][j];
  return x;
}

namespace {

IntMatrix e8_generators() {
  IntMatrix g;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int s : {1, -1}) {
        std::vector<std::int64_t> v(8, 0);
        v[static_cast<std::size_t>(i)] = 2;
        v[static_cast<std::size_t>(j)] = 2 * s;
        g.push_back(v);
      }
  g.emplace_back(8, 1);
  return g;
}

std::vector<std::int64_t> apply_R(const std::vector<std::int64_t>& z) {
  std::vector<std::int64_t> out(z.size());
  for (std::size_t k = 0; k + 1 < z.size(); k += 2) {
    out[k] = z[k] + z[k + 1];
    out[k + 1] = z[k] - z[k + 1];
  }
  return out;
}

}  // namespace

IntegerLattice build_E8() {
  return IntegerLattice::from_generators("E8", e8_generators(), 4, "doubled coordinates: inner product x.y/4");
}

IntegerLattice build_EE8() {
  const IntegerLattice e8 = build_E8();
  IntMatrix g;
  for (const auto& b : e8.basis()) g.push_back(apply_R(b));
  return IntegerLattice::from_generators("EE8", g, 4, "doubled coordinates: inner product x.y/4");
}

IntegerLattice build_BW16() {
  const IntegerLattice e8 = build_E8();
  IntMatrix g;
  for (const auto& b : e8.basis()) {
    const auto rb = apply_R(b);
    std::vector<std::int64_t> left(16, 0), right(16, 0), diag(16, 0);
    for (std::size_t k = 0; k < 8; ++k) {
      left[k] = rb[k];
      right[k + 8] = rb[k];
      diag[k] = diag[k + 8] = b[k];
    }
    g.push_back(left);
    g.push_back(right);
    g.push_back(diag);
  }
  return IntegerLattice::from_generators("BW16", g, 4, "doubled coordinates: inner product x.y/4");
}

IntegerLattice build_Leech() {
  IntMatrix g;
  for (std::uint32_t c : golay_code().generators()) {
    std::vector<std::int64_t> v(24, 0);
    for (int i = 0; i < 24; ++i)
      if ((c >> i) & 1u) v[static_cast<std::size_t>(i)] = 2;
    g.push_back(v);
  }
  for (int j = 1; j < 24; ++j)
    for (int s : {4, -4}) {
      std::vector<std::int64_t> v(24, 0);
      v[0] = 4;
      v[static_cast<std::size_t>(j)] = s;
      g.push_back(v);
    }
  std::vector<std::int64_t> odd(24, 1);
  odd[0] = -3;
  g.push_back(odd);
  return IntegerLattice::from_generators("Leech", g, 8, "coordinates scaled by sqrt 8: inner product x.y/8");
}

std::vector<std::vector<std::int64_t>> shell_vectors(const IntegerLattice& l, std::int64_t norm) {
  const std::size_t n = l.rank();
  const IntMatrix& g = l.gram();
  std::vector<std::vector<std::int64_t>> out;
  if (norm < 0) return out;

  // Cholesky-type decomposition: norm(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
  std::vector<std::vector<long double>> q(n, std::vector<long double>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = static_cast<long double>(g[i][j]);
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw std::domain_error("shell_vectors: Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t m = k; m < n; ++m) q[k][m] -= q[k][i] * q[i][m];
  }

  const long double slack = 1e-6L * static_cast<long double>(norm + 1);
  std::vector<std::int64_t> x(n, 0);
  std::vector<long double> budget(n + 1, 0);
  budget[n] = static_cast<long double>(norm) + slack;

  auto exact_norm = [&]() {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      std::int64_t row = 0;
      for (std::size_t j = 0; j < n; ++j) row += g[i][j] * x[j];
      s += x[i] * row;
    }
    return s;
  };

  auto recurse = [&](auto&& self, std::size_t level) -> void {
    const std::size_t i = level - 1;
    long double center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q[i][j] * static_cast<long double>(x[j]);
    const long double radius = std::sqrt(std::max<long double>(budget[level], 0) / q[i][i]);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - radius - 1e-9L));
    const auto hi = static_cast<std::int64_t>(std::floor(center + radius + 1e-9L));
    for (std::int64_t v = lo; v <= hi; ++v) {
      const long double d = static_cast<long double>(v) - center;
      const long double rest = budget[level] - q[i][i] * d * d;
      if (rest < -slack) continue;
      x[i] = v;
      if (i == 0) {
        if (exact_norm() == norm) out.push_back(x);
      } else {
        budget[i] = rest;
        self(self, i);
      }
    }
    x[i] = 0;
  };
  if (n == 0) {
    if (norm == 0) out.emplace_back();
    return out;
  }
  recurse(recurse, n);
  return out;
}

ShellCount shells(const IntegerLattice& l, std::int64_t norm) { return {norm, shell_vectors(l, norm).size()}; }

std::vector<BigInt> discriminant_group(const IntegerLattice& l) {
  std::vector<BigInt> out;
  for (const BigInt& d : smith_invariants(to_big(l.gram()))) {
    if (d == 0) throw std::domain_error("discriminant_group: Gram matrix is singular");
    if (d > 1) out.push_back(d);
  }
  return out;
}

SublatticeIndex sublattice_index(const IntegerLattice& l, const IntMatrix& sub_basis) {
  if (sub_basis.size() != l.rank()) throw std::invalid_argument("sublattice_index: sublattice must have full rank");
  IntMatrix c;
  for (const auto& row : sub_basis) {
    auto coords = l.coordinates(row);
    if (!coords) throw std::invalid_argument("sublattice_index: vector outside the lattice");
    c.push_back(*coords);
  }
  SublatticeIndex out;
  out.index = abs(determinant(c));
  if (out.index == 0) throw std::invalid_argument("sublattice_index: sublattice rows are dependent");
  for (const BigInt& d : smith_invariants(to_big(c)))
    if (d > 1) out.quotient.push_back(d);
  return out;
}

gf2::QuadraticForm mod2_quadratic_space(const IntegerLattice& l) {
  if (!l.is_even()) throw std::domain_error("mod2_quadratic_space: lattice is not even");
  const int n = static_cast<int>(l.rank());
  if (n > gf2::kMaxDim) throw std::domain_error("mod2_quadratic_space: rank exceeds 64");
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n), 0);
  const IntMatrix& g = l.gram();
  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    if ((g[si][si] / 2) & 1) up[si] |= std::uint64_t{1} << i;
    for (int j = i + 1; j < n; ++j)
      if (g[si][static_cast<std::size_t>(j)] & 1) up[si] |= std::uint64_t{1} << j;
  }
  return gf2::QuadraticForm(n, up);
}

std::uint64_t mod2_image(const IntegerLattice& l, const std::vector<std::int64_t>& x) {
  const auto c = l.coordinates(x);
  if (!c) throw std::invalid_argument("mod2_image: vector not in the lattice");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < c->size(); ++i)
    if ((*c)[i] & 1) bits |= std::uint64_t{1} << i;
  return bits;
}

std::string basis_text(const IntegerLattice& l) {
  std::ostringstream os;
  for (const auto& row : l.basis()) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
  return os.str();
}

IntegerLattice random_basis_change(const IntegerLattice& l, std::uint64_t seed, int steps) {
  IntMatrix g = l.gram();
  const std::size_t n = g.size();
  if (n < 2) return IntegerLattice::from_gram(l.name(), g);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    const std::int64_t c = (rng() & 1) ? 1 : -1;
    // b_i <- b_i + c b_j, applied to rows and columns of the Gram matrix.
    for (std::size_t k = 0; k < n; ++k) g[i][k] += c * g[j][k];
    for (std::size_t k = 0; k < n; ++k) g[k][i] += c * g[k][j];
  }
  return IntegerLattice::from_gram(l.name(), g);
}

}  // namespace monstrous::lattice
