#include "monstrous/lattice/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace monstrous::lattice {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy_row(std::vector<BigInt>& dst, const BigInt& q, const std::vector<BigInt>& src) {
  if (q == 0) return;
  for (std::size_t k = 0; k < dst.size(); ++k)
    if (src[k] != 0) dst[k] -= q * src[k];
}

}  // namespace

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

IntMatrix to_int(const BigMatrix& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const BigInt& x : m[i]) {
      if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN)) throw std::overflow_error("to_int: entry exceeds 64 bits");
      out[i].push_back(static_cast<std::int64_t>(x));
    }
  }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("multiply: shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      const std::int64_t x = a[i][l];
      if (x == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += x * b[l][j];
    }
  }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix out(a[0].size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

BigInt determinant(BigMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt determinant(const IntMatrix& m) { return determinant(to_big(m)); }

BigMatrix hermite_normal_form(BigMatrix a) {
  if (a.empty()) return a;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < a.size(); ++j) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][j] != 0 && (best == a.size() || abs(a[i][j]) < abs(a[best][j]))) best = i;
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][j] == 0) continue;
        axpy_row(a[i], floor_div(a[i][j], a[r][j]), a[r]);
        clean &= a[i][j] == 0;
      }
      if (clean) break;
    }
    if (r == a.size() || a[r][j] == 0) continue;
    if (a[r][j] < 0)
      for (BigInt& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) axpy_row(a[i], floor_div(a[i][j], a[r][j]), a[r]);
    ++r;
    // Rows that became zero are dropped to keep later columns cheap.
    a.erase(std::remove_if(a.begin() + static_cast<std::ptrdiff_t>(r), a.end(),
                           [](const std::vector<BigInt>& row) {
                             return std::all_of(row.begin(), row.end(), [](const BigInt& x) { return x == 0; });
                           }),
            a.end());
  }
  a.resize(r);
  return a;
}

std::vector<BigInt> smith_invariants(BigMatrix a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  std::vector<BigInt> out;
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) {
        out.resize(n, 0);
        return out;
      }
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        axpy_row(a[i], floor_div(a[i][t], a[t][t]), a[t]);
        done &= a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = floor_div(a[t][j], a[t][t]);
        for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
        done &= a[t][j] == 0;
      }
      if (!done) continue;
      // Pivot must divide the rest; otherwise fold an offending row in.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = 0; j < cols; ++j) a[t][j] += a[bad][j];
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

std::optional<std::vector<std::int64_t>> triangular_coordinates(const IntMatrix& basis,
                                                                const std::vector<std::int64_t>& v) {
  const std::size_t n = basis.size();
  if (v.size() != n) throw std::invalid_argument("triangular_coordinates: dimension mismatch");
  std::vector<__int128> rest(v.begin(), v.end());
  std::vector<std::int64_t> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t p = basis[k][k];
    if (p == 0) throw std::invalid_argument("triangular_coordinates: basis is not triangular of full rank");
    if (rest[k] % p != 0) return std::nullopt;
    x[k] = static_cast<std::int64_t>(rest[k] / p);
    for (std::size_t j = k; j < n; ++j) rest[j] -= static_cast<__int128>(x[k]) * basis[k][j];
  }
  return x;
}

}  // namespace monstrous::lattice
