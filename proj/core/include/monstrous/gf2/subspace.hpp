#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "monstrous/gf2/vector.hpp"

namespace monstrous::gf2 {

/// Subspace of F2^n held as a canonical reduced echelon basis.
///
/// Pivot of a row = its highest set bit. Rows are fully reduced (no row has a
/// bit at another row's pivot) and kept in decreasing pivot order, so two
/// subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient_dim);

  static Subspace span(int ambient_dim, std::span<const std::uint64_t> vectors);
  static Subspace span(int ambient_dim, std::span<const GF2Vector> vectors);
  static Subspace whole(int ambient_dim);

  int ambient_dim() const noexcept { return ambient_; }
  int dim() const noexcept { return static_cast<int>(rows_.size()); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << rows_.size(); }

  std::span<const std::uint64_t> basis_bits() const noexcept { return rows_; }
  std::vector<GF2Vector> basis() const;

  /// Adds v to the span; returns false when v was already contained.
  bool insert(std::uint64_t v);
  bool contains(std::uint64_t v) const noexcept { return reduce(v) == 0; }
  bool contains(const GF2Vector& v) const noexcept { return contains(v.bits()); }
  bool contains(const Subspace& other) const noexcept;
  /// v reduced against the basis; zero iff v lies in the span.
  std::uint64_t reduce(std::uint64_t v) const noexcept;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {v : v . s = 0 for all s} under the standard dot product.
  Subspace orthogonal_complement_dot() const;
  /// Unit vectors completing the basis to one of F2^n.
  std::vector<std::uint64_t> complement_basis() const;

  /// Calls f on all 2^dim elements, 0 first, in Gray-code order.
  void for_each_element(const std::function<void(std::uint64_t)>& f) const;
  std::vector<std::uint64_t> elements() const;

  /// Span of the images of the basis under a linear map.
  Subspace image(const std::function<std::uint64_t(std::uint64_t)>& linear_map) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  int ambient_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Basis rows as 0/1 strings, for diagnostics.
std::ostream& operator<<(std::ostream& os, const Subspace& s);

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept;
};

}  // namespace monstrous::gf2
