#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "monstrous/bigint.hpp"

namespace monstrous::harness {

using Factorization = std::map<std::uint64_t, unsigned>;

/// An integer held both as prime powers and as a decimal.
struct OrderExpression {
  Factorization factors;
  BigInt decimal;

  static OrderExpression from_factors(Factorization f);
  /// decimal equals the product of the factors.
  bool consistent() const;
  /// Every base in factors is prime.
  bool factors_prime() const;
  /// "2^46 * 3^20 * ... * 71"
  std::string factor_string() const;

  friend bool operator==(const OrderExpression&, const OrderExpression&) = default;
};

bool is_prime(std::uint64_t n);
BigInt product(const Factorization& f);
/// Trial division; throws std::domain_error if a cofactor above 10^6 remains
/// that is not a prime fitting in 64 bits.
Factorization factorize(BigInt n);

/// |L_n(q)| = q^{n(n-1)/2} prod_{i=2}^{n} (q^i - 1) / gcd(n, q - 1).
BigInt order_psl(unsigned n, std::uint64_t q);
/// |Omega^+(2m, q)| for even q: q^{m(m-1)} (q^m - 1) prod_{i=1}^{m-1} (q^{2i} - 1).
BigInt order_omega_plus_even(unsigned m, std::uint64_t q);
/// |O^+(2m, q)| for even q, twice the above.
BigInt order_orthogonal_plus_even(unsigned m, std::uint64_t q);

struct NamedOrder {
  std::string name;  // as written in shape strings
  BigInt order;
  std::string source;
};

/// Composition-factor orders used by the shape evaluator.
const std::vector<NamedOrder>& named_orders();

/// Evaluates a group shape such as "2^{15}(2^{20}:(L_5(2) x Sym_3))" as the
/// product of its factor orders. Extensions ':' '.' and direct products
/// 'x' or '×' all multiply, as does juxtaposition. Throws std::invalid_argument
/// on syntax errors or unknown names.
OrderExpression evaluate_shape(std::string_view shape);

/// 2^46 3^20 5^9 7^6 11^2 13^3 17 19 23 p 31 41 47 59 71 with p = 29, or
/// p = 39 for the variant string that carries 39 in that slot.
Factorization monster_factors(bool printed_39 = false);

}  // namespace monstrous::harness
