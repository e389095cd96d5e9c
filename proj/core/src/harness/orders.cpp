#include "monstrous/harness/orders.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monstrous::harness {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt product(const Factorization& f) {
  BigInt r = 1;
  for (const auto& [p, e] : f) r *= pow_big(p, e);
  return r;
}

Factorization factorize(BigInt n) {
  if (n <= 0) throw std::domain_error("factorize: positive integer required");
  Factorization f;
  for (std::uint64_t d = 2; d <= 1'000'000 && d * d <= n; ++d)
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  if (n > 1) {
    if (n > std::numeric_limits<std::uint64_t>::max() || !is_prime(static_cast<std::uint64_t>(n)))
      throw std::domain_error("factorize: large cofactor");
    ++f[static_cast<std::uint64_t>(n)];
  }
  return f;
}

OrderExpression OrderExpression::from_factors(Factorization f) {
  OrderExpression e;
  e.decimal = product(f);
  e.factors = std::move(f);
  return e;
}

bool OrderExpression::consistent() const { return decimal == product(factors); }

bool OrderExpression::factors_prime() const {
  for (const auto& [p, e] : factors)
    if (e > 0 && !is_prime(p)) return false;
  return true;
}

std::string OrderExpression::factor_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (e == 0) continue;
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  return first ? "1" : os.str();
}

BigInt order_psl(unsigned n, std::uint64_t q) {
  BigInt r = pow_big(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) r *= pow_big(q, i) - 1;
  return r / std::gcd<std::uint64_t, std::uint64_t>(n, q - 1);
}

BigInt order_omega_plus_even(unsigned m, std::uint64_t q) {
  if (q % 2 != 0) throw std::invalid_argument("order_omega_plus_even: q must be even");
  BigInt r = pow_big(q, m * (m - 1)) * (pow_big(q, m) - 1);
  for (unsigned i = 1; i < m; ++i) r *= pow_big(q, 2 * i) - 1;
  return r;
}

BigInt order_orthogonal_plus_even(unsigned m, std::uint64_t q) { return 2 * order_omega_plus_even(m, q); }

const std::vector<NamedOrder>& named_orders() {
  // Orders as tabulated in the ATLAS of Finite Groups (Conway et al., 1985).
  static const std::vector<NamedOrder> table = {
      {"L_5(2)", BigInt(9999360), "ATLAS: L5(2), order 9999360"},
      {"L_2(5)", BigInt(60), "ATLAS: L2(5) = A5, order 60"},
      {"Sym_3", BigInt(6), "symmetric group on 3 letters"},
      {"Omega^+(10,2)", BigInt(23499295948800ULL), "ATLAS: O10+(2), order 23499295948800"},
      {"Co_1", BigInt("4157776806543360000"), "ATLAS: Co1, order 4157776806543360000"},
  };
  return table;
}

namespace {

class ShapeParser {
 public:
  explicit ShapeParser(std::string_view s) : s_(s) {}

  Factorization parse() {
    Factorization f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("evaluate_shape: " + std::string(what) + " at offset " + std::to_string(pos_) +
                                " in \"" + std::string(s_) + "\"");
  }

  // Separators: whitespace, ':', '.', '*', 'x', and the UTF-8 '×' and '·'.
  void skip() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '.' || c == '*' || c == 'x') {
        ++pos_;
      } else if (s_.substr(pos_, 2) == "\xC3\x97" || s_.substr(pos_, 2) == "\xC2\xB7") {
        pos_ += 2;
      } else {
        break;
      }
    }
  }

  static void merge(Factorization& into, const Factorization& f, unsigned times = 1) {
    for (const auto& [p, e] : f) into[p] += e * times;
  }

  Factorization expr() {
    Factorization f;
    for (;;) {
      skip();
      if (pos_ == s_.size() || s_[pos_] == ')') return f;
      merge(f, term());
    }
  }

  std::uint64_t integer() {
    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("digit expected");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = 10 * v + (s_[pos_++] - '0');
    return v;
  }

  unsigned exponent() {
    if (pos_ < s_.size() && s_[pos_] == '{') {
      ++pos_;
      unsigned e = static_cast<unsigned>(integer());
      while (pos_ < s_.size() && s_[pos_] == '+') {
        ++pos_;
        e += static_cast<unsigned>(integer());
      }
      if (pos_ == s_.size() || s_[pos_] != '}') fail("'}' expected");
      ++pos_;
      return e;
    }
    return static_cast<unsigned>(integer());
  }

  Factorization term() {
    if (s_[pos_] == '(') {
      ++pos_;
      Factorization f = expr();
      if (pos_ == s_.size() || s_[pos_] != ')') fail("')' expected");
      ++pos_;
      return f;
    }
    for (const NamedOrder& n : named_orders())
      if (s_.substr(pos_, n.name.size()) == n.name) {
        pos_ += n.name.size();
        return factorize(n.order);
      }
    if (!std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("unknown factor");
    const std::uint64_t base = integer();
    unsigned e = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      e = exponent();
    }
    Factorization f;
    if (base == 0) fail("zero factor");
    merge(f, base == 1 ? Factorization{} : factorize(base), e);
    return f;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

OrderExpression evaluate_shape(std::string_view shape) { return OrderExpression::from_factors(ShapeParser(shape).parse()); }

Factorization monster_factors(bool printed_39) {
  Factorization f = {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1},
                     {23, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}};
  f[printed_39 ? 39 : 29] = 1;
  return f;
}

}  // namespace monstrous::harness
