// Runs the twelve acceptance criteria, each against its time limit, and
// prints one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monstrous/cvcc/cvcc.hpp"
#include "monstrous/fusion/singular.hpp"
#include "monstrous/gf2/mts.hpp"
#include "monstrous/gf2/perm_group.hpp"
#include "monstrous/harness/orders.hpp"
#include "monstrous/lattice/leech.hpp"

namespace {

using namespace monstrous;

struct Criterion {
  int number;
  std::string title;
  double limit_s;
  std::function<bool(std::ostringstream&)> run;
};

// Records a comparison; the log collects every mismatch.
bool expect(std::ostringstream& log, const std::string& what, const std::string& got, const std::string& want) {
  if (got == want) return true;
  log << " [" << what << ": got " << got << ", want " << want << "]";
  return false;
}

template <class T>
std::string s(const T& v) {
  if constexpr (std::is_same_v<T, BigInt>) return v.str();
  else if constexpr (std::is_same_v<T, std::string>) return v;
  else return std::to_string(v);
}

struct FusionSetup {
  fusion::TripleSpace t{fusion::RSpace::standard()};
  fusion::SingularSpace S = fusion::build_S(t);
  std::uint64_t m = fusion::TripleSpace::pack(t.base().designated_x(), 0, 0);
};

bool fusion_census(std::ostringstream& log) {
  const FusionSetup f;
  return expect(log, "dim V_2", s(fusion::dim_weight_space(f.t, f.S, 4)), "196884");
}

bool involution_trace(std::ostringstream& log) {
  const FusionSetup f;
  const fusion::SignCharacter z(f.t, f.m);
  return expect(log, "tr z on V_2", s(fusion::trace_on_weight_space(f.t, f.S, z, 4)), "276");
}

bool weight_one(std::ostringstream& log) {
  const FusionSetup f;
  const fusion::SignCharacter z(f.t, f.m);
  const fusion::SingularSpace tilde = fusion::twisted_extension(f.t, fusion::split(f.S, z).s0, f.m);
  bool ok = expect(log, "dim V_1", s(fusion::dim_weight_space(f.t, f.S, 2)), "0");
  ok &= expect(log, "dim tilde V_1", s(fusion::dim_weight_space(f.t, tilde, 2)), "24");
  return ok;
}

bool weight_two_counts(std::ostringstream& log) {
  const FusionSetup f;
  bool ok = expect(log, "|S|", s(f.S.space.size()), "32768");
  // Exhaustive pass over all 2^15 elements: the minimal weight of a triple is
  // the sum of its component minima; case 1 has a zero component.
  std::uint64_t case1 = 0, case2 = 0;
  const fusion::RSpace& r = f.t.base();
  f.S.space.for_each_element([&](std::uint64_t e) {
    if (e == 0) return;
    int w = 0;
    bool has_zero = false;
    for (int i = 0; i < 3; ++i) {
      const std::uint64_t c = fusion::TripleSpace::component(e, i);
      has_zero |= c == 0;
      w += r.profile(r.class_of(c)).min_weight2;
    }
    if (w == 4) (has_zero ? case1 : case2) += 1;
  });
  const fusion::Weight2Census w = fusion::classify_weight2(f.t, f.S);
  ok &= expect(log, "case 1", s(case1), "93");
  ok &= expect(log, "case 2", s(case2), "23808");
  ok &= expect(log, "case 1 (census)", s(w.case1), "93");
  ok &= expect(log, "case 2 (census)", s(w.case2), "23808");
  return ok;
}

bool quadratic_space(std::ostringstream& log) {
  const gf2::QuadraticForm q = gf2::QuadraticForm::hyperbolic(5);
  std::uint64_t singular = 0, nonsingular = 0;
  for (std::uint64_t v = 1; v < 1024; ++v) (q(v) ? nonsingular : singular) += 1;
  const std::vector<gf2::Subspace> mts = gf2::enumerate_mts(q);
  const gf2::PermGroup g = gf2::transvection_generators(q);
  bool ok = expect(log, "singular", s(singular), "527");
  ok &= expect(log, "nonsingular", s(nonsingular), "496");
  ok &= expect(log, "MTS", s(mts.size()), "4590");
  ok &= expect(log, "singular orbit", s(gf2::orbit_of_point(g, 0b1 - 1)), "527");
  ok &= expect(log, "nonsingular orbit", s(gf2::orbit_of_point(g, 0b11 - 1)), "496");
  ok &= expect(log, "MTS orbit", s(gf2::orbit_of_subspace(g, mts.front())), "4590");
  return ok;
}

bool orthogonal_order(std::ostringstream& log) {
  const gf2::QuadraticForm q = gf2::QuadraticForm::hyperbolic(5);
  const BigInt chain = gf2::group_order(gf2::transvection_generators(q));
  const BigInt formula = harness::order_orthogonal_plus_even(5, 2);
  const BigInt via_mts = BigInt(gf2::enumerate_mts(q).size()) * 1024 * harness::order_psl(5, 2);
  bool ok = expect(log, "chain vs formula", s(chain), s(formula));
  ok &= expect(log, "chain vs 4590 * 2^10 * |L5(2)|", s(chain), s(via_mts));
  ok &= expect(log, "value", s(chain), "46998591897600");
  return ok;
}

std::string abelian(const std::vector<BigInt>& f) {
  std::ostringstream os;
  std::size_t twos = 0;
  for (const BigInt& x : f) twos += x == 2;
  if (twos != f.size()) return "not elementary abelian";
  os << "(Z/2)^" << twos;
  return os.str();
}

bool lattice_suite(std::ostringstream& log) {
  const lattice::IntegerLattice leech = lattice::build_Leech();
  const lattice::IntegerLattice bw16 = lattice::build_BW16();
  const lattice::IntegerLattice e8 = lattice::build_E8();
  bool ok = expect(log, "det Leech", s(leech.det()), "1");
  ok &= expect(log, "Leech norm 2", s(lattice::leech_shell_count(2)), "0");
  ok &= expect(log, "Leech norm 4", s(lattice::leech_shell_vectors(4).size()), "196560");
  ok &= expect(log, "Leech norm 4 (DP)", s(lattice::leech_shell_count(4)), "196560");
  ok &= expect(log, "BW16 discriminant", abelian(lattice::discriminant_group(bw16)), "(Z/2)^8");
  ok &= expect(log, "BW16 norm 4", s(lattice::shells(bw16, 4).count), "4320");
  const lattice::EE8CubedEmbedding emb = lattice::embed_EE8_cubed(leech);
  ok &= expect(log, "[Leech : EE8^3]", s(emb.index.index), s(BigInt(1) << 12));
  ok &= expect(log, "E8 roots", s(lattice::shells(e8, 2).count), "240");
  return ok;
}

bool mod2_leech(std::ostringstream& log) {
  const lattice::IntegerLattice leech = lattice::build_Leech();
  const gf2::QuadraticForm q = lattice::mod2_quadratic_space(leech);
  bool ok = expect(log, "classify", gf2::to_string(gf2::classify(q)), "(0, plus, 12)");
  std::uint64_t bad = 0;
  const auto& shell = lattice::leech_minimal_vectors();
  for (const auto& v : shell) bad += q(lattice::mod2_image(leech, lattice::widen(v)));
  ok &= expect(log, "norm-4 vectors tested", s(shell.size()), "196560");
  ok &= expect(log, "q(alpha bar) = 1 cases", s(bad), "0");
  return ok;
}

bool gram_calculus(std::ostringstream& log) {
  using cvcc::CvccLabel;
  using cvcc::Sign;
  const auto& shell = lattice::leech_minimal_vectors();
  const lattice::LeechVector a = shell.front();
  auto partner = [&](std::int64_t ip) {
    for (const auto& b : shell)
      if (lattice::leech_inner(a, b) == ip) return b;
    return a;
  };
  const CvccLabel p(a, Sign::kPlus);
  bool ok = expect(log, "same label", monstrous::to_string(cvcc::gram(p, p)), "1/4");
  ok &= expect(log, "opposite sign", monstrous::to_string(cvcc::gram(p, p.with_eps(Sign::kMinus))), "0");
  ok &= expect(log, "<a,b> = 1", monstrous::to_string(cvcc::gram(p, CvccLabel(partner(1), Sign::kMinus))), "1/128");
  ok &= expect(log, "<a,b> = 2", monstrous::to_string(cvcc::gram(p, CvccLabel(partner(2), Sign::kPlus))), "1/32");
  const cvcc::BoundAudit audit = cvcc::sampled_bound_audit(shell, 1'000'000, 20261014, 2);
  ok &= expect(log, "pairs", s(audit.pairs), "1000000");
  ok &= expect(log, "outside [0, 1/12]", s(audit.outside_bound), "0");
  ok &= expect(log, "outside {0, 1/128, 1/32}", s(audit.unexpected), "0");
  return ok;
}

bool extraspecial(std::ostringstream& log) {
  const gf2::QuadraticForm q = lattice::mod2_quadratic_space(lattice::build_Leech());
  const cvcc::ExtraspecialGroup g = cvcc::build_extraspecial(q);
  const gf2::BilinearForm b = gf2::polarize(q);
  bool ok = expect(log, "order", s(g.order()), s(BigInt(1) << 25));
  ok &= expect(log, "center", s(g.center_size()), "2");
  std::uint64_t square_bad = 0, singular = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << 24); ++v) {
    const int qv = q(v);
    square_bad += g.square({0, v}) != cvcc::ExtraspecialElement{qv, 0};
    singular += qv == 0;
  }
  // Bilinearity reduces the commutator map to basis pairs; random pairs as a spot check.
  std::uint64_t comm_bad = 0;
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      const std::uint64_t u = std::uint64_t{1} << i, v = std::uint64_t{1} << j;
      comm_bad += g.commutator({0, u}, {0, v}) != cvcc::ExtraspecialElement{b(u, v), 0};
    }
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100000; ++k) {
    const std::uint64_t u = rng() & 0xffffff, v = rng() & 0xffffff;
    comm_bad += g.commutator({1, u}, {0, v}) != cvcc::ExtraspecialElement{b(u, v), 0};
  }
  ok &= expect(log, "square map mismatches", s(square_bad), "0");
  ok &= expect(log, "commutator map mismatches", s(comm_bad), "0");
  ok &= expect(log, "singular vectors incl. 0", s(singular), s((std::uint64_t{1} << 23) + (std::uint64_t{1} << 11)));
  return ok;
}

bool appendix_signs(std::ostringstream& log) {
  const FusionSetup f;
  const fusion::RSpace& r = f.t.base();
  const std::uint64_t x = r.designated_x();
  std::uint64_t phi_plus = 0, phi_total = 0, psi_minus = 0, psi_total = 0;
  r.phi().for_each_element([&](std::uint64_t xp) {
    ++phi_total;
    phi_plus += fusion::appendix_sector_sign(f.t, fusion::TripleSpace::pack(xp, 0, 0), f.m) == 1;
  });
  r.psi().for_each_element([&](std::uint64_t y) {
    if (!r.b()(x, y)) return;
    ++psi_total;
    psi_minus += fusion::appendix_sector_sign(f.t, fusion::TripleSpace::pack(y, 0, 0), f.m) == -1;
  });
  bool ok = expect(log, "+1 on Phi", s(phi_plus), s(phi_total));
  ok &= expect(log, "|Phi|", s(phi_total), "32");
  ok &= expect(log, "-1 on y in Psi with <x,y> = 1", s(psi_minus), s(psi_total));
  ok &= expect(log, "#y", s(psi_total), "16");
  return ok;
}

bool order_arithmetic(std::ostringstream& log) {
  using harness::evaluate_shape;
  using harness::OrderExpression;
  bool ok = true;
  ok &= expect(log, "|L5(2)|", s(harness::order_psl(5, 2)), "9999360");
  ok &= expect(log, "|Omega+(10,2)|", s(harness::order_omega_plus_even(5, 2)), "23499295948800");
  ok &= expect(log, "|Co1|",
               s(OrderExpression::from_factors({{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}).decimal),
               "4157776806543360000");
  const std::vector<std::pair<std::string, std::string>> shapes = {
      {"2^{20}:(L_5(2)\xC3\x97Sym_3)", "62910533468160"},
      {"2^{15}(2^{20}:(L_5(2)\xC3\x97Sym_3))", "2061452360684666880"},
      {"2^{5}(2^{10}(2^{20}:(L_5(2)\xC3\x97Sym_3)))", "2061452360684666880"},
      {"2^{10}(2^{16} Omega^+(10,2))", "1577011055923770163200"},
      {"2\xC2\xB7" "2^{24}Co_1", "139511839126336328171520000"},
      {"2^{1+24}Co_1", "139511839126336328171520000"},
      {"2^{24}Co_1", "69755919563168164085760000"},
  };
  for (const auto& [shape, want] : shapes) {
    const OrderExpression e = evaluate_shape(shape);
    ok &= expect(log, shape + " consistent", e.consistent() ? "yes" : "no", "yes");
    ok &= expect(log, shape, s(e.decimal), want);
  }
  const OrderExpression m = OrderExpression::from_factors(harness::monster_factors(false));
  ok &= expect(log, "Monster factorization vs decimal",
               s(OrderExpression::from_factors(harness::factorize(m.decimal)).decimal), s(m.decimal));
  ok &= expect(log, "Monster digits", s(m.decimal.str().size()), "54");
  ok &= expect(log, "Monster", s(m.decimal), "808017424794512875886459904961710757005754368000000000");
  const OrderExpression v = OrderExpression::from_factors(harness::monster_factors(true));
  ok &= expect(log, "variant with 39 flagged", v.factors_prime() ? "accepted" : "flagged", "flagged");
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "fusion census: dim of the weight-2 space is 196884", 1, fusion_census},
      {2, "involution trace on the weight-2 space is 276", 1, involution_trace},
      {3, "weight-one space vanishes; twisted extension has dim 24", 1, weight_one},
      {4, "weight-2 classification counts 93 and 23808", 1, weight_two_counts},
      {5, "dim-10 plus-type census 527/496/4590 with single orbits", 10, quadratic_space},
      {6, "|O+(10,2)| by stabilizer chain, formula and MTS count", 60, orthogonal_order},
      {7, "lattice suite: Leech, BW16, EE8^3 index, E8 roots", 300, lattice_suite},
      {8, "Leech mod 2 is (0, plus, 12) and q vanishes on norm-4 images", 30, mod2_leech},
      {9, "conformal-vector Gram values and 10^6-pair bound audit", 60, gram_calculus},
      {10, "extraspecial 2^{1+24}: order, center, squares, commutators, singular count", 30, extraspecial},
      {11, "appendix sector signs on Phi and Psi", 1, appendix_signs},
      {12, "group order arithmetic and the Monster order", 1, order_arithmetic},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream log;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      log << " [time limit exceeded]";
      ok = false;
    }
    failed += !ok;
    std::printf("%s  %2d  %s  (%.3f s, limit %g s)%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                c.limit_s, log.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
