#include "monstrous/harness/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "monstrous/cvcc/cvcc.hpp"
#include "monstrous/fusion/singular.hpp"
#include "monstrous/gf2/mts.hpp"
#include "monstrous/gf2/perm_group.hpp"
#include "monstrous/harness/orders.hpp"
#include "monstrous/lattice/leech.hpp"

namespace monstrous::harness {

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "skipped";
}

std::string to_string(ValueKind k) {
  switch (k) {
    case ValueKind::kInteger: return "integer";
    case ValueKind::kRational: return "rational";
    case ValueKind::kString: return "string";
  }
  return "string";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::kPass;
  if (s == "fail") return Status::kFail;
  if (s == "skipped") return Status::kSkipped;
  throw std::invalid_argument("unknown status: " + s);
}

ValueKind kind_from_string(const std::string& s) {
  if (s == "integer") return ValueKind::kInteger;
  if (s == "rational") return ValueKind::kRational;
  if (s == "string") return ValueKind::kString;
  throw std::invalid_argument("unknown value kind: " + s);
}

Summary Report::summary() const {
  Summary s;
  for (const CheckResult& c : checks) {
    if (c.status == Status::kPass) ++s.pass;
    else if (c.status == Status::kFail) ++s.fail;
    else ++s.skipped;
  }
  return s;
}

const std::vector<std::string>& out_of_scope_claims() {
  static const std::vector<std::string> v = {
      "simplicity of the automorphism group of the constructed VOA",
      "conjugacy and uniqueness statements, including uniqueness of the Leech lattice",
      "rationality and C2-cofiniteness of the VOAs involved",
      "fusion rules and intertwining operators as theorems (only their combinatorial shadow is computed)",
      "structure of automorphism groups beyond integer order arithmetic",
  };
  return v;
}

namespace {

bool glob_one(const char* p, const char* t) {
  // Iterative wildcard match with single-star backtracking.
  const char* star = nullptr;
  const char* mark = nullptr;
  while (*t) {
    if (*p == '?' || (*p && *p != '*' && *p == *t)) {
      ++p;
      ++t;
    } else if (*p == '*') {
      star = p++;
      mark = t;
    } else if (star) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (*p == '*') ++p;
  return *p == '\0';
}

}  // namespace

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = pattern.find(',', start);
    const std::string part = pattern.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!part.empty() && glob_one(part.c_str(), text.c_str())) return true;
    if (comma == std::string::npos) return false;
    start = comma + 1;
  }
}

std::uint64_t check_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  std::mt19937_64 rng(seq);
  return rng();
}

/// Objects shared by all checks of a run, built on first use; safe under
/// concurrent checks. Copies share the objects and carry their own seed.
class CheckContext {
 public:
  explicit CheckContext(unsigned threads) : shared_(std::make_shared<Shared>()), threads_(std::max(1u, threads)) {}

  unsigned threads() const { return threads_; }
  std::uint64_t seed = 0;

  const gf2::QuadraticForm& q10() const { return shared_->q10; }
  const gf2::PermGroup& group10() {
    return lazy(shared_->group10, shared_->f_group10, [&] { return gf2::transvection_generators(q10()); });
  }
  const std::vector<gf2::Subspace>& mts10() {
    return lazy(shared_->mts10, shared_->f_mts10, [&] { return gf2::enumerate_mts(q10()); });
  }

  const fusion::TripleSpace& triple() {
    return lazy(shared_->triple, shared_->f_triple, [] { return fusion::TripleSpace(fusion::RSpace::standard()); });
  }
  const fusion::SingularSpace& S() { return lazy(shared_->S, shared_->f_S, [&] { return fusion::build_S(triple()); }); }
  std::uint64_t m() { return fusion::TripleSpace::pack(triple().base().designated_x(), 0, 0); }
  const fusion::SingularSpace& tilde() {
    return lazy(shared_->tilde, shared_->f_tilde, [&] {
      const fusion::SignCharacter z(triple(), m());
      return fusion::twisted_extension(triple(), fusion::split(S(), z).s0, m());
    });
  }

  const lattice::IntegerLattice& e8() { return lazy(shared_->e8, shared_->f_e8, [] { return lattice::build_E8(); }); }
  const lattice::IntegerLattice& ee8() { return lazy(shared_->ee8, shared_->f_ee8, [] { return lattice::build_EE8(); }); }
  const lattice::IntegerLattice& bw16() {
    return lazy(shared_->bw16, shared_->f_bw16, [] { return lattice::build_BW16(); });
  }
  const lattice::IntegerLattice& leech() {
    return lazy(shared_->leech, shared_->f_leech, [] { return lattice::build_Leech(); });
  }
  const std::vector<lattice::LeechVector>& leech4() {
    return lazy(shared_->leech4, shared_->f_leech4, [&] { return lattice::leech_shell_vectors(4, threads_); });
  }
  const gf2::QuadraticForm& q24() {
    return lazy(shared_->q24, shared_->f_q24, [&] { return lattice::mod2_quadratic_space(leech()); });
  }
  const cvcc::ExtraspecialGroup& extraspecial() {
    return lazy(shared_->ext, shared_->f_ext, [&] { return cvcc::build_extraspecial(q24()); });
  }

 private:
  struct Shared {
    gf2::QuadraticForm q10 = gf2::QuadraticForm::hyperbolic(5);
    std::optional<gf2::PermGroup> group10;
    std::optional<std::vector<gf2::Subspace>> mts10;
    std::optional<fusion::TripleSpace> triple;
    std::optional<fusion::SingularSpace> S, tilde;
    std::optional<lattice::IntegerLattice> e8, ee8, bw16, leech;
    std::optional<std::vector<lattice::LeechVector>> leech4;
    std::optional<gf2::QuadraticForm> q24;
    std::optional<cvcc::ExtraspecialGroup> ext;
    std::once_flag f_group10, f_mts10, f_triple, f_S, f_tilde, f_e8, f_ee8, f_bw16, f_leech, f_leech4, f_q24, f_ext;
  };

  template <class T, class F>
  static const T& lazy(std::optional<T>& slot, std::once_flag& flag, F&& make) {
    std::call_once(flag, [&] { slot.emplace(make()); });
    return *slot;
  }

  std::shared_ptr<Shared> shared_;
  unsigned threads_;
};

namespace {

CheckOutcome integer(const std::string& expected, const BigInt& computed, std::string detail = {}) {
  return {expected, computed.str(), ValueKind::kInteger, std::move(detail)};
}

CheckOutcome text(const std::string& expected, const std::string& computed, std::string detail = {}) {
  return {expected, computed, ValueKind::kString, std::move(detail)};
}

std::string abelian_invariants(const std::vector<BigInt>& factors) {
  if (factors.empty()) return "trivial";
  std::map<BigInt, int> count;
  for (const BigInt& f : factors) ++count[f];
  std::string out;
  for (const auto& [f, n] : count) {
    if (!out.empty()) out += " x ";
    out += "(Z/" + f.str() + ")";
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

// The decimal of a shape, or a marker when its factors and decimal disagree.
std::string shape_value(const std::string& shape) {
  const OrderExpression e = evaluate_shape(shape);
  return e.consistent() ? e.decimal.str() : "inconsistent factorization";
}

CheckOutcome shape_check(const std::string& shape, const std::string& expected) {
  const OrderExpression e = evaluate_shape(shape);
  return {expected, shape_value(shape), ValueKind::kInteger, shape + " = " + e.factor_string()};
}

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> r;
  auto add = [&](std::string id, std::string ref, std::function<CheckOutcome(CheckContext&)> f) {
    r.push_back({std::move(id), std::move(ref), std::move(f)});
  };

  // Quadratic spaces over F2.
  add("quadspace.classify_dim10", "the 10-dimensional plus-type quadratic space of the code VOA labels",
      [](CheckContext& c) { return text("(0, plus, 5)", gf2::to_string(gf2::classify(c.q10()))); });
  add("quadspace.singular_dim10", "nonzero singular vectors of the 10-dimensional plus-type space",
      [](CheckContext& c) { return integer("527", gf2::count_singular(c.q10())); });
  add("quadspace.nonsingular_dim10", "nonsingular vectors of the 10-dimensional plus-type space",
      [](CheckContext& c) {
        std::uint64_t n = 0;
        for (std::uint64_t v = 1; v < 1024; ++v) n += c.q10()(v);
        return integer("496", n);
      });
  add("quadspace.mts_dim10", "maximal totally singular subspaces of the 10-dimensional plus-type space",
      [](CheckContext& c) { return integer("4590", c.mts10().size()); });
  add("quadspace.orbit_singular", "transitivity of the isometry group on nonzero singular vectors",
      [](CheckContext& c) { return integer("527", gf2::orbit_of_point(c.group10(), 0b1 - 1)); });
  add("quadspace.orbit_nonsingular", "transitivity of the isometry group on nonsingular vectors",
      [](CheckContext& c) { return integer("496", gf2::orbit_of_point(c.group10(), 0b11 - 1)); });
  add("quadspace.orbit_mts", "transitivity of the isometry group on maximal totally singular subspaces",
      [](CheckContext& c) { return integer("4590", gf2::orbit_of_subspace(c.group10(), c.mts10().front())); });
  add("quadspace.leech_mod2_rank", "polarization of the mod-2 Leech form is nondegenerate",
      [](CheckContext& c) { return integer("24", gf2::polarize(c.q24()).rank()); });

  // Singular-space census.
  add("fusion.s_dim", "the maximal totally singular subspace S of the triple label space",
      [](CheckContext& c) { return integer("15", c.S().space.dim()); });
  add("fusion.weight2_case1", "weight-2 elements of S with one weight-2 component",
      [](CheckContext& c) { return integer("93", fusion::classify_weight2(c.triple(), c.S()).case1); });
  add("fusion.weight2_case2", "weight-2 elements of S with all components of weight 1/2 or 1",
      [](CheckContext& c) { return integer("23808", fusion::classify_weight2(c.triple(), c.S()).case2); });
  add("fusion.dim_weight2", "dimension of the weight-2 space of the simple current extension",
      [](CheckContext& c) { return integer("196884", fusion::dim_weight_space(c.triple(), c.S(), 4)); });
  add("fusion.dim_weight1", "vanishing of the weight-1 space",
      [](CheckContext& c) { return integer("0", fusion::dim_weight_space(c.triple(), c.S(), 2)); });
  add("fusion.dim_weight0", "the vacuum space is one-dimensional",
      [](CheckContext& c) { return integer("1", fusion::dim_weight_space(c.triple(), c.S(), 0)); });
  add("fusion.trace_z", "trace of the involution z on the weight-2 space", [](CheckContext& c) {
    const fusion::SignCharacter z(c.triple(), c.m());
    return integer("276", fusion::trace_on_weight_space(c.triple(), c.S(), z, 4));
  });
  add("fusion.twisted_dim_weight1", "weight-1 space of the twisted extension is 24-dimensional",
      [](CheckContext& c) { return integer("24", fusion::dim_weight_space(c.triple(), c.tilde(), 2)); });
  add("fusion.appendix_signs_phi", "sector sign +1 for every x' in Phi", [](CheckContext& c) {
    const auto& t = c.triple();
    std::uint64_t plus = 0, total = 0;
    t.base().phi().for_each_element([&](std::uint64_t x) {
      ++total;
      plus += fusion::appendix_sector_sign(t, fusion::TripleSpace::pack(x, 0, 0), c.m()) == 1;
    });
    return text("32 of 32", std::to_string(plus) + " of " + std::to_string(total));
  });
  add("fusion.appendix_signs_psi", "sector sign -1 for every y in Psi with <x, y> = 1", [](CheckContext& c) {
    const auto& t = c.triple();
    const std::uint64_t x = t.base().designated_x();
    std::uint64_t minus = 0, total = 0;
    t.base().psi().for_each_element([&](std::uint64_t y) {
      if (!t.base().b()(x, y)) return;
      ++total;
      minus += fusion::appendix_sector_sign(t, fusion::TripleSpace::pack(y, 0, 0), c.m()) == -1;
    });
    return text("16 of 16", std::to_string(minus) + " of " + std::to_string(total));
  });

  // Lattices.
  add("lattice.e8_roots", "roots of E8",
      [](CheckContext& c) { return integer("240", lattice::shells(c.e8(), 2).count); });
  add("lattice.ee8_det", "determinant of EE8", [](CheckContext& c) { return integer("256", c.ee8().det()); });
  add("lattice.ee8_min", "minimal vectors of EE8",
      [](CheckContext& c) { return integer("240", lattice::shells(c.ee8(), 4).count); });
  add("lattice.bw16_det", "determinant of BW16", [](CheckContext& c) { return integer("256", c.bw16().det()); });
  add("lattice.bw16_discriminant", "discriminant group of BW16",
      [](CheckContext& c) { return text("(Z/2)^8", abelian_invariants(lattice::discriminant_group(c.bw16()))); });
  add("lattice.bw16_norm4", "minimal vectors of BW16",
      [](CheckContext& c) { return integer("4320", lattice::shells(c.bw16(), 4).count); });
  add("lattice.bw16_glue_index", "index of EE8 + EE8 in the glued lattice BW16", [](CheckContext& c) {
    const lattice::IntegerLattice& ee8 = c.ee8();
    lattice::IntMatrix rows;
    for (const auto& b : ee8.basis()) {
      std::vector<std::int64_t> v(16, 0), w(16, 0);
      std::copy(b.begin(), b.end(), v.begin());
      std::copy(b.begin(), b.end(), w.begin() + 8);
      rows.push_back(v);
      rows.push_back(w);
    }
    const lattice::SublatticeIndex idx = lattice::sublattice_index(c.bw16(), rows);
    return integer("16", idx.index, "quotient " + abelian_invariants(idx.quotient));
  });
  add("lattice.leech_det", "the Leech lattice is unimodular",
      [](CheckContext& c) { return integer("1", c.leech().det()); });
  add("lattice.leech_norm2", "the Leech lattice has no roots",
      [](CheckContext& c) { return integer("0", lattice::leech_shell_count(2, c.threads())); });
  add("lattice.leech_norm4", "norm-4 vectors of the Leech lattice",
      [](CheckContext& c) { return integer("196560", c.leech4().size()); });
  add("lattice.leech_norm6", "norm-6 vectors of the Leech lattice",
      [](CheckContext& c) { return integer("16773120", lattice::leech_shell_count(6, c.threads())); });
  add("lattice.ee8_cubed_index", "index of EE8^3 in the Leech lattice", [](CheckContext& c) {
    const lattice::EE8CubedEmbedding e = lattice::embed_EE8_cubed(c.leech());
    return integer("4096", e.index.index, "quotient " + abelian_invariants(e.index.quotient));
  });
  add("lattice.leech_mod2_class", "Leech lattice mod 2 is a plus-type quadratic space",
      [](CheckContext& c) { return text("(0, plus, 12)", gf2::to_string(gf2::classify(c.q24()))); });
  add("lattice.leech_mod2_norm4_singular", "q vanishes on the image of every norm-4 vector", [](CheckContext& c) {
    std::uint64_t nonsingular = 0;
    for (const auto& v : c.leech4()) nonsingular += c.q24()(lattice::mod2_image(c.leech(), lattice::widen(v)));
    return integer("0", nonsingular, std::to_string(c.leech4().size()) + " vectors tested");
  });

  // Conformal vectors and the extraspecial group.
  add("cvcc.gram_values", "inner products of AA1-type conformal vectors", [](CheckContext& c) {
    const auto& shell = c.leech4();
    const lattice::LeechVector a = shell.front();
    auto find = [&](std::int64_t ip) {
      for (const auto& b : shell)
        if (lattice::leech_inner(a, b) == ip) return b;
      throw std::logic_error("no partner with the requested inner product");
    };
    using cvcc::CvccLabel;
    using cvcc::Sign;
    const CvccLabel p(a, Sign::kPlus);
    const std::string got = monstrous::to_string(cvcc::gram(p, p)) + " " + monstrous::to_string(cvcc::gram(p, p.with_eps(Sign::kMinus))) +
                            " " + monstrous::to_string(cvcc::gram(p, CvccLabel(find(1), Sign::kMinus))) + " " +
                            monstrous::to_string(cvcc::gram(p, CvccLabel(find(2), Sign::kPlus)));
    return CheckOutcome{"1/4 0 1/128 1/32", got, ValueKind::kRational, "same label, opposite sign, <a,b> = 1, <a,b> = 2"};
  });
  add("cvcc.bound_audit", "inner products of distinct conformal vectors lie in [0, 1/12]", [](CheckContext& c) {
    const cvcc::BoundAudit a = cvcc::sampled_bound_audit(c.leech4(), 1'000'000, c.seed, c.threads());
    std::string hist;
    for (const auto& [g, n] : a.histogram) hist += (hist.empty() ? "" : ", ") + monstrous::to_string(g) + ": " + std::to_string(n);
    return text("pairs=1000000 outside=0 unexpected=0",
                "pairs=" + std::to_string(a.pairs) + " outside=" + std::to_string(a.outside_bound) +
                    " unexpected=" + std::to_string(a.unexpected),
                "histogram {" + hist + "}");
  });
  add("cvcc.extraspecial_order", "order of the extraspecial group 2^{1+24}",
      [](CheckContext& c) { return integer("33554432", c.extraspecial().order()); });
  add("cvcc.extraspecial_center", "center of 2^{1+24} has order 2",
      [](CheckContext& c) { return integer("2", c.extraspecial().center_size()); });
  add("cvcc.square_map", "squares in 2^{1+24} recover q on the Leech lattice mod 2", [](CheckContext& c) {
    const auto& g = c.extraspecial();
    std::uint64_t bad = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << 24); ++v)
      bad += g.square({0, v}) != cvcc::ExtraspecialElement{c.q24()(v), 0};
    return integer("0", bad, "mismatches over all 2^24 vectors");
  });
  add("cvcc.commutator_map", "commutators in 2^{1+24} recover the polarization", [](CheckContext& c) {
    const auto& g = c.extraspecial();
    const auto& b = g.polarization();
    std::uint64_t bad = 0;
    for (int i = 0; i < 24; ++i)
      for (int j = 0; j < 24; ++j) {
        const std::uint64_t u = std::uint64_t{1} << i, v = std::uint64_t{1} << j;
        bad += g.commutator({0, u}, {0, v}) != cvcc::ExtraspecialElement{b(u, v), 0};
      }
    std::mt19937_64 rng(c.seed);
    const std::uint64_t mask = (std::uint64_t{1} << 24) - 1;
    for (int k = 0; k < 100000; ++k) {
      const std::uint64_t u = rng() & mask, v = rng() & mask;
      bad += g.commutator({static_cast<int>(rng() & 1), u}, {0, v}) != cvcc::ExtraspecialElement{b(u, v), 0};
    }
    return integer("0", bad, "mismatches over basis pairs and 10^5 sampled pairs");
  });
  add("cvcc.singular_count", "vectors with q = 0 in the Leech lattice mod 2, zero included",
      [](CheckContext& c) { return integer("8390656", gf2::count_singular(c.q24()) + 1, "2^23 + 2^11"); });
  add("cvcc.lift_consistency", "Miyamoto involutions lift to 2^{1+24} compatibly with conjugation",
      [](CheckContext& c) {
        const auto& g = c.extraspecial();
        const auto& shell = c.leech4();
        std::mt19937_64 rng(c.seed);
        std::uniform_int_distribution<std::size_t> pick(0, shell.size() - 1);
        std::uint64_t bad = 0;
        using cvcc::CvccLabel;
        using cvcc::Sign;
        for (int k = 0; k < 10000; ++k) {
          const CvccLabel x(shell[pick(rng)], (rng() & 1) ? Sign::kPlus : Sign::kMinus);
          const CvccLabel y(shell[pick(rng)], (rng() & 1) ? Sign::kPlus : Sign::kMinus);
          const auto lx = cvcc::lift(c.leech(), x), ly = cvcc::lift(c.leech(), y);
          bad += g.multiply(lx, cvcc::lift(c.leech(), x.with_eps(cvcc::flip(x.eps())))) !=
                 cvcc::ExtraspecialGroup::central();
          bad += g.commutator(lx, ly) != cvcc::ExtraspecialElement{cvcc::commutator_value(x, y), 0};
          bad += g.multiply(g.multiply(lx, ly), g.inverse(lx)) != cvcc::lift(c.leech(), cvcc::conjugate(x, y));
        }
        return integer("0", bad, "mismatches over 10^4 sampled pairs");
      });

  // Group orders.
  add("orders.l5_2", "order of L_5(2) as a composition factor", [](CheckContext&) {
    return integer("9999360", order_psl(5, 2), "closed formula for |L_n(q)|");
  });
  add("orders.sym3", "order of Sym_3", [](CheckContext&) { return shape_check("Sym_3", "6"); });
  add("orders.omega_plus_10_2", "order of Omega^+(10,2)", [](CheckContext&) {
    return integer("23499295948800", order_omega_plus_even(5, 2), "closed formula for |Omega^+(2m,q)|");
  });
  add("orders.co1", "order of Co_1 from its prime factorization", [](CheckContext&) {
    const OrderExpression e =
        OrderExpression::from_factors({{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}});
    return integer("4157776806543360000", e.decimal, e.factor_string());
  });
  add("orders.o_plus_10_2_chain", "|O^+(10,2)| from a stabilizer chain",
      [](CheckContext& c) { return integer("46998591897600", gf2::group_order(c.group10())); });
  add("orders.o_plus_10_2_formula", "|O^+(10,2)| from the closed formula",
      [](CheckContext&) { return integer("46998591897600", order_orthogonal_plus_even(5, 2)); });
  add("orders.o_plus_10_2_mts", "|O^+(10,2)| as #MTS times |2^10:L_5(2)|", [](CheckContext& c) {
    return integer("46998591897600", BigInt(c.mts10().size()) * 1024 * order_psl(5, 2));
  });
  add("orders.stabilizer_s", "stabilizer of S in Aut(U^3), shape 2^{20}:(L_5(2) x Sym_3)",
      [](CheckContext&) { return shape_check("2^{20}:(L_5(2)\xC3\x97Sym_3)", "62910533468160"); });
  add("orders.stabilizer_s_l2_5_reading", "stabilizer of S read with L_2(5) in place of L_5(2)",
      [](CheckContext&) {
        CheckOutcome o = shape_check("2^{20}:(L_2(5)\xC3\x97Sym_3)", "377487360");
        const BigInt trio = evaluate_shape("2^{15}(2^{20}:(L_5(2)\xC3\x97Sym_3))").decimal;
        const BigInt implied = evaluate_shape("2^{15}(2^{20}:(L_2(5)\xC3\x97Sym_3))").decimal;
        o.detail += implied == trio ? "; consistent with the normalizer" : "; flagged: inconsistent with the normalizer";
        return o;
      });
  add("orders.normalizer_trio", "normalizer of S* in Aut(V), shape 2^{15}(2^{20}:(L_5(2) x Sym_3))",
      [](CheckContext&) { return shape_check("2^{15}(2^{20}:(L_5(2)\xC3\x97Sym_3))", "2061452360684666880"); });
  add("orders.normalizer_quotient", "normalizer of (S/S_Phi)*, shape 2^5(2^10(2^20:(L_5(2) x Sym_3)))",
      [](CheckContext&) {
        return shape_check("2^{5}(2^{10}(2^{20}:(L_5(2)\xC3\x97Sym_3)))", "2061452360684666880");
      });
  add("orders.normalizer_bar_s", "normalizer of the quotient S/S_1, shape 2^{10}(2^{16} Omega^+(10,2))",
      [](CheckContext&) { return shape_check("2^{10}(2^{16} Omega^+(10,2))", "1577011055923770163200"); });
  add("orders.centralizer_z", "centralizer of z, shape 2^{1+24}Co_1",
      [](CheckContext&) { return shape_check("2^{1+24}Co_1", "139511839126336328171520000"); });
  add("orders.centralizer_z_alt", "centralizer of z, shape 2.2^{24}Co_1",
      [](CheckContext&) { return shape_check("2\xC2\xB7" "2^{24}Co_1", "139511839126336328171520000"); });
  add("orders.aut_leech_plus", "Aut(V_Leech^+), shape 2^{24}Co_1",
      [](CheckContext&) { return shape_check("2^{24}Co_1", "69755919563168164085760000"); });
  add("orders.monster", "order of the Monster from its prime powers", [](CheckContext&) {
    const OrderExpression e = OrderExpression::from_factors(monster_factors(false));
    const bool ok = e.consistent() && e.factors_prime();
    return integer("808017424794512875886459904961710757005754368000000000",
                   ok ? e.decimal : BigInt(0), e.factor_string());
  });
  add("orders.monster_digits", "decimal length of the Monster order", [](CheckContext&) {
    return integer("54", OrderExpression::from_factors(monster_factors(false)).decimal.str().size());
  });
  add("orders.monster_39_flagged", "variant order string with 39 in place of 29", [](CheckContext&) {
    const OrderExpression e = OrderExpression::from_factors(monster_factors(true));
    std::string verdict = "accepted";
    if (!e.factors_prime()) {
      verdict = "flagged: composite bases";
      for (const auto& [p, k] : e.factors)
        if (!is_prime(p)) verdict += " " + std::to_string(p) + " = " + OrderExpression::from_factors(factorize(p)).factor_string();
    }
    return text("flagged: composite bases 39 = 3 * 13", verdict, "decimal " + e.decimal.str());
  });
  return r;
}

}  // namespace

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> r = build_registry();
  return r;
}

Report run_checks(const RunOptions& opts) {
  std::vector<const CheckSpec*> selected;
  for (const CheckSpec& s : registry())
    if (glob_match(opts.filter, s.id)) selected.push_back(&s);
  if (selected.empty()) throw UnknownCheck("no check matches \"" + opts.filter + "\"");

  Report report;
  report.seed = opts.seed;
  report.out_of_scope = out_of_scope_claims();
  report.checks.resize(selected.size());
  CheckContext shared(opts.threads);

  auto run_one = [&](std::size_t i) {
    const CheckSpec& spec = *selected[i];
    CheckResult& out = report.checks[i];
    out.id = spec.id;
    out.paper_ref = spec.paper_ref;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      CheckContext ctx = shared;
      ctx.seed = check_seed(opts.seed, spec.id);
      const CheckOutcome o = spec.run(ctx);
      out.expected = o.expected;
      out.computed = o.computed;
      out.kind = o.kind;
      out.detail = o.detail;
      out.status = o.expected == o.computed ? Status::kPass : Status::kFail;
    } catch (const std::exception& e) {
      out.status = Status::kFail;
      out.detail = std::string("error: ") + e.what();
    }
    out.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(selected.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) run_one(i);
      });
    for (auto& t : pool) t.join();
  }
  return report;
}

}  // namespace monstrous::harness
