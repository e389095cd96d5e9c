#include "monstrous/fusion/singular.hpp"

#include <algorithm>
#include <stdexcept>

#include "monstrous/gf2/mts.hpp"

namespace monstrous::fusion {

std::string to_string(SpaceTag t) {
  switch (t) {
    case SpaceTag::kS: return "S";
    case SpaceTag::kSPhi: return "S_phi";
    case SpaceTag::kS1: return "S_1";
    case SpaceTag::kS0: return "S0";
    case SpaceTag::kSTilde: return "S_tilde";
  }
  return "?";
}

SingularSpace build_S(const TripleSpace& t) {
  gf2::Subspace s(TripleSpace::kDim);
  for (std::uint64_t a : t.base().phi().basis_bits()) {
    s.insert(TripleSpace::pack(a, a, 0));
    s.insert(TripleSpace::pack(0, a, a));
  }
  for (std::uint64_t b : t.base().psi().basis_bits()) s.insert(TripleSpace::pack(b, b, b));
  return {std::move(s), SpaceTag::kS};
}

int min_weight_triple(const TripleSpace& t, const SingularSpace& S, std::uint64_t s) {
  if (!S.space.contains(s)) throw std::invalid_argument("min_weight_triple: element not in the space");
  return t.min_weight2(s);
}

namespace {

void tally(const TripleSpace& t, std::uint64_t s, Weight2Census& c) {
  if (s == 0) return;
  const int w = t.min_weight2(s);
  if (w < 4) {
    ++c.below2;
  } else if (w > 4) {
    ++c.above2;
  } else {
    bool has_zero = false;
    for (int i = 0; i < 3; ++i) has_zero |= TripleSpace::component(s, i) == 0;
    ++(has_zero ? c.case1 : c.case2);
  }
}

}  // namespace

Weight2Census weight2_census(const TripleSpace& t, const gf2::Subspace& s) {
  Weight2Census c;
  s.for_each_element([&](std::uint64_t v) { tally(t, v, c); });
  return c;
}

Weight2Census weight2_census(const TripleSpace& t, const Coset& coset) {
  Weight2Census c;
  coset.for_each_element([&](std::uint64_t v) { tally(t, v, c); });
  return c;
}

Weight2Census classify_weight2(const TripleSpace& t, const SingularSpace& S) {
  if (S.tag != SpaceTag::kS) throw std::invalid_argument("classify_weight2: expects the full space S");
  return weight2_census(t, S.space);
}

std::uint64_t dim_weight_space(const TripleSpace& t, const SingularSpace& S, int weight2) {
  std::uint64_t total = 0;
  S.space.for_each_element([&](std::uint64_t v) { total += t.weight_dim(v, weight2); });
  return total;
}

std::uint64_t dim_weight_space(const TripleSpace& t, const Coset& c, int weight2) {
  std::uint64_t total = 0;
  c.for_each_element([&](std::uint64_t v) { total += t.weight_dim(v, weight2); });
  return total;
}

bool SignCharacter::trivial_on(const gf2::Subspace& s) const noexcept {
  return std::none_of(s.basis_bits().begin(), s.basis_bits().end(), [this](std::uint64_t r) { return exponent(r); });
}

CharacterInfo involution_character(const TripleSpace& t, const SingularSpace& S, std::uint64_t w) {
  SignCharacter chi(t, w);
  const bool trivial = chi.trivial_on(S.space);
  return {std::move(chi), trivial};
}

std::int64_t trace_on_weight_space(const TripleSpace& t, const SingularSpace& S, const SignCharacter& chi,
                                   int weight2) {
  std::int64_t total = 0;
  S.space.for_each_element([&](std::uint64_t v) {
    const auto d = static_cast<std::int64_t>(t.weight_dim(v, weight2));
    total += chi.exponent(v) ? -d : d;
  });
  return total;
}

Split split(const SingularSpace& S, const SignCharacter& chi) {
  std::uint64_t pivot = 0;
  for (std::uint64_t r : S.space.basis_bits())
    if (chi.exponent(r)) {
      pivot = r;
      break;
    }
  if (pivot == 0) throw std::invalid_argument("split: character is trivial on the space");
  gf2::Subspace kernel(S.space.ambient_dim());
  for (std::uint64_t r : S.space.basis_bits())
    if (r != pivot) kernel.insert(chi.exponent(r) ? r ^ pivot : r);
  Split out{{kernel, SpaceTag::kS0}, {pivot, kernel}};
  return out;
}

SingularSpace twisted_extension(const TripleSpace& t, const SingularSpace& s0, std::uint64_t m) {
  if (t.q3()(m) != 0) throw std::invalid_argument("twisted_extension: m is nonsingular");
  for (std::uint64_t r : s0.space.basis_bits())
    if (t.b3()(r, m)) throw std::invalid_argument("twisted_extension: m is not orthogonal to S0");
  gf2::Subspace ext = s0.space;
  ext.insert(m);
  return {std::move(ext), SpaceTag::kSTilde};
}

std::vector<std::uint64_t> elements_of_min_weight(const TripleSpace& t, const gf2::Subspace& s, int weight2) {
  std::vector<std::uint64_t> out;
  s.for_each_element([&](std::uint64_t v) {
    if (t.min_weight2(v) == weight2) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Subquotients subquotients(const TripleSpace& t, const SingularSpace& S) {
  gf2::Subspace s_phi(TripleSpace::kDim), s_1(TripleSpace::kDim);
  for (std::uint64_t a : t.base().phi().basis_bits()) {
    s_phi.insert(TripleSpace::pack(a, a, 0));
    s_phi.insert(TripleSpace::pack(0, a, a));
    s_1.insert(TripleSpace::pack(0, a, a));
  }
  if (!S.space.contains(s_phi) || !s_phi.contains(s_1))
    throw std::logic_error("subquotients: chain S_1 < S_phi < S fails");
  Subquotients out;
  out.index_phi = std::uint64_t{1} << (S.space.dim() - s_phi.dim());
  out.index_1 = std::uint64_t{1} << (S.space.dim() - s_1.dim());
  out.s_phi = {std::move(s_phi), SpaceTag::kSPhi};
  out.s_1 = {std::move(s_1), SpaceTag::kS1};
  return out;
}

int appendix_sector_sign(const TripleSpace& t, std::uint64_t w, std::uint64_t m) { return t.b3()(w, m) ? -1 : 1; }

}  // namespace monstrous::fusion
