#include "monstrous/fusion/space.hpp"

#include <algorithm>
#include <vector>

#include "monstrous/gf2/mts.hpp"

namespace monstrous::fusion {

std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::kZero: return "zero";
    case ElementClass::kSingular: return "singular";
    case ElementClass::kNonsingular: return "nonsingular";
  }
  return "?";
}

std::optional<std::uint64_t> ModuleClassProfile::dim_at(int weight2) const {
  if (weight2 < min_weight2) return 0;
  if (auto it = dims.find(weight2); it != dims.end()) return it->second;
  return std::nullopt;
}

ModuleClassProfile ModuleClassProfile::zero_class() { return {0, {{0, 1}, {1, 0}, {2, 0}, {3, 0}, {4, 156}}}; }
ModuleClassProfile ModuleClassProfile::singular_class() { return {2, {{2, 8}}}; }
ModuleClassProfile ModuleClassProfile::nonsingular_class() { return {1, {{1, 1}}}; }

RSpace RSpace::standard() {
  std::vector<std::uint64_t> even, odd;
  for (int i = 0; i < 5; ++i) {
    even.push_back(std::uint64_t{1} << (2 * i));
    odd.push_back(std::uint64_t{1} << (2 * i + 1));
  }
  return RSpace(gf2::QuadraticForm::hyperbolic(5), gf2::Subspace::span(10, even), gf2::Subspace::span(10, odd));
}

RSpace::RSpace(gf2::QuadraticForm q, gf2::Subspace phi, gf2::Subspace psi)
    : q_(std::move(q)), b_(gf2::polarize(q_)), phi_(std::move(phi)), psi_(std::move(psi)) {
  if (q_.dim() != 10) throw std::invalid_argument("RSpace: form must have dimension 10");
  if (gf2::classify(q_) != gf2::FormClass{0, gf2::SignType::kPlus, 5})
    throw std::invalid_argument("RSpace: form is not nondegenerate of plus type");
  if (phi_.ambient_dim() != 10 || psi_.ambient_dim() != 10 || phi_.dim() != 5 || psi_.dim() != 5)
    throw std::invalid_argument("RSpace: phi and psi must be 5-dimensional subspaces of F2^10");
  if (!gf2::is_totally_singular(phi_, q_) || !gf2::is_totally_singular(psi_, q_))
    throw std::invalid_argument("RSpace: phi and psi must be totally singular");
  if (phi_.intersect(psi_).dim() != 0) throw std::invalid_argument("RSpace: phi and psi must intersect trivially");
  profiles_ = {ModuleClassProfile::zero_class(), ModuleClassProfile::singular_class(),
               ModuleClassProfile::nonsingular_class()};
}

std::uint64_t RSpace::designated_x() const { return phi_.basis_bits().back(); }

std::uint64_t RSpace::designated_y() const {
  const std::uint64_t x = designated_x();
  std::uint64_t best = 0;
  psi_.for_each_element([&](std::uint64_t y) {
    if (b_(x, y) && (best == 0 || y < best)) best = y;
  });
  return best;
}

namespace {

gf2::QuadraticForm triple_form(const gf2::QuadraticForm& q) {
  return q.direct_sum(q).direct_sum(q);
}

}  // namespace

TripleSpace::TripleSpace(RSpace base)
    : base_(std::move(base)), q3_(triple_form(base_.q())), b3_(gf2::polarize(q3_)) {}

int TripleSpace::min_weight2(std::uint64_t t) const noexcept {
  int w = 0;
  for (int i = 0; i < 3; ++i) w += base_.profile(base_.class_of(component(t, i))).min_weight2;
  return w;
}

std::uint64_t TripleSpace::weight_dim(std::uint64_t t, int weight2) const {
  const ModuleClassProfile* p[3];
  for (int i = 0; i < 3; ++i) p[i] = &base_.profile(base_.class_of(component(t, i)));
  std::uint64_t total = 0;
  for (int w0 = 0; w0 <= weight2; ++w0) {
    for (int w1 = 0; w0 + w1 <= weight2; ++w1) {
      const std::optional<std::uint64_t> d[3] = {p[0]->dim_at(w0), p[1]->dim_at(w1), p[2]->dim_at(weight2 - w0 - w1)};
      if (std::any_of(std::begin(d), std::end(d), [](const auto& x) { return x && *x == 0; })) continue;
      if (!d[0] || !d[1] || !d[2])
        throw InsufficientProfileData("weight_dim: unknown graded dimension needed with nonzero cofactor");
      total += *d[0] * *d[1] * *d[2];
    }
  }
  return total;
}

}  // namespace monstrous::fusion
