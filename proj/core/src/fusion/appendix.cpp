#include "monstrous/fusion/appendix.hpp"

#include <algorithm>
#include <stdexcept>

namespace monstrous::fusion {

int appendix_form_eval(const lattice::IntegerLattice& ee8, const std::vector<std::int64_t>& alpha,
                       const std::vector<std::int64_t>& beta) {
  if (!ee8.contains(alpha) || !ee8.contains(beta))
    throw std::invalid_argument("appendix_form_eval: vector not in EE8");
  const std::int64_t ip = ee8.inner(alpha, beta);  // even on EE8
  if (ip % 2 != 0) throw std::logic_error("appendix_form_eval: odd inner product, lattice is not EE8");
  return static_cast<int>(((ip / 2) % 2 + 2) % 2);
}

bool ModuleLabel::is_minus() const {
  return kind == Kind::kCoset && eps == -1 && std::all_of(beta.begin(), beta.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<int> label_pairing(const lattice::IntegerLattice& ee8, const ModuleLabel& a, const ModuleLabel& b) {
  using K = ModuleLabel::Kind;
  if (a.kind == K::kCoset && b.kind == K::kCoset) return appendix_form_eval(ee8, a.beta, b.beta);
  if ((a.is_minus() && b.kind == K::kTwisted) || (b.is_minus() && a.kind == K::kTwisted)) return 1;
  return std::nullopt;
}

}  // namespace monstrous::fusion
