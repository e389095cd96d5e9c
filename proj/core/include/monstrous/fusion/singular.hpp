#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "monstrous/fusion/space.hpp"

namespace monstrous::fusion {

enum class SpaceTag { kS, kSPhi, kS1, kS0, kSTilde };

std::string to_string(SpaceTag t);

struct SingularSpace {
  gf2::Subspace space;
  SpaceTag tag = SpaceTag::kS;
};

/// rep + sub, the nontrivial coset left over by split.
struct Coset {
  std::uint64_t rep = 0;
  gf2::Subspace sub;

  std::uint64_t size() const noexcept { return sub.size(); }
  bool contains(std::uint64_t v) const noexcept { return sub.contains(v ^ rep); }
  void for_each_element(const std::function<void(std::uint64_t)>& f) const {
    sub.for_each_element([&](std::uint64_t v) { f(v ^ rep); });
  }
};

/// span{(a,a,0), (0,a,a) : a in phi} + span{(b,b,b) : b in psi}.
SingularSpace build_S(const TripleSpace& t);

/// Throws std::invalid_argument when s is not in S.
int min_weight_triple(const TripleSpace& t, const SingularSpace& S, std::uint64_t s);

/// Weight-2 elements split by shape: case 1 has a zero component (the
/// permutations of (a,a,0)), case 2 has all three components nonzero.
struct Weight2Census {
  std::uint64_t case1 = 0;
  std::uint64_t case2 = 0;
  std::uint64_t above2 = 0;  // nonzero elements of minimal weight > 2
  std::uint64_t below2 = 0;  // nonzero elements of minimal weight < 2
};

Weight2Census weight2_census(const TripleSpace& t, const gf2::Subspace& s);
Weight2Census weight2_census(const TripleSpace& t, const Coset& c);
/// The census of the full S; any other tag is rejected.
Weight2Census classify_weight2(const TripleSpace& t, const SingularSpace& S);

/// Sum over the elements of the graded dimension at the doubled weight.
std::uint64_t dim_weight_space(const TripleSpace& t, const SingularSpace& S, int weight2);
std::uint64_t dim_weight_space(const TripleSpace& t, const Coset& c, int weight2);

/// s -> (-1)^{<s, w>} under the polarization of q3.
class SignCharacter {
 public:
  SignCharacter(const TripleSpace& t, std::uint64_t w) : w_(w), b3_(t.b3()) {}

  std::uint64_t w() const noexcept { return w_; }
  int exponent(std::uint64_t s) const noexcept { return b3_(s, w_); }
  int operator()(std::uint64_t s) const noexcept { return exponent(s) ? -1 : 1; }
  bool trivial_on(const gf2::Subspace& s) const noexcept;

 private:
  std::uint64_t w_;
  gf2::BilinearForm b3_;
};

struct CharacterInfo {
  SignCharacter chi;
  bool trivial = false;  // flagged: <., w> vanishes on S
};

CharacterInfo involution_character(const TripleSpace& t, const SingularSpace& S, std::uint64_t w);

/// Sum over S of chi(s) times the graded dimension at the doubled weight.
std::int64_t trace_on_weight_space(const TripleSpace& t, const SingularSpace& S, const SignCharacter& chi,
                                   int weight2);

struct Split {
  SingularSpace s0;
  Coset s1;
};

/// Kernel and nontrivial coset of chi on S; throws std::invalid_argument
/// when chi is trivial on S.
Split split(const SingularSpace& S, const SignCharacter& chi);

/// S0 + m; m must be singular and orthogonal to S0.
SingularSpace twisted_extension(const TripleSpace& t, const SingularSpace& s0, std::uint64_t m);

/// Elements of s whose minimal weight equals the doubled value, sorted.
std::vector<std::uint64_t> elements_of_min_weight(const TripleSpace& t, const gf2::Subspace& s, int weight2);

struct Subquotients {
  SingularSpace s_phi;
  SingularSpace s_1;
  std::uint64_t index_phi = 0;  // |S / S_phi|
  std::uint64_t index_1 = 0;    // |S / S_1|
};

Subquotients subquotients(const TripleSpace& t, const SingularSpace& S);

/// (-1)^{<w, m>}: the sign by which the involution attached to w acts on the
/// sector labelled m.
int appendix_sector_sign(const TripleSpace& t, std::uint64_t w, std::uint64_t m);

}  // namespace monstrous::fusion
