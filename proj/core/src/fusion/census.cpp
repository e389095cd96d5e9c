#include "monstrous/fusion/census.hpp"

#include <sstream>

#include <json.hpp>

#include "monstrous/fusion/singular.hpp"

namespace monstrous::fusion {

FusionCensus compute_census(const RSpace& r) {
  const TripleSpace t(r);
  const SingularSpace S = build_S(t);
  const std::uint64_t m = TripleSpace::pack(r.designated_x(), 0, 0);
  const SignCharacter z(t, m);
  const Weight2Census w2 = classify_weight2(t, S);

  FusionCensus c;
  std::ostringstream choice;
  choice << "phi=" << r.phi() << ";psi=" << r.psi();
  c.generator_choice = choice.str();
  c.case1 = w2.case1;
  c.case2 = w2.case2;
  c.dim2 = dim_weight_space(t, S, 4);
  c.trace_z = trace_on_weight_space(t, S, z, 4);
  c.dim1_tilde = dim_weight_space(t, twisted_extension(t, split(S, z).s0, m), 2);
  return c;
}

std::string census_json(const FusionCensus& c) {
  const nlohmann::ordered_json j = {{"generator_choice", c.generator_choice}, {"case1", c.case1},
                                    {"case2", c.case2},  {"dim2", c.dim2},
                                    {"trace_z", c.trace_z}, {"dim1_tilde", c.dim1_tilde}};
  return j.dump();
}

FusionCensus census_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  FusionCensus c;
  c.generator_choice = j.at("generator_choice").get<std::string>();
  c.case1 = j.at("case1").get<std::uint64_t>();
  c.case2 = j.at("case2").get<std::uint64_t>();
  c.dim2 = j.at("dim2").get<std::uint64_t>();
  c.trace_z = j.at("trace_z").get<std::int64_t>();
  c.dim1_tilde = j.at("dim1_tilde").get<std::uint64_t>();
  return c;
}

}  // namespace monstrous::fusion
