#pragma once

#include "topo/corpus.hpp"
#include "topo/models.hpp"

namespace topo::testing {

inline GroupPresentation pres(const std::vector<std::string>& gens,
                              const std::vector<std::string>& relators) {
  GroupPresentation p;
  p.gens = gens;
  for (const auto& r : relators) p.relators.push_back(parse_word(r, gens));
  return p;
}

/// 3-truncation of the nerve of Z/2: one nondegenerate cell per dimension,
/// with a genuinely nondegenerate 3-cell (faces d0 = d3 = the triangle,
/// d1, d2 degenerate). Exercises dimension-3 paths that the corpus proper
/// does not reach.
inline ReducedSimplicialSet nerve_z2_truncated() {
  SimplicialSetData s;
  s.by_dim = {{"v"}, {"a"}, {"t"}, {"u"}};
  DegenerateRef v{{}, "v"};
  s.faces["a"] = {v, v};
  s.faces["t"] = {DegenerateRef{{}, "a"}, DegenerateRef{{0}, "v"}, DegenerateRef{{}, "a"}};
  s.faces["u"] = {DegenerateRef{{}, "t"}, DegenerateRef{{0}, "a"}, DegenerateRef{{1}, "a"},
                  DegenerateRef{{}, "t"}};
  return make_reduced(std::move(s));
}

}  // namespace topo::testing
