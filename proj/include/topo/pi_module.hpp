#pragma once

#include <map>
#include <string>
#include <vector>

#include "topo/coset_table.hpp"
#include "topo/group.hpp"
#include "topo/int_matrix.hpp"

namespace topo {

/// Left module over a group ring, concentrated in degree 0: a free
/// Z-module of finite rank with an invertible matrix per group generator.
struct PiModule {
  int rank = 0;
  std::map<std::string, IntMatrix> action;

  Json to_json() const;
  static PiModule from_json(const Json& j);
};

/// Empty when the module is valid for the presentation: every generator has
/// an action matrix of the right shape, each is invertible over Z, and
/// every relator acts as the identity.
std::vector<std::string> validate_module(const PiModule& m, const GroupPresentation& p);

/// Matrix of a word (letters may be inverses); requires a valid module.
IntMatrix action_of_word(const PiModule& m, const GroupPresentation& p, const Word& w);

/// Z[G] as a left module over itself, from a completed coset table over the
/// trivial subgroup: generator g acts by the permutation c -> row c of g.
PiModule regular_module(const CosetTable& t);

/// Trivial action of every generator of p on Z^rank.
PiModule trivial_module(const GroupPresentation& p, int rank = 1);

}  // namespace topo
