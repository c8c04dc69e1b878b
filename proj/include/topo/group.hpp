#pragma once

#include <string>
#include <vector>

#include "topo/abelian.hpp"
#include "topo/json_util.hpp"
#include "topo/word.hpp"

namespace topo {

struct GroupPresentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;  // reduced, nonempty

  int gen_index(const std::string& name) const;
  void add_relator(Word w);  // reduces; drops empty words

  Json to_json() const;
  static GroupPresentation from_json(const Json& j);
};

/// Smith form of the exponent-sum matrix of the relators.
FGAbelianGroup abelianization(const GroupPresentation& p);

}  // namespace topo
