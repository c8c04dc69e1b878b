#pragma once

#include <functional>

#include "topo/models.hpp"

namespace topo {

struct CorpusEntry {
  std::string name;
  std::string description;
  std::function<ReducedSimplicialSet()> build;
};

/// Builtin spaces: delta1, s2, rp2, p3, torus, binary-icosahedral, higman.
/// higman is the documented hard case on which every implemented invariant
/// is inconclusive.
const std::vector<CorpusEntry>& corpus();

ReducedSimplicialSet corpus_space(const std::string& name);

/// "identity:NAME" or "collapse:NAME" (collapse onto the one-point space).
SimplicialMap corpus_map(const std::string& spec);

/// Map file: {"version":"smapv1","source":S,"target":T,"assign":{id:ref}}
/// where S and T are inline ssetv1 objects or corpus names.
SimplicialMap load_map_json(const Json& j);

}  // namespace topo
