#pragma once

#include <string>
#include <vector>

#include "topo/int.hpp"
#include "topo/json_util.hpp"

namespace topo {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ..., each d_i >= 2.
struct FGAbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const FGAbelianGroup& rhs) const = default;

  std::string str() const {
    if (trivial()) return "0";
    std::string out;
    if (free_rank == 1)
      out = "Z";
    else if (free_rank > 1)
      out = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion) {
      if (!out.empty()) out += " + ";
      out += "Z/" + d.str();
    }
    return out;
  }

  Json to_json() const {
    Json t = Json::array();
    for (const auto& d : torsion) t.push_back(d.str());
    return Json{{"free_rank", free_rank}, {"torsion", t}, {"pretty", str()}};
  }
};

inline FGAbelianGroup free_abelian(int rank) { return {rank, {}}; }

}  // namespace topo
