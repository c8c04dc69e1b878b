#pragma once

#include <string>
#include <vector>

#include "topo/group.hpp"
#include "topo/json_util.hpp"
#include "topo/word.hpp"

namespace topo {

/// Completed coset table: a transitive permutation action of the generators
/// under which every relator acts trivially. Coset 0 is the subgroup itself.
struct CosetTable {
  std::vector<std::string> gen_names;
  std::vector<std::vector<int>> fwd;  // per generator: c -> c*g
  std::vector<std::vector<int>> bwd;  // per generator: c -> c*g^-1

  int size() const { return fwd.empty() ? 1 : static_cast<int>(fwd[0].size()); }
  int gens() const { return static_cast<int>(gen_names.size()); }

  int apply(int c, Letter l) const {
    int g = gen_of(l);
    return is_inverse(l) ? bwd[static_cast<size_t>(g)][static_cast<size_t>(c)]
                         : fwd[static_cast<size_t>(g)][static_cast<size_t>(c)];
  }
  int trace(int c, const Word& w) const {
    for (Letter l : w) c = apply(c, l);
    return c;
  }

  /// Shortest-word representatives via breadth-first search from coset 0.
  std::vector<Word> representatives() const;

  /// Issues found against the given presentation (empty means valid).
  std::vector<std::string> validate(const GroupPresentation& p) const;

  Json to_json() const;
  static CosetTable from_json(const Json& j);
};

struct EnumerationResult {
  bool completed = false;
  CosetTable table;
  int cosets_defined = 0;  // total ever defined, including collapsed ones
};

/// HLT coset enumeration over the trivial subgroup, with a lookahead pass
/// when the live-coset bound is reached. Deterministic: cosets are scanned
/// in order, relators in presentation order.
EnumerationResult todd_coxeter(const GroupPresentation& p, int max_cosets);

/// Free reduction, plus evaluation to a coset index when a table is given.
Word word_reduce(const Word& w);
int word_reduce(const Word& w, const CosetTable& t);

/// Multiplication table of the enumerated group (table over the trivial
/// subgroup required, so cosets are exactly the group elements).
struct FiniteGroupTable {
  int n = 0;
  std::vector<std::vector<int>> mul;  // mul[i][j] = i*j
  std::vector<int> inv;
  int identity() const { return 0; }
};

FiniteGroupTable group_table(const CosetTable& t);

}  // namespace topo
