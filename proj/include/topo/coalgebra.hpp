#pragma once

#include <string>
#include <vector>

#include "topo/chain_complex.hpp"
#include "topo/sset.hpp"

namespace topo {

/// Connected dg coalgebra presented by matrices. coproduct[n][p] is the
/// component C_n -> C_p (x) C_{n-p}, with the tensor basis ordered
/// lexicographically, left factor major.
struct DgCoalgebra {
  ChainComplex complex;
  std::vector<std::vector<IntMatrix>> coproduct;
  std::vector<std::vector<std::string>> basis_names;

  int top() const { return complex.top(); }
  int rank(int n) const { return complex.rank(n); }
  const IntMatrix& delta(int n, int p) const {
    return coproduct[static_cast<size_t>(n)][static_cast<size_t>(p)];
  }
  int name_index(int n, const std::string& id) const;
};

/// Normalized chains functor: basis the nondegenerate simplices, boundary
/// the alternating face sum with degenerate faces killed, coproduct the
/// front-face/back-face splitting with degenerate factors dropped.
DgCoalgebra normalized_chains(const ReducedSimplicialSet& s);

/// Normalized chain complex of an arbitrary simplicial set (no coproduct,
/// no reducedness requirement); used for covers.
ChainComplex chain_complex_of(const SimplicialSetData& s);

struct CoalgebraIssue {
  std::string law;  // "counit", "coassociativity", "leibniz", "connectedness"
  int n = -1, p = -1, q = -1;
};

struct CoalgebraReport {
  std::vector<CoalgebraIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Exact matrix checks of counit, coassociativity and the Leibniz rule.
CoalgebraReport coalgebra_axioms_check(const DgCoalgebra& c);

/// Chain map induced by a simplicial map; throws "rejected" on invalid maps.
ChainMap induced_chain_map(const SimplicialMap& f);

/// True when f commutes with every coproduct component as well.
bool is_coalgebra_map(const DgCoalgebra& a, const DgCoalgebra& b, const ChainMap& f);

}  // namespace topo
