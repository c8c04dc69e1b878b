#pragma once

#include <optional>

#include "topo/cobar.hpp"
#include "topo/pi_module.hpp"

namespace topo {

/// Augmented dg algebra on an explicit finite basis. The unit spans the
/// image of the augmentation section; every other basis element lies in the
/// augmentation ideal. Differentials or products that leave a truncation
/// window are recorded as absent rather than approximated.
struct FiniteDgAlgebra {
  std::vector<int> degree;
  std::vector<std::string> name;
  int unit = -1;
  using Combo = std::map<int, Int>;
  std::vector<std::optional<Combo>> diff;
  std::vector<std::vector<std::optional<Combo>>> prod;

  int size() const { return static_cast<int>(degree.size()); }
  bool augmented() const { return unit >= 0 && degree[static_cast<size_t>(unit)] == 0; }
};

/// The truncated cobar construction as a finite dg algebra; products are
/// concatenations, absent when they leave the window.
struct CobarAlgebraView {
  FiniteDgAlgebra algebra;
  std::map<std::vector<int>, int> element_of_word;
};
CobarAlgebraView algebra_from_cobar(const CobarAlgebra& a);

/// Truncated bar construction: words in shifted augmentation-ideal
/// elements, differential -d1 + d2 with the sign exponents
/// eps_i = |a_1| + ... + |a_i| - i + 1. closed[d] records whether every
/// differential needed in degree d stayed inside the window; homology is
/// only reported where the window is closed.
struct BarComplex {
  int max_words = 0;
  int max_deg = 0;
  std::vector<std::vector<std::vector<int>>> basis;    // per degree: words of element ids
  std::vector<std::map<std::vector<int>, int>> index;
  std::vector<IntMatrix> d_mat;
  std::vector<char> closed;

  int degree_of_word(const FiniteDgAlgebra& a, const std::vector<int>& w) const;
};

BarComplex bar(const FiniteDgAlgebra& a, int max_words, int max_deg);

/// Coproduct by word splitting.
TensorPoly bar_coproduct_word(const std::vector<int>& w);

/// Homology of the bar complex in a window-closed degree; empty when the
/// window is not closed at degrees n and n+1.
std::optional<FGAbelianGroup> bar_homology(const BarComplex& b, int n);

/// One-sided bar construction B(A, M) for a module concentrated in degree 0
/// with the action of each algebra element given explicitly (zero for
/// positive-degree elements).
struct OneSidedBar {
  BarComplex words;
  int module_rank = 0;
  ChainComplex complex;        // only degrees where closed
  std::vector<char> closed;
};

OneSidedBar one_sided_bar(const FiniteDgAlgebra& a, const std::vector<IntMatrix>& action,
                          int module_rank, int max_words, int max_deg);

/// Action matrices of cobar elements on a pi-module through psi: a word of
/// edges acts by the product of (edge action - id); anything of positive
/// degree acts by zero.
std::vector<IntMatrix> cobar_action_on_module(const CobarAlgebraView& v, const CobarAlgebra& a,
                                              const PiModule& m,
                                              const std::vector<std::string>& edge_names);

/// rho: C -> B(Omega C), sigma |-> (-1)^{dim+1} sum over vertex splittings
/// of the bar word of one-letter cobar monomials on the parts (splittings
/// with a degenerate part drop out). defined[n] marks degrees where every
/// image word lies inside the bar window.
struct RhoMap {
  std::vector<IntMatrix> mats;  // C_n -> Bar_n
  std::vector<char> defined;
};

RhoMap rho_map(const DgCoalgebra& c, const SimplicialSetData& s, const CobarAlgebra& a,
               const CobarAlgebraView& v, const BarComplex& b);

/// D o rho = rho o d in every degree where both sides are computable;
/// returns false only on a genuine mismatch.
bool rho_chain_map_check(const DgCoalgebra& c, const RhoMap& r, const BarComplex& b,
                         std::string* witness = nullptr);

}  // namespace topo
