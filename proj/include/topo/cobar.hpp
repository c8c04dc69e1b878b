#pragma once

#include <map>
#include <string>
#include <vector>

#include "topo/coalgebra.hpp"
#include "topo/group.hpp"

namespace topo {

/// Noncommutative polynomial over Z in indexed letters; terms are kept
/// sorted by word with no zero coefficients.
struct NCTerm {
  Int coeff;
  std::vector<int> word;
  bool operator==(const NCTerm& rhs) const = default;
};
using NCPoly = std::vector<NCTerm>;

NCPoly nc_normalize(std::vector<NCTerm> terms);
NCPoly nc_add(const NCPoly& a, const NCPoly& b);
NCPoly nc_scale(const NCPoly& a, const Int& c);
NCPoly nc_mul(const NCPoly& a, const NCPoly& b);
std::string nc_str(const NCPoly& p, const std::vector<std::string>& names);

/// Cobar construction of a connected dg coalgebra, truncated to words of
/// bounded length and tensor degree. Letters are the shifted positive-degree
/// basis elements, with degree = dimension - 1. The differential on a letter
/// [c] is -[dc] + sum_{p} (-1)^p [front_p c | back_q c]; it extends to words
/// as a derivation and is exposed both as polynomials (exact, global) and as
/// matrices on the truncated basis.
struct CobarAlgebra {
  std::vector<int> letter_dim;
  std::vector<std::string> letter_name;
  std::vector<NCPoly> d_letter;
  int max_deg = 0;
  int max_len = 0;

  std::vector<std::vector<std::vector<int>>> basis;    // per degree
  std::vector<std::map<std::vector<int>, int>> index;  // word -> basis position
  std::vector<IntMatrix> d_mat;                        // degree d -> d-1
  std::vector<char> window_closed;  // D of every degree-d basis word stays in window
  bool basis_truncated = false;     // enumeration hit the size cap

  int letter_degree(int l) const { return letter_dim[static_cast<size_t>(l)] - 1; }
  int word_degree(const std::vector<int>& w) const;
  NCPoly d_word(const std::vector<int>& w) const;
  NCPoly d_poly(const NCPoly& p) const;
  int letter_for(const std::string& name) const;
};

struct CobarOptions {
  int max_deg = 4;
  int max_len = 6;
  size_t basis_cap = 200000;  // per-run guard on basis enumeration
};

/// Throws "rejected" when C is not connected.
CobarAlgebra cobar(const DgCoalgebra& c, const CobarOptions& opts = {});

/// D^2 = 0 on every generator; since D^2 of an odd derivation is again a
/// derivation, this is equivalent to D^2 = 0 on the whole tensor algebra.
bool d_squared_vanishes_on_generators(const CobarAlgebra& a, std::string* witness = nullptr);

/// Degree-0 ring presentation of the cobar construction: one generator per
/// nondegenerate 1-simplex, one relation per nondegenerate 2-simplex (the
/// degree-0 component of D on its shift).
struct RingPresentation {
  std::vector<std::string> generators;
  std::vector<NCPoly> relations;
  Json to_json() const;
};

RingPresentation h0_relations(const DgCoalgebra& c);

/// Group completion of the degree-0 presentation: generators the
/// nondegenerate 1-simplices, a relation g_{d1} = g_{d2} g_{d0} per
/// nondegenerate 2-simplex, degenerate faces contributing the identity.
GroupPresentation pi1_presentation(const ReducedSimplicialSet& s);

/// Coproduct on degree-0 cobar classes: the multiplicative extension of
/// x -> x(x)x + x(x)1 + 1(x)x. Words are over generator indices.
using TensorPoly = std::map<std::pair<std::vector<int>, std::vector<int>>, Int>;

TensorPoly h0_coproduct_word(const std::vector<int>& w);
TensorPoly h0_coproduct(const NCPoly& p);
/// Counit: 1 on the empty word, 0 on every generator, multiplicatively.
Int h0_counit(const NCPoly& p);

bool h0_coproduct_coassociative(const std::vector<int>& w);
bool h0_coproduct_counital(const std::vector<int>& w);

}  // namespace topo
