#pragma once

#include <optional>
#include <vector>

#include "topo/abelian.hpp"
#include "topo/int_matrix.hpp"

namespace topo {

/// Bounded chain complex of finitely generated free modules. boundary[n]
/// maps degree n to degree n-1; boundary[0] is the empty map.
struct ChainComplex {
  std::vector<int> ranks;
  std::vector<IntMatrix> boundary;

  int top() const { return static_cast<int>(ranks.size()) - 1; }
  int rank(int n) const {
    return (n < 0 || n > top()) ? 0 : ranks[static_cast<size_t>(n)];
  }
  /// Boundary in degree n, a rank(n-1) x rank(n) matrix (zero outside range).
  IntMatrix d(int n) const {
    if (n >= 1 && n <= top()) return boundary[static_cast<size_t>(n)];
    return IntMatrix(rank(n - 1), rank(n));
  }
  /// Degree of the first failure of dd=0, if any.
  std::optional<int> first_broken_degree() const;
};

enum class Ring { Z, Q, Zmod };

struct CoeffSpec {
  Ring ring = Ring::Z;
  Int modulus = 0;
};

/// H_n(C) with the requested coefficients. Throws "rejected" if dd != 0.
FGAbelianGroup homology(const ChainComplex& c, int n, const CoeffSpec& coeffs = {});

std::vector<FGAbelianGroup> homology_range(const ChainComplex& c, int up_to,
                                           const CoeffSpec& coeffs = {});

/// Degreewise map of complexes; mats[n] has shape rank_B(n) x rank_A(n).
struct ChainMap {
  std::vector<IntMatrix> mats;
  IntMatrix at(int n, const ChainComplex& a, const ChainComplex& b) const {
    if (n >= 0 && n < static_cast<int>(mats.size())) return mats[static_cast<size_t>(n)];
    return IntMatrix(b.rank(n), a.rank(n));
  }
};

bool is_chain_map(const ChainComplex& a, const ChainComplex& b, const ChainMap& f);

struct HomologyMap {
  FGAbelianGroup source, target;
  /// Matrix in the canonical (invariant-factor) coordinates of both sides.
  IntMatrix matrix;
  bool iso = false;
};

/// Induced map H_n(A) -> H_n(B) of a chain map, with an isomorphism flag.
/// Throws "rejected" when f is not a chain map.
HomologyMap induced_map_on_homology(const ChainComplex& a, const ChainComplex& b,
                                    const ChainMap& f, int n);

}  // namespace topo
