#pragma once

#include <optional>
#include <vector>

#include "topo/int_matrix.hpp"

namespace topo {

struct SmithOptions {
  bool want_u = false;
  bool want_v = false;
  bool want_uinv = false;
  bool want_vinv = false;
};

/// U * M * V = D with U, V unimodular and D diagonal satisfying the
/// divisibility chain d1 | d2 | ... (all d_i > 0).
struct SmithForm {
  IntMatrix d;
  std::vector<Int> diag;  // nonzero diagonal entries, in order
  int rank = 0;
  std::optional<IntMatrix> u, v, uinv, vinv;
};

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions opts = {});

int rank_of(const IntMatrix& m);

/// Exact determinant (Bareiss). Square input required.
Int determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Exact inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace topo
