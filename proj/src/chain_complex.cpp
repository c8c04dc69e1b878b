#include "topo/chain_complex.hpp"

#include "topo/error.hpp"
#include "topo/smith.hpp"

namespace topo {
namespace {

IntMatrix submatrix(const IntMatrix& m, int r0, int r1, int c0, int c1) {
  IntMatrix out(r1 - r0, c1 - c0);
  for (const auto& [k, v] : m.entries()) {
    if (k.first >= r0 && k.first < r1 && k.second >= c0 && k.second < c1)
      out.set(k.first - r0, k.second - c0, v);
  }
  return out;
}

void require_complex(const ChainComplex& c) {
  if (auto broken = c.first_broken_degree())
    fail("rejected", "dd != 0 in degree " + std::to_string(*broken));
  for (int n = 1; n <= c.top(); ++n) {
    const IntMatrix& m = c.boundary[static_cast<size_t>(n)];
    if (m.rows() != c.rank(n - 1) || m.cols() != c.rank(n))
      fail("invalid-input", "boundary shape mismatch in degree " + std::to_string(n));
  }
}

// Kernel-coordinate presentation of H_n: H = Z^k / im(P).
struct Presentation {
  int k = 0;       // kernel rank of d(n)
  int rank_a = 0;  // rank of d(n)
  IntMatrix v_a, vinv_a;
  IntMatrix u_p, uinv_p;
  std::vector<Int> diag_p;
  int rank_p = 0;
  FGAbelianGroup group;
};

Presentation present(const ChainComplex& c, int n) {
  Presentation pr;
  IntMatrix a = c.d(n);
  IntMatrix b = c.d(n + 1);
  SmithForm sa = smith_normal_form(a, {.want_v = true, .want_vinv = true});
  pr.rank_a = sa.rank;
  pr.k = c.rank(n) - sa.rank;
  pr.v_a = *sa.v;
  pr.vinv_a = *sa.vinv;
  IntMatrix p = submatrix(*sa.vinv * b, sa.rank, c.rank(n), 0, b.cols());
  SmithForm sp = smith_normal_form(p, {.want_u = true, .want_uinv = true});
  pr.u_p = *sp.u;
  pr.uinv_p = *sp.uinv;
  pr.diag_p = sp.diag;
  pr.rank_p = sp.rank;
  pr.group.free_rank = pr.k - sp.rank;
  for (const auto& d : sp.diag)
    if (d > 1) pr.group.torsion.push_back(d);
  return pr;
}

}  // namespace

std::optional<int> ChainComplex::first_broken_degree() const {
  for (int n = 2; n <= top(); ++n) {
    if (!(d(n - 1) * d(n)).is_zero()) return n;
  }
  return std::nullopt;
}

FGAbelianGroup homology(const ChainComplex& c, int n, const CoeffSpec& coeffs) {
  require_complex(c);
  if (n < 0 || n > c.top()) return {};
  IntMatrix a = c.d(n);
  IntMatrix b = c.d(n + 1);
  const int cn = c.rank(n);

  if (coeffs.ring == Ring::Z) {
    SmithForm sa = smith_normal_form(a);
    SmithForm sb = smith_normal_form(b);
    FGAbelianGroup h;
    h.free_rank = cn - sa.rank - sb.rank;
    for (const auto& d : sb.diag)
      if (d > 1) h.torsion.push_back(d);
    return h;
  }
  if (coeffs.ring == Ring::Q) {
    SmithForm sa = smith_normal_form(a);
    SmithForm sb = smith_normal_form(b);
    return free_abelian(cn - sa.rank - sb.rank);
  }

  // Z/m: H = L / (im(B) + m Z^cn) with L the preimage lattice of ker(A mod m).
  const Int& m = coeffs.modulus;
  if (m < 2) fail("invalid-input", "modulus must be >= 2");
  SmithForm sa = smith_normal_form(a, {.want_vinv = true});
  IntMatrix mi = IntMatrix::identity(cn).scaled(m);
  IntMatrix y = *sa.vinv * b.augment(mi);
  for (int i = 0; i < sa.rank; ++i) {
    Int s = m / gcd_int(sa.diag[static_cast<size_t>(i)], m);
    if (s == 1) continue;
    for (int j = 0; j < y.cols(); ++j) {
      Int v = y.at(i, j);
      if (v == 0) continue;
      if (v % s != 0) fail("internal", "lattice scaling not integral");
      y.set(i, j, v / s);
    }
  }
  SmithForm sy = smith_normal_form(y);
  FGAbelianGroup h;
  h.free_rank = cn - sy.rank;
  for (const auto& d : sy.diag)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

std::vector<FGAbelianGroup> homology_range(const ChainComplex& c, int up_to,
                                           const CoeffSpec& coeffs) {
  std::vector<FGAbelianGroup> out;
  for (int n = 0; n <= up_to; ++n) out.push_back(homology(c, n, coeffs));
  return out;
}

bool is_chain_map(const ChainComplex& a, const ChainComplex& b, const ChainMap& f) {
  int top = std::max(a.top(), b.top()) + 1;
  for (int n = 0; n <= top; ++n) {
    IntMatrix fn = f.at(n, a, b);
    if (fn.rows() != b.rank(n) || fn.cols() != a.rank(n)) return false;
    if (n == 0) continue;
    IntMatrix lhs = f.at(n - 1, a, b) * a.d(n);
    IntMatrix rhs = b.d(n) * fn;
    if (lhs != rhs) return false;
  }
  return true;
}

HomologyMap induced_map_on_homology(const ChainComplex& a, const ChainComplex& b,
                                    const ChainMap& f, int n) {
  require_complex(a);
  require_complex(b);
  if (!is_chain_map(a, b, f)) fail("rejected", "not a chain map");

  Presentation ps = present(a, n);
  Presentation pt = present(b, n);

  // Map on kernel coordinates, then to invariant-factor coordinates.
  IntMatrix m1 = pt.vinv_a * f.at(n, a, b) * ps.v_a;
  IntMatrix phi = submatrix(m1, pt.rank_a, pt.rank_a + pt.k, ps.rank_a, ps.rank_a + ps.k);
  IntMatrix phi_can = pt.u_p * phi * ps.uinv_p;

  auto keep = [](const Presentation& p) {
    std::vector<int> idx;
    for (int i = 0; i < p.k; ++i) {
      bool trivial = i < p.rank_p && p.diag_p[static_cast<size_t>(i)] == 1;
      if (!trivial) idx.push_back(i);
    }
    return idx;
  };
  std::vector<int> si = keep(ps), ti = keep(pt);
  IntMatrix mat(static_cast<int>(ti.size()), static_cast<int>(si.size()));
  for (size_t i = 0; i < ti.size(); ++i)
    for (size_t j = 0; j < si.size(); ++j) {
      Int v = phi_can.at(ti[i], si[j]);
      // Reduce torsion coordinates into [0, d).
      if (static_cast<int>(i) < static_cast<int>(pt.diag_p.size()) && ti[i] < pt.rank_p) {
        const Int& d = pt.diag_p[static_cast<size_t>(ti[i])];
        v %= d;
        if (v < 0) v += d;
      }
      mat.set(static_cast<int>(i), static_cast<int>(j), v);
    }

  HomologyMap out;
  out.source = ps.group;
  out.target = pt.group;
  out.matrix = mat;

  // Surjectivity in kernel coordinates; for finitely generated abelian
  // groups a surjection between isomorphic groups is an isomorphism.
  bool surjective = true;
  if (pt.k > 0) {
    IntMatrix pmat = submatrix(pt.vinv_a * b.d(n + 1), pt.rank_a, pt.rank_a + pt.k, 0,
                               b.d(n + 1).cols());
    SmithForm s = smith_normal_form(phi.augment(pmat));
    surjective = (s.rank == pt.k);
    for (const auto& d : s.diag)
      if (d != 1) surjective = false;
  }
  out.iso = (ps.group == pt.group) && surjective;
  return out;
}

}  // namespace topo
