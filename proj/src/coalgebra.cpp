#include "topo/coalgebra.hpp"

#include "topo/error.hpp"

namespace topo {

int DgCoalgebra::name_index(int n, const std::string& id) const {
  const auto& names = basis_names.at(static_cast<size_t>(n));
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == id) return static_cast<int>(i);
  fail("rejected", "unknown basis element '" + id + "' in degree " + std::to_string(n));
}

ChainComplex chain_complex_of(const SimplicialSetData& s) {
  ValidationReport rep = validate(s);
  if (!rep.ok()) fail("rejected", "invalid simplicial set: " + rep.issues.front().what);
  ChainComplex out;
  int top = s.top_dim();
  out.ranks.resize(static_cast<size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) out.ranks[static_cast<size_t>(n)] = s.count(n);
  out.boundary.resize(static_cast<size_t>(top) + 1);
  // Index lookup once; index_of is a linear scan.
  std::map<SimplexId, int> pos;
  for (int n = 0; n <= top; ++n)
    for (size_t i = 0; i < s.by_dim[static_cast<size_t>(n)].size(); ++i)
      pos[s.by_dim[static_cast<size_t>(n)][i]] = static_cast<int>(i);
  for (int n = 1; n <= top; ++n) {
    IntMatrix d(s.count(n - 1), s.count(n));
    for (int j = 0; j < s.count(n); ++j) {
      const SimplexId& id = s.by_dim[static_cast<size_t>(n)][static_cast<size_t>(j)];
      const auto& fs = s.faces.at(id);
      for (int i = 0; i <= n; ++i) {
        if (fs[static_cast<size_t>(i)].degenerate()) continue;
        d.add_at(pos.at(fs[static_cast<size_t>(i)].target), j, i % 2 == 0 ? 1 : -1);
      }
    }
    out.boundary[static_cast<size_t>(n)] = std::move(d);
  }
  return out;
}

DgCoalgebra normalized_chains(const ReducedSimplicialSet& rs) {
  const SimplicialSetData& s = rs.data;

  DgCoalgebra c;
  int top = s.top_dim();
  c.complex = chain_complex_of(s);
  c.basis_names.resize(static_cast<size_t>(top) + 1);
  for (int n = 0; n <= top; ++n)
    c.basis_names[static_cast<size_t>(n)] = s.by_dim[static_cast<size_t>(n)];

  c.coproduct.resize(static_cast<size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    auto& row = c.coproduct[static_cast<size_t>(n)];
    row.reserve(static_cast<size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      IntMatrix m(s.count(p) * s.count(q), s.count(n));
      for (int j = 0; j < s.count(n); ++j) {
        const SimplexId& id = s.by_dim[static_cast<size_t>(n)][static_cast<size_t>(j)];
        DegenerateRef front = front_face(s, id, p);
        if (front.degenerate()) continue;
        DegenerateRef back = back_face(s, id, q);
        if (back.degenerate()) continue;
        m.add_at(s.index_of(front.target) * s.count(q) + s.index_of(back.target), j, 1);
      }
      row.push_back(std::move(m));
    }
  }
  return c;
}

CoalgebraReport coalgebra_axioms_check(const DgCoalgebra& c) {
  CoalgebraReport rep;
  if (c.rank(0) != 1) rep.issues.push_back({"connectedness", 0, -1, -1});

  // Counit: Delta_{0,n} and Delta_{n,0} must be the identity under the
  // canonical C_0 (x) C_n = C_n identification.
  for (int n = 0; n <= c.top(); ++n) {
    if (c.delta(n, 0) != IntMatrix::identity(c.rank(n))) rep.issues.push_back({"counit", n, 0, n});
    if (c.delta(n, n) != IntMatrix::identity(c.rank(n))) rep.issues.push_back({"counit", n, n, 0});
  }

  // Coassociativity per tridegree (p,q,r):
  // (Delta_{p,q} (x) id) Delta_{p+q,r} = (id (x) Delta_{q,r}) Delta_{p,q+r}.
  for (int n = 0; n <= c.top(); ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q) {
        int r = n - p - q;
        IntMatrix lhs = c.delta(p + q, p).kron(IntMatrix::identity(c.rank(r))) * c.delta(n, p + q);
        IntMatrix rhs = IntMatrix::identity(c.rank(p)).kron(c.delta(n - p, q)) * c.delta(n, p);
        if (lhs != rhs) rep.issues.push_back({"coassociativity", n, p, q});
      }

  // Leibniz: Delta_{p,q} d = (d (x) id) Delta_{p+1,q} + (-1)^p (id (x) d) Delta_{p,q+1}.
  for (int n = 1; n <= c.top(); ++n)
    for (int p = 0; p <= n - 1; ++p) {
      int q = n - 1 - p;
      IntMatrix lhs = c.delta(n - 1, p) * c.complex.d(n);
      IntMatrix rhs = c.complex.d(p + 1).kron(IntMatrix::identity(c.rank(q))) * c.delta(n, p + 1);
      IntMatrix second =
          IntMatrix::identity(c.rank(p)).kron(c.complex.d(q + 1)) * c.delta(n, p);
      rhs = (p % 2 == 0) ? rhs + second : rhs - second;
      if (lhs != rhs) rep.issues.push_back({"leibniz", n, p, q});
    }
  return rep;
}

ChainMap induced_chain_map(const SimplicialMap& f) {
  ValidationReport rep = validate_map(f);
  if (!rep.ok()) fail("rejected", "invalid simplicial map: " + rep.issues.front().what);
  int top = f.source.top_dim();
  ChainMap out;
  out.mats.reserve(static_cast<size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    IntMatrix m(f.target.count(n), f.source.count(n));
    for (int j = 0; j < f.source.count(n); ++j) {
      const SimplexId& id = f.source.by_dim[static_cast<size_t>(n)][static_cast<size_t>(j)];
      const DegenerateRef& image = f.assign.at(id);
      if (image.degenerate()) continue;
      m.set(f.target.index_of(image.target), j, 1);
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

bool is_coalgebra_map(const DgCoalgebra& a, const DgCoalgebra& b, const ChainMap& f) {
  if (!is_chain_map(a.complex, b.complex, f)) return false;
  int top = std::max(a.top(), b.top());
  for (int n = 0; n <= top; ++n)
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      IntMatrix fp = f.at(p, a.complex, b.complex);
      IntMatrix fq = f.at(q, a.complex, b.complex);
      IntMatrix fn = f.at(n, a.complex, b.complex);
      IntMatrix lhs = fp.kron(fq) * (n <= a.top() ? a.delta(n, p)
                                                  : IntMatrix(a.rank(p) * a.rank(q), a.rank(n)));
      IntMatrix rhs = (n <= b.top() ? b.delta(n, p)
                                    : IntMatrix(b.rank(p) * b.rank(q), b.rank(n))) *
                      fn;
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace topo
