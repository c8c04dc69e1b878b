#include "topo/twisted.hpp"

#include "topo/error.hpp"

namespace topo {
namespace {

// Letters were created dimension-major, so offsets are cumulative ranks.
std::vector<int> letter_offsets(const CobarAlgebra& a, int top) {
  std::vector<int> off(static_cast<size_t>(top) + 2, 0);
  for (size_t l = 0; l < a.letter_dim.size(); ++l) off[static_cast<size_t>(a.letter_dim[l])]++;
  int acc = 0;
  for (int n = 1; n <= top + 1; ++n) {
    int count = off[static_cast<size_t>(n)];
    off[static_cast<size_t>(n)] = acc;
    acc += count;
  }
  return off;
}

}  // namespace

bool maurer_cartan_holds(const DgCoalgebra& c, const CobarAlgebra& a, int max_dim,
                         std::string* witness) {
  std::vector<int> off = letter_offsets(a, c.top());
  int top = std::min(max_dim, c.top());
  for (int n = 1; n <= top; ++n) {
    for (int j = 0; j < c.rank(n); ++j) {
      int letter = off[static_cast<size_t>(n)] + j;
      // d(tau)(sigma) = D(tau sigma) + tau(d sigma) = -D[sigma] - [d sigma].
      NCPoly acc = nc_scale(a.d_letter[static_cast<size_t>(letter)], -1);
      if (n >= 2) {
        std::vector<NCTerm> faces;
        const IntMatrix& d = c.complex.boundary[static_cast<size_t>(n)];
        for (const auto& [k, v] : d.entries())
          if (k.second == j) faces.push_back({-v, {off[static_cast<size_t>(n - 1)] + k.first}});
        acc = nc_add(acc, nc_normalize(std::move(faces)));
      }
      // (tau * tau)(sigma) = sum_p (-1)^p [front_p | back_q].
      std::vector<NCTerm> quad;
      for (int p = 1; p <= n - 1; ++p) {
        int q = n - p;
        for (const auto& [k, v] : c.delta(n, p).entries()) {
          if (k.second != j) continue;
          Int coeff = (p % 2 == 0) ? v : -v;
          quad.push_back({coeff,
                          {off[static_cast<size_t>(p)] + k.first / c.rank(q),
                           off[static_cast<size_t>(q)] + k.first % c.rank(q)}});
        }
      }
      acc = nc_add(acc, nc_normalize(std::move(quad)));
      if (!acc.empty()) {
        if (witness) *witness = c.basis_names[static_cast<size_t>(n)][static_cast<size_t>(j)];
        return false;
      }
    }
  }
  return true;
}

ChainComplex twisted_tensor(const DgCoalgebra& c, const PiModule& m,
                            const GroupPresentation& g) {
  auto issues = validate_module(m, g);
  if (!issues.empty()) fail("rejected", "invalid module action: " + issues.front());
  if (c.top() >= 1 && g.gens != c.basis_names[1])
    fail("rejected", "module presentation does not match the 1-simplices");

  const int r = m.rank;
  std::vector<IntMatrix> twist_blocks;  // (action - id) per edge
  if (c.top() >= 1)
    for (const auto& name : c.basis_names[1])
      twist_blocks.push_back(m.action.at(name) - IntMatrix::identity(r));

  ChainComplex out;
  out.ranks.resize(static_cast<size_t>(c.top()) + 1);
  for (int n = 0; n <= c.top(); ++n) out.ranks[static_cast<size_t>(n)] = c.rank(n) * r;
  out.boundary.resize(static_cast<size_t>(c.top()) + 1);
  for (int n = 1; n <= c.top(); ++n) {
    IntMatrix d(out.ranks[static_cast<size_t>(n - 1)], out.ranks[static_cast<size_t>(n)]);
    for (const auto& [k, v] : c.complex.boundary[static_cast<size_t>(n)].entries())
      for (int x = 0; x < r; ++x) d.add_at(k.first * r + x, k.second * r + x, v);
    const int sign = (n % 2 == 0) ? 1 : -1;
    for (const auto& [k, v] : c.delta(n, n - 1).entries()) {
      int front = k.first / c.rank(1);
      int edge = k.first % c.rank(1);
      for (const auto& [bk, bv] : twist_blocks[static_cast<size_t>(edge)].entries())
        d.add_at(front * r + bk.first, k.second * r + bk.second, sign * v * bv);
    }
    out.boundary[static_cast<size_t>(n)] = std::move(d);
  }
  if (auto broken = out.first_broken_degree())
    fail("internal", "twisted boundary does not square to zero in degree " +
                         std::to_string(*broken));
  return out;
}

std::vector<FGAbelianGroup> local_homology(const ReducedSimplicialSet& s, const PiModule& m,
                                           int up_to, const CoeffSpec& coeffs) {
  DgCoalgebra c = normalized_chains(s);
  GroupPresentation g = pi1_presentation(s);
  ChainComplex t = twisted_tensor(c, m, g);
  return homology_range(t, up_to, coeffs);
}

}  // namespace topo
