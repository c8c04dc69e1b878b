#include <doctest.h>

#include "topo/coalgebra.hpp"
#include "topo/cobar.hpp"
#include "topo/error.hpp"

#include "helpers.hpp"

using namespace topo;
using topo::testing::nerve_z2_truncated;

namespace {

std::vector<ReducedSimplicialSet> all_corpus() {
  std::vector<ReducedSimplicialSet> out;
  for (const auto& e : corpus()) out.push_back(e.build());
  return out;
}

}  // namespace

TEST_CASE("chains of the circle") {
  DgCoalgebra c = normalized_chains(corpus_space("delta1"));
  CHECK(c.rank(0) == 1);
  CHECK(c.rank(1) == 1);
  CHECK(c.complex.d(1).is_zero());
  // Delta(edge) = edge (x) v + v (x) edge only.
  CHECK(c.delta(1, 0) == IntMatrix::identity(1));
  CHECK(c.delta(1, 1) == IntMatrix::identity(1));
}

TEST_CASE("chains of rp2: boundary 2a and AW component a (x) a") {
  DgCoalgebra c = normalized_chains(corpus_space("rp2"));
  CHECK(c.complex.d(2) == IntMatrix::from_dense({{2}}));
  CHECK(c.delta(2, 1) == IntMatrix::from_dense({{1}}));
}

TEST_CASE("fully collapsed boundaries kill both structures") {
  for (int n = 2; n <= 4; ++n) {
    DgCoalgebra c = normalized_chains(delta_quotient(n));
    CHECK(c.complex.d(n).is_zero());
    for (int p = 1; p < n; ++p) CHECK(c.delta(n, p).is_zero());
    CHECK(c.delta(n, 0) == IntMatrix::identity(1));
    CHECK(c.delta(n, n) == IntMatrix::identity(1));
  }
}

TEST_CASE("coalgebra axioms hold on the whole corpus") {
  for (const auto& s : all_corpus()) {
    DgCoalgebra c = normalized_chains(s);
    CHECK(coalgebra_axioms_check(c).ok());
  }
  CHECK(coalgebra_axioms_check(normalized_chains(nerve_z2_truncated())).ok());
  CHECK(coalgebra_axioms_check(normalized_chains(delta_quotient(3))).ok());
  CHECK(coalgebra_axioms_check(
            normalized_chains(wedge_of({delta_quotient(1), delta_quotient(2)})))
            .ok());
}

TEST_CASE("a corrupted coproduct is reported with its tridegree") {
  DgCoalgebra c = normalized_chains(corpus_space("torus"));
  c.coproduct[2][1].add_at(0, 0, 1);
  CoalgebraReport rep = coalgebra_axioms_check(c);
  REQUIRE_FALSE(rep.ok());
  bool named = false;
  for (const auto& issue : rep.issues)
    named = named || (issue.law == "leibniz" || issue.law == "coassociativity");
  CHECK(named);
}

TEST_CASE("golden homology of the corpus") {
  auto groups = [](const char* name, int up_to) {
    return homology_range(normalized_chains(corpus_space(name)).complex, up_to);
  };
  using G = FGAbelianGroup;
  CHECK(groups("rp2", 2) == std::vector<G>{{1, {}}, {0, {2}}, {0, {}}});
  CHECK(groups("p3", 2) == std::vector<G>{{1, {}}, {0, {3}}, {0, {}}});
  CHECK(groups("torus", 2) == std::vector<G>{{1, {}}, {2, {}}, {1, {}}});
  CHECK(groups("s2", 2) == std::vector<G>{{1, {}}, {0, {}}, {1, {}}});
  CHECK(groups("binary-icosahedral", 2) == std::vector<G>{{1, {}}, {0, {}}, {0, {}}});
  CHECK(groups("higman", 2) == std::vector<G>{{1, {}}, {0, {}}, {0, {}}});
  CHECK(groups("delta1", 1) == std::vector<G>{{1, {}}, {1, {}}});
}

TEST_CASE("induced chain maps") {
  ReducedSimplicialSet rp2 = corpus_space("rp2");
  ChainMap id = induced_chain_map(identity_map(rp2.data));
  for (int n = 0; n <= 2; ++n)
    CHECK(id.mats[static_cast<size_t>(n)] == IntMatrix::identity(1));

  ChainMap collapse = induced_chain_map(collapse_to_point(rp2.data));
  CHECK(collapse.mats[0] == IntMatrix::identity(1));
  CHECK(collapse.mats[1].is_zero());
  CHECK(collapse.mats[2].is_zero());

  // Wedge summand inclusion is a basis inclusion.
  ReducedSimplicialSet wedge = wedge_of({delta_quotient(1), delta_quotient(2)});
  ReducedSimplicialSet d1 = delta_quotient(1);
  SimplicialMap inc;
  inc.source = d1.data;
  inc.target = wedge.data;
  inc.assign["v"] = DegenerateRef{{}, "v"};
  inc.assign["c"] = DegenerateRef{{}, "s0.c"};
  REQUIRE(validate_map(inc).ok());
  ChainMap f = induced_chain_map(inc);
  CHECK(f.mats[1] == IntMatrix::from_dense({{1}}));

  DgCoalgebra ca = normalized_chains(d1);
  DgCoalgebra cb = normalized_chains(wedge);
  CHECK(is_coalgebra_map(ca, cb, f));
}

TEST_CASE("functoriality on composites") {
  ReducedSimplicialSet wedge = wedge_of({delta_quotient(1), delta_quotient(2)});
  ReducedSimplicialSet d1 = delta_quotient(1);
  SimplicialMap inc;
  inc.source = d1.data;
  inc.target = wedge.data;
  inc.assign["v"] = DegenerateRef{{}, "v"};
  inc.assign["c"] = DegenerateRef{{}, "s0.c"};
  SimplicialMap col = collapse_to_point(wedge.data);
  SimplicialMap both = compose(col, inc);
  ChainMap lhs = induced_chain_map(both);
  ChainMap f = induced_chain_map(inc);
  ChainMap g = induced_chain_map(col);
  for (int n = 0; n <= 1; ++n)
    CHECK(lhs.mats[static_cast<size_t>(n)] ==
          g.mats[static_cast<size_t>(n)] * f.mats[static_cast<size_t>(n)]);
}

TEST_CASE("hurewicz cross-check: H1 equals the abelianized pi1") {
  for (const auto& entry : corpus()) {
    ReducedSimplicialSet s = entry.build();
    FGAbelianGroup h1 = homology(normalized_chains(s).complex, 1);
    CHECK(h1 == abelianization(pi1_presentation(s)));
  }
}

TEST_CASE("non-reduced input is rejected") {
  SimplicialSetData two_points;
  two_points.by_dim = {{"v", "w"}};
  CHECK_THROWS_AS(make_reduced(two_points), Error);
}
