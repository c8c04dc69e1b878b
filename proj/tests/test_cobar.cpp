#include <doctest.h>

#include <random>

#include "topo/error.hpp"
#include "topo/group_ring.hpp"
#include "topo/twisted.hpp"

#include "helpers.hpp"

using namespace topo;
using topo::testing::nerve_z2_truncated;

namespace {

NCPoly poly(std::vector<NCTerm> terms) { return nc_normalize(std::move(terms)); }

// Tensor-square product for multiplicativity checks.
TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      auto key = pa;
      key.first.insert(key.first.end(), pb.first.begin(), pb.first.end());
      key.second.insert(key.second.end(), pb.second.begin(), pb.second.end());
      out[key] += ca * cb;
      if (out[key] == 0) out.erase(key);
    }
  return out;
}

}  // namespace

TEST_CASE("degree-0 basis of the circle's cobar construction") {
  DgCoalgebra c = normalized_chains(corpus_space("delta1"));
  CobarAlgebra a = cobar(c, {.max_deg = 2, .max_len = 3});
  REQUIRE_FALSE(a.basis_truncated);
  // {1, [a], [a|a], [a|a|a]}
  CHECK(a.basis[0].size() == 4);
  CHECK(a.d_letter[0].empty());
  for (int d = 1; d <= 2; ++d)
    CHECK(a.basis[static_cast<size_t>(d)].empty());
}

TEST_CASE("cobar differential on the rp2 triangle") {
  DgCoalgebra c = normalized_chains(corpus_space("rp2"));
  CobarAlgebra a = cobar(c, {.max_deg = 4, .max_len = 6});
  int t = a.letter_for(c.basis_names[2][0]);
  int edge = a.letter_for("a");
  CHECK(a.d_letter[static_cast<size_t>(t)] ==
        poly({{-2, {edge}}, {-1, {edge, edge}}}));
}

TEST_CASE("D^2 = 0 on generators for every corpus space") {
  for (const auto& e : corpus()) {
    DgCoalgebra c = normalized_chains(e.build());
    CobarAlgebra a = cobar(c, {.max_deg = 4, .max_len = 6, .basis_cap = 1});
    std::string w;
    CHECK_MESSAGE(d_squared_vanishes_on_generators(a, &w), e.name, ": ", w);
  }
  CobarAlgebra nerve = cobar(normalized_chains(nerve_z2_truncated()), {.max_deg = 4, .max_len = 6});
  CHECK(d_squared_vanishes_on_generators(nerve));
  CobarAlgebra d3 = cobar(normalized_chains(delta_quotient(3)), {.max_deg = 4, .max_len = 6});
  CHECK(d_squared_vanishes_on_generators(d3));
}

TEST_CASE("D^2 = 0 as matrices on materialized truncations") {
  for (const char* name : {"delta1", "rp2", "p3", "s2", "torus"}) {
    DgCoalgebra c = normalized_chains(corpus_space(name));
    CobarAlgebra a = cobar(c, {.max_deg = 3, .max_len = 4});
    REQUIRE_FALSE(a.basis_truncated);
    for (int d = 2; d <= a.max_deg; ++d) {
      if (!a.window_closed[static_cast<size_t>(d)] ||
          !a.window_closed[static_cast<size_t>(d - 1)])
        continue;
      CHECK((a.d_mat[static_cast<size_t>(d - 1)] * a.d_mat[static_cast<size_t>(d)]).is_zero());
    }
  }
}

TEST_CASE("window flags are honest") {
  DgCoalgebra c = normalized_chains(corpus_space("rp2"));
  // Length cap 2: D of [a|t] has the length-3 term [a|a|a].
  CobarAlgebra a = cobar(c, {.max_deg = 2, .max_len = 2});
  CHECK_FALSE(a.window_closed[1]);
  CobarAlgebra wide = cobar(c, {.max_deg = 2, .max_len = 3});
  CHECK(wide.window_closed[1]);
}

TEST_CASE("non-connected coalgebras are rejected") {
  DgCoalgebra c = normalized_chains(corpus_space("rp2"));
  c.complex.ranks[0] = 2;
  CHECK_THROWS_AS(cobar(c, {}), Error);
}

TEST_CASE("h0 relations") {
  DgCoalgebra rp2 = normalized_chains(corpus_space("rp2"));
  RingPresentation r = h0_relations(rp2);
  REQUIRE(r.generators == std::vector<std::string>{"a"});
  REQUIRE(r.relations.size() == 1);
  CHECK(r.relations[0] == poly({{-2, {0}}, {-1, {0, 0}}}));

  // Torus triangle T1 encodes p2 = a + b + a b.
  DgCoalgebra torus = normalized_chains(corpus_space("torus"));
  RingPresentation rt = h0_relations(torus);
  REQUIRE(rt.generators == std::vector<std::string>{"a", "b", "r0.p2", "r0.p3"});
  CHECK(rt.relations[0] == poly({{1, {2}}, {-1, {0}}, {-1, {1}}, {-1, {0, 1}}}));

  RingPresentation rd = h0_relations(normalized_chains(corpus_space("delta1")));
  CHECK(rd.relations.empty());
}

TEST_CASE("pi1 presentations") {
  GroupPresentation rp2 = pi1_presentation(corpus_space("rp2"));
  CHECK(rp2.gens == std::vector<std::string>{"a"});
  REQUIRE(rp2.relators.size() == 1);
  CHECK(word_str(rp2.relators[0], rp2.gens) == "a a");

  GroupPresentation torus = pi1_presentation(corpus_space("torus"));
  CHECK(torus.gens.size() == 4);
  CHECK(torus.relators.size() == 3);
  CHECK(abelianization(torus) == FGAbelianGroup{2, {}});

  // All faces degenerate: no generators, and the empty relator is dropped.
  GroupPresentation s2 = pi1_presentation(corpus_space("s2"));
  CHECK(s2.gens.empty());
  CHECK(s2.relators.empty());
}

TEST_CASE("pi1 orders through todd-coxeter") {
  auto order = [](const char* name) {
    EnumerationResult e = todd_coxeter(pi1_presentation(corpus_space(name)), 10000);
    REQUIRE(e.completed);
    return e.table.size();
  };
  CHECK(order("rp2") == 2);
  CHECK(order("p3") == 3);
  CHECK(order("s2") == 1);
  CHECK(order("binary-icosahedral") == 120);
}

TEST_CASE("psi on monomials") {
  GroupPresentation g = pi1_presentation(corpus_space("rp2"));
  // psi(1) = e.
  CHECK(psi_word({}, g) == gre_identity());
  // psi([a]) = a - e.
  GroupRingElement pa = psi_word({0}, g);
  REQUIRE(pa.terms.size() == 2);
  CHECK(pa.terms.at(Word{letter_of(0)}) == 1);
  CHECK(pa.terms.at(Word{}) == -1);
  CHECK_THROWS_AS(psi_word({3}, g), Error);

  // psi([a|a]) = (a-e)^2 = 2e - 2a in Z[Z/2].
  EnumerationResult e = todd_coxeter(g, 100);
  REQUIRE(e.completed);
  auto vals = evaluate_in_group(psi_word({0, 0}, g), e.table);
  CHECK(vals.at(0) == 2);
  CHECK(vals.at(1) == -2);
}

TEST_CASE("psi kills the h0 relations of rp2 and p3") {
  for (const char* name : {"rp2", "p3"}) {
    ReducedSimplicialSet s = corpus_space(name);
    DgCoalgebra c = normalized_chains(s);
    GroupPresentation g = pi1_presentation(s);
    EnumerationResult e = todd_coxeter(g, 1000);
    REQUIRE(e.completed);
    for (const auto& rel : h0_relations(c).relations)
      CHECK(is_zero_in_group(psi_poly(rel, g), e.table));
  }
}

TEST_CASE("psi kills every icosahedral relation too") {
  ReducedSimplicialSet s = corpus_space("binary-icosahedral");
  DgCoalgebra c = normalized_chains(s);
  GroupPresentation g = pi1_presentation(s);
  EnumerationResult e = todd_coxeter(g, 10000);
  REQUIRE(e.completed);
  for (const auto& rel : h0_relations(c).relations)
    CHECK(is_zero_in_group(psi_poly(rel, g), e.table));
}

TEST_CASE("psi is an algebra map after quotient evaluation") {
  ReducedSimplicialSet s = corpus_space("p3");
  GroupPresentation g = pi1_presentation(s);
  EnumerationResult e = todd_coxeter(g, 100);
  REQUIRE(e.completed);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> m1, m2;
    for (int k = 0; k < static_cast<int>(rng() % 4); ++k)
      m1.push_back(static_cast<int>(rng() % g.gens.size()));
    for (int k = 0; k < static_cast<int>(rng() % 4); ++k)
      m2.push_back(static_cast<int>(rng() % g.gens.size()));
    std::vector<int> cat = m1;
    cat.insert(cat.end(), m2.begin(), m2.end());
    auto lhs = evaluate_in_group(psi_word(cat, g), e.table);
    auto rhs = evaluate_in_group(gre_mul(psi_word(m1, g), psi_word(m2, g)), e.table);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("h0 coproduct structure") {
  // grad(1) = 1 (x) 1.
  TensorPoly unit = h0_coproduct_word({});
  REQUIRE(unit.size() == 1);
  CHECK(unit.at({{}, {}}) == 1);

  // grad([x]) = x(x)x + x(x)1 + 1(x)x.
  TensorPoly gen = h0_coproduct_word({0});
  CHECK(gen.size() == 3);
  CHECK(gen.at({{0}, {0}}) == 1);
  CHECK(gen.at({{0}, {}}) == 1);
  CHECK(gen.at({{}, {0}}) == 1);

  for (auto w : std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}, {0, 0}, {0, 1, 0}}) {
    CHECK(h0_coproduct_coassociative(w));
    CHECK(h0_coproduct_counital(w));
  }
}

TEST_CASE("h0 coproduct is multiplicative") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> w1, w2;
    for (int k = 0; k < static_cast<int>(rng() % 4); ++k) w1.push_back(static_cast<int>(rng() % 3));
    for (int k = 0; k < static_cast<int>(rng() % 4); ++k) w2.push_back(static_cast<int>(rng() % 3));
    std::vector<int> cat = w1;
    cat.insert(cat.end(), w2.begin(), w2.end());
    CHECK(h0_coproduct_word(cat) == tensor_mul(h0_coproduct_word(w1), h0_coproduct_word(w2)));
  }
}

TEST_CASE("psi is a coalgebra map on generators") {
  // (psi (x) psi)(grad [a]) = g (x) g - e (x) e in Z[Z/2] (x) Z[Z/2].
  ReducedSimplicialSet s = corpus_space("rp2");
  GroupPresentation g = pi1_presentation(s);
  EnumerationResult e = todd_coxeter(g, 100);
  REQUIRE(e.completed);
  std::map<std::pair<int, int>, Int> got;
  for (const auto& [pair, c] : h0_coproduct_word({0})) {
    auto l = evaluate_in_group(psi_word(pair.first, g), e.table);
    auto r = evaluate_in_group(psi_word(pair.second, g), e.table);
    for (const auto& [gl, cl] : l)
      for (const auto& [gr, cr] : r) {
        got[{gl, gr}] += c * cl * cr;
        if (got[{gl, gr}] == 0) got.erase({gl, gr});
      }
  }
  std::map<std::pair<int, int>, Int> want{{{1, 1}, 1}, {{0, 0}, -1}};
  CHECK(got == want);
}

TEST_CASE("group-likes of small group rings") {
  auto likes = [](const char* rel, int want) {
    GroupPresentation p = topo::testing::pres({"a"}, {rel});
    EnumerationResult e = todd_coxeter(p, 100);
    REQUIRE(e.completed);
    std::vector<int> out = group_like_elements(group_table(e.table));
    CHECK(static_cast<int>(out.size()) == want);
    return out;
  };
  CHECK(likes("a a", 2) == std::vector<int>{0, 1});
  likes("a a a", 3);
  likes("a", 1);
}

TEST_CASE("antipode identity on Z[Z/2] and Z[Z/3]") {
  std::mt19937 rng(29);
  for (const char* rel : {"a a", "a a a"}) {
    GroupPresentation p = topo::testing::pres({"a"}, {rel});
    EnumerationResult e = todd_coxeter(p, 100);
    REQUIRE(e.completed);
    FiniteGroupTable g = group_table(e.table);
    for (int trial = 0; trial < 20; ++trial) {
      std::map<int, Int> x;
      for (int i = 0; i < g.n; ++i) x[i] = static_cast<int>(rng() % 9) - 4;
      CHECK(antipode_identity_holds(g, x));
    }
  }
}
