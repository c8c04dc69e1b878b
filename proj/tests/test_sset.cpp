#include <doctest.h>

#include <random>

#include "topo/covering.hpp"
#include "topo/error.hpp"
#include "topo/group_ring.hpp"
#include "topo/twisted.hpp"

#include "helpers.hpp"

using namespace topo;
using topo::testing::nerve_z2_truncated;
using topo::testing::pres;

TEST_CASE("degeneracy normal form") {
  // s_0 s_0 = s_1 s_0, already-decreasing words stay put.
  CHECK(insert_degeneracy({0}, 0) == std::vector<int>{1, 0});
  CHECK(insert_degeneracy({2, 0}, 1) == std::vector<int>{3, 1, 0});
  CHECK(insert_degeneracy({}, 4) == std::vector<int>{4});
  CHECK(insert_degeneracy({1, 0}, 5) == std::vector<int>{5, 1, 0});
}

TEST_CASE("normal form is stable under random rebuilds") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    // Apply a random degeneracy sequence two ways.
    int len = 1 + static_cast<int>(rng() % 6);
    std::vector<int> word;
    int dim = 0;
    for (int k = 0; k < len; ++k) {
      int idx = static_cast<int>(rng() % static_cast<unsigned>(dim + 1));
      word = insert_degeneracy(word, idx);
      ++dim;
    }
    for (size_t i = 0; i + 1 < word.size(); ++i) REQUIRE(word[i] > word[i + 1]);
    // Renormalizing the normal form letter by letter must reproduce it.
    std::vector<int> again;
    for (auto it = word.rbegin(); it != word.rend(); ++it) again = insert_degeneracy(again, *it);
    CHECK(again == word);
  }
}

TEST_CASE("standard models validate") {
  for (int n = 1; n <= 4; ++n) {
    ReducedSimplicialSet s = delta_quotient(n);
    CHECK(validate(s.data).ok());
    CHECK(s.data.count(0) == 1);
    CHECK(s.data.count(n) == 1);
  }
  CHECK_THROWS_AS(delta_quotient(0), Error);

  ReducedSimplicialSet w = wedge_of({delta_quotient(1), delta_quotient(2)});
  CHECK(validate(w.data).ok());
  CHECK(w.data.count(0) == 1);
  CHECK(w.data.count(1) == 1);
  CHECK(w.data.count(2) == 1);
}

TEST_CASE("constructed violations are reported") {
  SimplicialSetData s;
  s.by_dim = {{"v"}, {"a"}, {"t"}};
  DegenerateRef v{{}, "v"};
  s.faces["a"] = {v, v};
  // d0 has the wrong dimension: refers to the vertex without a degeneracy.
  s.faces["t"] = {v, DegenerateRef{{0}, "v"}, DegenerateRef{{}, "a"}};
  ValidationReport rep = validate(s);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues.front().simplex == "t");
}

TEST_CASE("presentation complexes match the pinned cell counts") {
  ReducedSimplicialSet rp2 = corpus_space("rp2");
  CHECK(validate(rp2.data).ok());
  CHECK(rp2.data.count(0) == 1);
  CHECK(rp2.data.count(1) == 1);
  CHECK(rp2.data.count(2) == 1);
  // Faces (d2, d0) = a, d1 degenerate.
  const auto& fs = rp2.data.faces.at(rp2.data.by_dim[2][0]);
  CHECK(fs[0] == DegenerateRef{{}, "a"});
  CHECK(fs[1].degenerate());
  CHECK(fs[2] == DegenerateRef{{}, "a"});

  ReducedSimplicialSet p3 = corpus_space("p3");
  CHECK(p3.data.count(1) == 2);
  CHECK(p3.data.count(2) == 2);
  CHECK(p3.data.euler_characteristic() == 1);

  ReducedSimplicialSet torus = corpus_space("torus");
  CHECK(torus.data.count(1) == 4);
  CHECK(torus.data.count(2) == 3);
  CHECK(torus.data.euler_characteristic() == 0);

  // (st)^2 t^-5 reduces to s t s t^-4, so each relator has length 7.
  ReducedSimplicialSet icosa = corpus_space("binary-icosahedral");
  CHECK(validate(icosa.data).ok());
  CHECK(icosa.data.count(1) == 12);
  CHECK(icosa.data.count(2) == 12);
  CHECK(icosa.data.euler_characteristic() == 1);

  // Length-1 relator: one triangle with two degenerate faces.
  ReducedSimplicialSet disc = presentation_complex(pres({"a"}, {"a"}));
  CHECK(disc.data.count(1) == 1);
  CHECK(disc.data.count(2) == 1);
  const auto& dfs = disc.data.faces.at(disc.data.by_dim[2][0]);
  CHECK(dfs[1].degenerate());
  CHECK(dfs[2].degenerate());
  CHECK_FALSE(dfs[0].degenerate());

  CHECK_THROWS_AS(presentation_complex(pres({"a"}, {"a a^-1"})), Error);
}

TEST_CASE("negative first letters get their own pinning triangle") {
  // <a | a^-1 a^-1> must still present Z/2.
  ReducedSimplicialSet s = presentation_complex(pres({"a"}, {"a^-1 a^-1"}));
  CHECK(validate(s.data).ok());
  GroupPresentation p = pi1_presentation(s);
  EnumerationResult e = todd_coxeter(p, 100);
  REQUIRE(e.completed);
  CHECK(e.table.size() == 2);
}

TEST_CASE("the truncated nerve of Z/2 validates") {
  ReducedSimplicialSet s = nerve_z2_truncated();
  CHECK(validate(s.data).ok());
}

TEST_CASE("json round trip") {
  for (const auto& entry : corpus()) {
    ReducedSimplicialSet s = entry.build();
    SimplicialSetData back = SimplicialSetData::from_json(s.data.to_json());
    CHECK(back == s.data);
  }
  Json bad = corpus_space("rp2").data.to_json();
  bad.erase("version");
  CHECK_THROWS_AS(SimplicialSetData::from_json(bad), Error);
}

TEST_CASE("covers multiply cells and validate") {
  ReducedSimplicialSet rp2 = corpus_space("rp2");
  EnumerationResult e = todd_coxeter(pi1_presentation(rp2), 100);
  REQUIRE(e.completed);
  SimplicialSetData cover = covering_space(rp2, e.table);
  CHECK(validate(cover).ok());
  CHECK(cover.count(0) == 2);
  CHECK(cover.count(1) == 2);
  CHECK(cover.count(2) == 2);
  CHECK(cover.euler_characteristic() == 2 * rp2.data.euler_characteristic());

  // Simply connected space: the 1-coset cover is the space itself.
  ReducedSimplicialSet s2 = corpus_space("s2");
  EnumerationResult e1 = todd_coxeter(pi1_presentation(s2), 10);
  REQUIRE(e1.completed);
  CHECK(e1.table.size() == 1);
  SimplicialSetData c1 = covering_space(s2, e1.table);
  CHECK(c1.count(2) == 1);
  CHECK(validate(c1).ok());
}

TEST_CASE("chi is multiplicative for every corpus cover that enumerates") {
  for (const char* name : {"rp2", "p3", "binary-icosahedral", "s2", "delta1"}) {
    ReducedSimplicialSet s = corpus_space(name);
    GroupPresentation p = pi1_presentation(s);
    EnumerationResult e = todd_coxeter(p, 10000);
    if (!e.completed) continue;  // delta1 is infinite cyclic
    SimplicialSetData cover = covering_space(s, e.table);
    CHECK(validate(cover).ok());
    CHECK(cover.euler_characteristic() ==
          e.table.size() * s.data.euler_characteristic());
  }
}

TEST_CASE("deck transformations are simplicial automorphisms") {
  ReducedSimplicialSet rp2 = corpus_space("rp2");
  EnumerationResult e = todd_coxeter(pi1_presentation(rp2), 100);
  REQUIRE(e.completed);
  std::set<std::string> images;
  for (int h = 0; h < e.table.size(); ++h) {
    SimplicialMap deck = deck_transformation(rp2, e.table, h);
    CHECK(validate_map(deck).ok());
    images.insert(deck.to_json().dump());
  }
  CHECK(images.size() == 2);  // as many distinct decks as the index
}

TEST_CASE("incomplete tables are rejected by covering_space") {
  ReducedSimplicialSet rp2 = corpus_space("rp2");
  // A table over the wrong presentation (wrong generator set).
  CosetTable t;
  t.gen_names = {"z"};
  t.fwd = {{0}};
  t.bwd = {{0}};
  CHECK_THROWS_AS(covering_space(rp2, t), Error);
}

TEST_CASE("maps validate and compose") {
  ReducedSimplicialSet rp2 = corpus_space("rp2");
  SimplicialMap id = identity_map(rp2.data);
  CHECK(validate_map(id).ok());
  SimplicialMap c = collapse_to_point(rp2.data);
  CHECK(validate_map(c).ok());
  SimplicialMap cc = compose(c, id);
  CHECK(validate_map(cc).ok());
  for (const auto& [k, v] : cc.assign) CHECK(v == c.assign.at(k));

  // A map that does not commute with faces is reported.
  ReducedSimplicialSet d1 = corpus_space("delta1");
  SimplicialMap bad;
  bad.source = d1.data;
  bad.target = rp2.data;
  bad.assign["v"] = DegenerateRef{{}, "v"};
  bad.assign["c"] = DegenerateRef{{0}, "v"};  // edge to degenerate edge: fine
  CHECK(validate_map(bad).ok());
  bad.assign["c"] = DegenerateRef{{}, "a"};  // also fine: both faces land on v
  CHECK(validate_map(bad).ok());
}
