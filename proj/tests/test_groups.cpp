#include <doctest.h>

#include "topo/coset_table.hpp"
#include "topo/error.hpp"
#include "topo/pi_module.hpp"

using namespace topo;

namespace {

GroupPresentation pres(const std::vector<std::string>& gens,
                       const std::vector<std::string>& relators) {
  GroupPresentation p;
  p.gens = gens;
  for (const auto& r : relators) p.relators.push_back(parse_word(r, gens));
  return p;
}

}  // namespace

TEST_CASE("free reduction and word parsing") {
  auto gens = std::vector<std::string>{"a", "b"};
  CHECK(parse_word("a a^-1", gens).empty());
  CHECK(parse_word("a b a^-1 b^-1", gens).size() == 4);
  CHECK(word_str(parse_word("a b^-1", gens), gens) == "a b^-1");
  CHECK_THROWS_AS(parse_word("x", gens), Error);
}

TEST_CASE("abelianization") {
  CHECK(abelianization(pres({"a"}, {"a a"})) == FGAbelianGroup{0, {2}});
  CHECK(abelianization(pres({"a", "b"}, {"a b a^-1 b^-1"})) == FGAbelianGroup{2, {}});
  // Exponent matrix [[-1,2],[2,-3]] has determinant -1: trivial.
  CHECK(abelianization(pres({"s", "t"},
                            {"s t s t s^-1 s^-1 s^-1",
                             "s t s t t^-1 t^-1 t^-1 t^-1 t^-1"})) == FGAbelianGroup{0, {}});
}

TEST_CASE("todd-coxeter on small groups") {
  EnumerationResult z2 = todd_coxeter(pres({"a"}, {"a a"}), 100);
  REQUIRE(z2.completed);
  CHECK(z2.table.size() == 2);

  EnumerationResult z3 = todd_coxeter(pres({"a"}, {"a a a"}), 100);
  REQUIRE(z3.completed);
  CHECK(z3.table.size() == 3);

  EnumerationResult t = todd_coxeter(pres({}, {}), 10);
  REQUIRE(t.completed);
  CHECK(t.table.size() == 1);

  // S3 = <a,b | a^2, b^2, (ab)^3>.
  EnumerationResult s3 = todd_coxeter(pres({"a", "b"}, {"a a", "b b", "a b a b a b"}), 100);
  REQUIRE(s3.completed);
  CHECK(s3.table.size() == 6);
}

TEST_CASE("todd-coxeter certifies the binary icosahedral order") {
  EnumerationResult e = todd_coxeter(pres({"s", "t"},
                                          {"s t s t s^-1 s^-1 s^-1",
                                           "s t s t t^-1 t^-1 t^-1 t^-1 t^-1"}),
                                     10000);
  REQUIRE(e.completed);
  CHECK(e.table.size() == 120);
  // Relator triviality through the table.
  Word r1 = parse_word("s t s t s^-1 s^-1 s^-1", {"s", "t"});
  CHECK(word_reduce(r1, e.table) == 0);
}

TEST_CASE("todd-coxeter exhausts on infinite groups") {
  EnumerationResult z = todd_coxeter(pres({"a"}, {}), 50);
  CHECK_FALSE(z.completed);
  // Higman's group has no proper finite quotients at all.
  EnumerationResult h = todd_coxeter(pres({"a", "b", "c", "d"},
                                          {"b^-1 a b a^-1 a^-1", "c^-1 b c b^-1 b^-1",
                                           "d^-1 c d c^-1 c^-1", "a^-1 d a d^-1 d^-1"}),
                                     2000);
  CHECK_FALSE(h.completed);
}

TEST_CASE("coset tables validate, trace and serialize") {
  GroupPresentation p = pres({"a"}, {"a a a"});
  EnumerationResult e = todd_coxeter(p, 100);
  REQUIRE(e.completed);
  CHECK(e.table.validate(p).empty());
  CHECK(word_reduce(parse_word("a a", p.gens), e.table) ==
        e.table.trace(0, parse_word("a a", p.gens)));
  CosetTable back = CosetTable::from_json(e.table.to_json());
  CHECK(back.fwd == e.table.fwd);
  CHECK(back.validate(p).empty());

  // Representative words hit every coset.
  auto reps = e.table.representatives();
  CHECK(reps.size() == 3);
  for (int c = 0; c < 3; ++c) CHECK(e.table.trace(0, reps[static_cast<size_t>(c)]) == c);
}

TEST_CASE("multiplication tables and inverses") {
  EnumerationResult e = todd_coxeter(pres({"a"}, {"a a a"}), 100);
  REQUIRE(e.completed);
  FiniteGroupTable g = group_table(e.table);
  CHECK(g.n == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(g.mul[static_cast<size_t>(i)][static_cast<size_t>(g.inv[static_cast<size_t>(i)])] == 0);
    CHECK(g.mul[0][static_cast<size_t>(i)] == i);
  }
}

TEST_CASE("regular modules pass the relation check") {
  for (const char* rel : {"a a", "a a a"}) {
    GroupPresentation p = pres({"a"}, {rel});
    EnumerationResult e = todd_coxeter(p, 100);
    REQUIRE(e.completed);
    PiModule m = regular_module(e.table);
    CHECK(validate_module(m, p).empty());
  }
  // The swap matrix for Z/2.
  EnumerationResult z2 = todd_coxeter(pres({"a"}, {"a a"}), 100);
  PiModule m = regular_module(z2.table);
  CHECK(m.action.at("a") == IntMatrix::from_dense({{0, 1}, {1, 0}}));

  // One-coset table: rank-1 identity action.
  GroupPresentation triv = pres({"a"}, {"a"});
  EnumerationResult e1 = todd_coxeter(triv, 10);
  REQUIRE(e1.completed);
  CHECK(e1.table.size() == 1);
  PiModule m1 = regular_module(e1.table);
  CHECK(m1.rank == 1);
  CHECK(m1.action.at("a") == IntMatrix::identity(1));
}

TEST_CASE("invalid module actions are reported") {
  GroupPresentation p = pres({"a"}, {"a a"});
  PiModule bad;
  bad.rank = 1;
  bad.action.emplace("a", IntMatrix::from_dense({{2}}));  // not unimodular
  CHECK_FALSE(validate_module(bad, p).empty());

  PiModule wrong;
  wrong.rank = 1;
  wrong.action.emplace("a", IntMatrix::from_dense({{-1}}));
  // a acts by -1, but a*a must act as the identity: (-1)^2 = 1, fine.
  CHECK(validate_module(wrong, p).empty());

  GroupPresentation p3 = pres({"a"}, {"a a a"});
  // (-1)^3 = -1 != 1: relation check must fail.
  CHECK_FALSE(validate_module(wrong, p3).empty());
}
