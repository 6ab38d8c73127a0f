#include "doctest.h"

#include "quillen/error.hpp"
#include "quillen/json_io.hpp"
#include "quillen/suite.hpp"

using namespace quillen;

namespace {

void same_collection(const Collection &a, const Collection &b) {
  CHECK(a.group.name == b.group.name);
  CHECK(a.E.basis() == b.E.basis());
  CHECK(a.c == b.c);
  CHECK(a.maximality == b.maximality);
  CHECK(a.prime() == b.prime());
}

} // namespace

TEST_CASE("element encodings") {
  GroupElement g = Permutation::from_cycles("(1,2,3)(4,5)", 5);
  auto j = element_to_json(g);
  CHECK(j.dump() == R"({"perm":[2,3,1,5,4]})");
  CHECK(element_from_json(j) == g);

  auto F = Field::of_order(4);
  GroupElement m = Matrix(F, 2, {0, 1, 1, 2});
  auto jm = element_to_json(m);
  CHECK(jm.dump() == R"({"mat":{"q":4,"rows":[[0,1],[1,2]]}})");
  CHECK(element_from_json(jm) == m);

  GroupElement c = CentralCoset(Matrix(Field::of_order(7), 2, {3, 1, 0, 3}), 6);
  auto jc = element_to_json(c);
  CHECK(jc.contains("coset"));
  CHECK(jc["coset"]["center_order"] == 6);
  CHECK(element_from_json(jc) == c);

  auto S5 = symmetric_group(5);
  CHECK(element_from_json(Json("(1,2,3)(4,5)"), &S5) == g);
  auto Q = projective_special_linear_group(2, 7);
  auto bare = Json::parse(R"({"mat":{"q":7,"rows":[[3,1],[0,5]]}})");
  CHECK(element_from_json(bare, &Q).is_coset());

  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"perm":[1,1]})")),
                  ParseError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"foo":1})")), ParseError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"mat":{"q":6,"rows":[[1]]}})")),
                  ParseError);
}

TEST_CASE("group encodings") {
  auto G = group_from_json(Json("Alt(8)"));
  CHECK(G.name == "Alt(8)");
  CHECK(G.structural);
  auto back = group_from_json(group_to_json(G));
  CHECK(back.name == G.name);
  CHECK(back.even_only);
  CHECK(back.generators == G.generators);

  auto custom = Json::parse(R"J({"name":"C3xC3","kind":"permutation","n":6,
    "generators":["(1,2,3)","(4,5,6)"]})J");
  auto C = group_from_json(custom);
  CHECK_FALSE(C.structural);
  CHECK(enumerate_group(C)->size() == 9);

  auto sl = group_from_json(Json::parse(R"J({"name":"SL(2,3)"})J"));
  CHECK(sl.det1);
  CHECK_THROWS(group_from_json(Json::parse(R"({"kind":"matrix"})")));
}

TEST_CASE("collection round trips") {
  for (const auto &c : {a8_p3(), symmetric_alternating(10, 5), sl42(),
                        linear_d_eq_1(2, 7, 3),
                        projective_linear(2, 7, 3, LinearKind::PGL)}) {
    auto j = construction_to_json(c);
    CHECK(j["schema"] == schema_version);
    CHECK(j["type"] == "collection");
    CHECK(j.contains("recipe"));
    same_collection(collection_from_json(j), c.collection);
    // and again through text
    same_collection(collection_from_json(Json::parse(j.dump())), c.collection);
  }
}

TEST_CASE("hand-written collection with cycle strings") {
  auto j = Json::parse(R"J({"group":"Alt(8)","p":3,
    "basis":["(1,2,3)","(4,5,6)"],"c":["(1,7)(2,3)","(4,8)(5,6)"]})J");
  auto C = collection_from_json(j);
  CHECK(C.maximality == MaximalityMode::Enumerate);
  CHECK(is_admissible(C).admissible);
}

TEST_CASE("reports carry schema and type") {
  auto C = a8_p3().collection;
  auto adm = admissible_report_to_json(is_admissible(C), C);
  CHECK(adm["type"] == "admissibility");
  CHECK(adm["admissible"] == true);
  auto cert = certificate_to_json(certify_nonzero_class(C));
  CHECK(cert["type"] == "certificate");
  CHECK(cert["independent_homology_check"] == "passed");
  auto hom = homology_to_json("Alt(8)", 3, qdp_check(alternating_group(8), 3));
  CHECK(hom["type"] == "homology");
  CHECK(hom["rank"] == 2);
  CHECK(hom["qdp"] == true);
  CHECK(hom["betti"].contains("1"));
  auto obs = obstruction_to_json(obstruction_family(LinearKind::GL, 2, 4, 3));
  CHECK(obs["type"] == "obstruction");
  for (const auto &r : {adm, cert, hom, obs})
    CHECK(r["schema"] == schema_version);
}
