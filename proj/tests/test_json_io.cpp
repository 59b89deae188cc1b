#include <doctest.h>

#include "ty/json_io.hpp"

using namespace ty;

TEST_CASE("scalars round trip through JSON") {
  for (const Cyclo& s : {Cyclo(0), Cyclo(Rational(-3, 7)), Cyclo::i(), Cyclo::zeta(8, 3), sqrt_int(2, 8),
                         Cyclo::zeta(12, 1) + Cyclo(Rational(1, 2)), Cyclo::zeta(15, 4)})
    CHECK(cyclo_from_json(to_json(s)) == s);
}

TEST_CASE("scalars are written in their smallest field") {
  const Json j = to_json(Cyclo::zeta(8, 2).promote(24));
  CHECK(j["M"] == 4);
  CHECK(to_json(Cyclo(5).promote(12))["M"] == 1);
}

TEST_CASE("text sugar") {
  CHECK(cyclo_from_json(Json("z(8)^3")) == Cyclo::zeta(8, 3));
  CHECK(cyclo_from_json(Json(-2)) == Cyclo(-2));
  CHECK(cyclo_from_json(Json::parse(R"({"M": 4, "c": [[0, 1], [1, 1]]})")) == Cyclo::i());
  CHECK_THROWS_AS(cyclo_from_json(Json::parse(R"({"M": 4, "c": [[1, 1]]})")), JsonError);
  CHECK_THROWS_AS(cyclo_from_json(Json::parse(R"({"M": 4, "c": [[1, 0], [1, 1]]})")), JsonError);
  CHECK_THROWS_AS(cyclo_from_json(Json(true)), JsonError);
}

TEST_CASE("data and tables round trip") {
  for (const auto& [c, o] : std::vector<std::pair<Case, std::vector<int>>>{
           {Case::Split, {2, 2}}, {Case::Quaternionic, {2}}, {Case::RealComplex, {3}}, {Case::ComplexGalois, {2}}}) {
    for (const auto& d : classify(c, o).admissible) {
      const TYData back = data_from_json(to_json(d));
      CHECK(back.kase == d.kase);
      CHECK(back.g_conj == d.g_conj);
      CHECK(back.chi == d.chi);
      CHECK(effective_tau(back) == effective_tau(d));
      const CoeffTable t = build(d);
      CHECK(table_from_json(to_json(t)) == t);
      CHECK(to_json(table_from_json(to_json(t))).dump() == to_json(t).dump());
    }
  }
}

TEST_CASE("groups round trip") {
  for (const Group& G : {Group::abelian({2, 4}), Group::dihedral({3}), Group()}) {
    const Group H = group_from_json(to_json(G));
    REQUIRE(H.size() == G.size());
    for (int a = 0; a < G.size(); ++a) {
      CHECK(H.deg(a) == G.deg(a));
      for (int b = 0; b < G.size(); ++b) CHECK(H.mul(a, b) == G.mul(a, b));
    }
  }
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(data_from_json(Json::parse(R"({"case": "nonsense"})")), JsonError);
  CHECK_THROWS_AS(data_from_json(Json::parse(R"({"case": "split", "group": {"cyclic": [2]}, "chi": [[1]]})")), JsonError);
  Json t = to_json(build(classify(Case::Split, {2}).admissible.front()));
  t["tables"].erase("gamma");
  CHECK_THROWS_AS(table_from_json(t), JsonError);
}

TEST_CASE("gauges and witnesses serialize") {
  const auto cl = classify(Case::RealComplex, {2});
  const auto w = decide_equiv(cl.admissible.front(), cl.admissible.front());
  REQUIRE(w);
  const Json j = to_json(*w);
  CHECK(j.contains("f"));
  CHECK(j.contains("lambda"));
  const GaugeTuple g = gauge_from_json(j["tensorator"], Case::RealComplex, cl.admissible.front().group.size());
  CHECK(to_json(g) == j["tensorator"]);
}
