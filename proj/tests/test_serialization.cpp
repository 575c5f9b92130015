// JSON round-trips for posets, categories, functors, cells, and reports,
// plus the DOT renderings. Serialized forms of the worked examples must
// come back structurally identical.

#include <catch2/catch_amalgamated.hpp>

#include "graycube/dot.hpp"
#include "graycube/graycube.hpp"

using namespace graycube;

TEST_CASE("posets survive the JSON round trip") {
  for (const FinitePoset& p :
       {interval(3), product(interval(1), interval(2)),
        cube_hom(3, "000", "111"), FinitePoset{}}) {
    const json j = poset_to_json(p);
    REQUIRE(poset_from_json(j) == p);
  }
}

TEST_CASE("tampered poset JSON is rejected") {
  json j = poset_to_json(interval(1));

  SECTION("unknown element in a relation pair") {
    j["leq"].push_back(json::array({"0", "7"}));
    CHECK_THROWS_AS(poset_from_json(j), std::invalid_argument);
  }
  SECTION("malformed pair shape") {
    j["leq"].push_back(json::array({"0"}));
    CHECK_THROWS_AS(poset_from_json(j), std::invalid_argument);
  }
  SECTION("missing keys") {
    j.erase("elements");
    CHECK_THROWS_AS(poset_from_json(j), json::exception);
  }
  SECTION("a dropped reflexive pair yields an invalid poset, not a crash") {
    json rel = json::array();
    for (const auto& entry : j["leq"])
      if (entry[0] != "0" || entry[1] != "0") rel.push_back(entry);
    j["leq"] = rel;
    CHECK_FALSE(poset_from_json(j).check().empty());
  }
}

TEST_CASE("categories round-trip with their composition tables") {
  for (const TwoCategory& c :
       {build_cube(0), build_cube(2), build_theta(parse_shape("[1;2]")),
        build_theta(parse_shape("[2;0,1]"))}) {
    const json j = category_to_json(c);
    const TwoCategory back = category_from_json(j);
    REQUIRE(equal_categories(c, back));
    REQUIRE(check_axioms(back).ok());
  }
}

TEST_CASE("a category serialized without composition still exposes homs") {
  const TwoCategory cube = build_cube(2);
  const json j = category_to_json(cube, false);
  REQUIRE_FALSE(j.contains("compose"));
  const TwoCategory back = category_from_json(j);
  CHECK(back.hom("00", "11") == cube.hom("00", "11"));
  CHECK_THROWS_AS(back.compose("00", "00", "11", "id", "2<1"),
                  std::invalid_argument);
}

TEST_CASE("tampered category JSON is rejected") {
  json j = category_to_json(build_cube(1));

  SECTION("bad hom key") {
    j["homs"]["0|1|2"] = j["homs"]["0|1"];
    CHECK_THROWS_AS(category_from_json(j), std::invalid_argument);
  }
  SECTION("missing identity") {
    j["identities"].erase("0");
    CHECK_THROWS_AS(category_from_json(j), std::invalid_argument);
  }
  SECTION("compose rows that are not triples") {
    j["compose"]["0|0|1"] = json::array({json::array({"id", "1"})});
    CHECK_THROWS_AS(category_from_json(j), std::invalid_argument);
  }
}

TEST_CASE("functors round-trip against their endpoints") {
  const ThetaShape shape = parse_shape("[1;2]");
  const TwoCategory theta = build_theta(shape);
  const TwoCategory cube = build_cube(shape.dim());
  const TwoFunctor s = section(theta, cube, shape);
  const TwoFunctor r = retraction(cube, theta, shape);

  const TwoFunctor s2 = functor_from_json(functor_to_json(s), theta, cube);
  const TwoFunctor r2 = functor_from_json(functor_to_json(r), cube, theta);
  CHECK(equal_functors(s, s2));
  CHECK(equal_functors(r, r2));
  CHECK(check_functor(s2).ok());
  CHECK(check_functor(r2).ok());
  // And the round-tripped pair still splits the identity.
  CHECK(equal_functors(compose_functors(s2, r2), identity_functor(theta)));
}

TEST_CASE("cells round-trip with their ambient dimension") {
  const OneCell cell{"000", "111", "2<1<3"};
  const json j = cell_to_json(3, cell);
  CHECK(j["order"] == json::array({2, 1, 3}));
  const auto [dim, back] = cell_from_json(j);
  CHECK(dim == 3);
  CHECK(back == cell);

  const json id = cell_to_json(2, OneCell{"01", "01", "id"});
  CHECK(id["order"].empty());
  CHECK(cell_from_json(id).second.cell == "id");

  json bad = j;
  bad["order"] = json::array({1, 1});
  CHECK_THROWS_AS(cell_from_json(bad), std::invalid_argument);
}

TEST_CASE("retract reports serialize every verdict") {
  const RetractReport rep = verify_retract(parse_shape("[1;1]"));
  const json j = retract_report_to_json(rep);
  CHECK(j["shape"] == "[1;1]");
  CHECK(j["dim"] == 2);
  CHECK(j["ok"] == true);
  CHECK(j["section_ok"] == true);
  CHECK(j["retraction_ok"] == true);
  CHECK(j["composite_identity"] == true);
  CHECK(j["idempotent_ok"] == true);
  CHECK(j["witnesses"].empty());
  CHECK(j["section_functor"]["objects"]["0"] == "00");
  CHECK(j["section_functor"]["objects"]["1"] == "11");
  CHECK(j["retraction_functor"]["homs"]["00|11"]["2<1"] == "0");
  CHECK(j["retraction_functor"]["homs"]["00|11"]["1<2"] == "1");
}

TEST_CASE("gray reports key their checks by name") {
  const json j = gray_report_to_json(verify_gray_relations(1, 1));
  CHECK(j["m"] == 1);
  CHECK(j["n"] == 1);
  CHECK(j["ok"] == true);
  for (const std::string name :
       {"first_embeddings", "second_embeddings", "interchanger_cells",
        "degeneracy_left", "degeneracy_right", "composition_left",
        "composition_right", "naturality_left", "naturality_right"}) {
    REQUIRE(j["checks"].contains(name));
    CHECK(j["checks"][name]["ok"] == true);
  }
}

TEST_CASE("violation reports carry kind and detail") {
  Report rep;
  rep.add("unit", "id;f = g != f");
  const json j = report_to_json(rep);
  CHECK(j["ok"] == false);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["kind"] == "unit");
  CHECK(j["violations"][0]["detail"] == "id;f = g != f");
}

TEST_CASE("DOT output lists nodes then covering edges") {
  CHECK(poset_to_dot(cube_hom(2, "00", "11")) ==
        "digraph hom {\n"
        "  rankdir=BT;\n"
        "  \"1<2\";\n"
        "  \"2<1\";\n"
        "  \"2<1\" -> \"1<2\";\n"
        "}\n");
  CHECK(cube_skeleton_to_dot(2) ==
        "digraph cube {\n"
        "  rankdir=BT;\n"
        "  \"00\";\n"
        "  \"01\";\n"
        "  \"10\";\n"
        "  \"11\";\n"
        "  \"00\" -> \"10\" [label=\"1\"];\n"
        "  \"00\" -> \"01\" [label=\"2\"];\n"
        "  \"01\" -> \"11\" [label=\"1\"];\n"
        "  \"10\" -> \"11\" [label=\"2\"];\n"
        "}\n");
}
