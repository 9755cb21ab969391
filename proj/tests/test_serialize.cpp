#include <catch_amalgamated.hpp>

#include <cosimplex/categories.hpp>
#include <cosimplex/corpus.hpp>
#include <cosimplex/serialize.hpp>

using namespace cosimplex;

namespace {

template <class T, class Parse>
T round_trip(const T& x, Parse parse) {
  auto text = document(x).dump();
  auto doc = parse_document_text(text);
  return parse(doc["data"], "/data");
}

}  // namespace

TEST_CASE("monotone maps and multimaps round-trip", "[serialize]") {
  auto f = MonotoneMap(3, {0, 0, 2});
  CHECK(round_trip(f, monotone_from_json) == f);
  MultiMap m({MonotoneMap::coface(2, 1), MonotoneMap::codegeneracy(0, 0)});
  CHECK(round_trip(m, multimap_from_json) == m);
  CHECK(document(f)["schema"] == kSchemaVersion);
}

TEST_CASE("simplicial sets round-trip", "[serialize]") {
  for (auto& x : {standard_simplex(1, 3), standard_simplex(2, 2), boundary(2, 3), horn(2, 1, 2), discrete(3, 1), empty_sset(2)})
    CHECK(round_trip(x, sset_from_json) == x);
  auto j = to_json(standard_simplex(1, 2));
  CHECK(j["dim_cap"] == 2);
  CHECK(j["simplices"][0].size() == 2);
  CHECK(j["faces"][1].size() == 2);
  CHECK(j["degeneracies"][2].empty());
}

TEST_CASE("simplicial maps round-trip and are checked", "[serialize]") {
  SSetMapDocument d{standard_simplex(1, 2), standard_simplex(2, 2), standard_simplex_map(MonotoneMap::coface(2, 0), 2)};
  auto back = sset_map_document_from_json(to_json(d));
  CHECK(back.map == d.map);
  CHECK(back.source == d.source);
  auto j = to_json(d);
  j["map"][0][0] = 2;
  j["map"][0][1] = 0;
  CHECK_THROWS_AS(sset_map_document_from_json(j), SimplicialIdentityError);
}

TEST_CASE("finite categories round-trip", "[serialize]") {
  auto c = category_of_simplices(boundary(2, 2)).cat;
  auto back = round_trip(c, fincat_from_json);
  CHECK(to_json(back) == to_json(c));
  FinCat d;
  d.add_object("a");
  d.add_morphism(0, 0);
  d.add_object("b");
  d.set_composite(1, 1, 1);
  CHECK(to_json(fincat_from_json(to_json(d))) == to_json(d));
}

TEST_CASE("multicosimplicial objects round-trip", "[serialize]") {
  auto delta2 = standard_multi(2, 2, 2);
  CHECK(round_trip(delta2, multicosimplicial_from_json) == delta2);
  auto one = standard_multi(1, 2, 3);
  CHECK(round_trip(one, multicosimplicial_from_json) == one);
  auto c = build_corpus(2, 1, 2, 3);
  for (auto& o : c.objects) CHECK(round_trip(o.value, multicosimplicial_from_json) == o.value);
  CHECK(to_json(delta2)["values"].contains("(1,2)"));
}

TEST_CASE("corrupt face table is rejected naming the identity", "[serialize]") {
  auto j = to_json(standard_simplex(2, 2));
  // swap d_0 and d_1 on the 2-simplex: faces of the nondegenerate triangle become inconsistent
  auto& f = j["faces"][2];
  std::swap(f[0], f[1]);
  try {
    sset_from_json(j);
    FAIL("accepted a corrupt face table");
  } catch (const SimplicialIdentityError& e) {
    CHECK(std::string(e.what()).find("simplicial identity d_") != std::string::npos);
  }
}

TEST_CASE("corrupt generator maps are rejected naming the relation", "[serialize]") {
  auto j = to_json(standard_multi(1, 2, 1));
  auto& gens = j["maps"]["(0)"];
  gens[0]["map"] = gens[1]["map"];
  CHECK_THROWS_AS(multicosimplicial_from_json(j), FunctorialityError);
}

TEST_CASE("malformed documents carry a location", "[serialize]") {
  try {
    parse_document_text("{\"schema\": ");
    FAIL("accepted truncated text");
  } catch (const SchemaError& e) {
    CHECK(e.path().rfind("byte ", 0) == 0);
  }
  auto j = to_json(standard_simplex(1, 1));
  j["faces"][1][0] = "x";
  try {
    sset_from_json(j);
    FAIL("accepted a string face table");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "/faces/1/0");
  }
  auto doc = document(standard_simplex(1, 1));
  doc["schema"] = "other/9";
  CHECK_THROWS_AS(validate_document(doc), SchemaError);
  doc = document(standard_simplex(1, 1));
  doc["data"].erase("faces");
  try {
    validate_document(doc);
    FAIL("accepted a document without faces");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("faces") != std::string::npos);
  }
}
