#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <json.hpp>

#include "engel/catalog.hpp"
#include "engel/errors.hpp"

using namespace engel;
using nlohmann::json;

TEST_CASE("builtin registries construct and have the expected orders") {
  for (const auto& name : cat::builtin_lie_names()) {
    CAPTURE(name);
    REQUIRE(cat::builtin_lie(name)->dim() > 0);
  }
  for (const auto& name : cat::small_group_names()) {
    CAPTURE(name);
    auto G = cat::builtin_group(name);
    REQUIRE(G->order() >= 2);
    REQUIRE(G->order() <= 1000);
  }
  REQUIRE(cat::builtin_group("psl3:3")->order() == 5616);
  REQUIRE(cat::builtin_group("alt:5*alt:5")->order() == 3600);
  REQUIRE(cat::builtin_group("a5-conj12")->order() == 120);
  REQUIRE(cat::builtin_group("a5xa5-swap")->order() == 7200);
  REQUIRE_THROWS_AS((void)cat::builtin_group("nope:3"), BadParams);
  REQUIRE_THROWS_AS((void)cat::builtin_lie("nope"), BadParams);
}

TEST_CASE("Suzuki group loads from the data directory") {
  auto loaded = cat::ingest(cat::data_dir() + "/sz8.json");
  REQUIRE(loaded.group != nullptr);
  REQUIRE(loaded.lie == nullptr);
  REQUIRE(loaded.group->order() == 29120);
  REQUIRE(cat::builtin_group("sz:8")->order() == 29120);
}

TEST_CASE("field specs round-trip through JSON") {
  for (auto spec : {fields::FieldSpec::Q(), fields::FieldSpec::GF(7),
                    fields::FieldSpec::GFext(2, 3, {1, 1, 0, 1})}) {
    auto j = cat::field_to_json(spec);
    auto back = cat::field_from_json(j, "test");
    REQUIRE(cat::field_to_json(back) == j);
  }
  REQUIRE_THROWS_AS((void)cat::field_from_json(json{{"kind", "octonions"}}, "test"),
                    SchemaError);
}

TEST_CASE("Lie algebras export and ingest bit-exactly") {
  for (const char* name : {"sl2", "jacobson:5", "witt:7", "sl2+b2"}) {
    CAPTURE(name);
    auto L = cat::builtin_lie(name);
    json j1 = cat::lie_to_json(*L);
    auto L2 = cat::lie_from_json(j1, "roundtrip");
    REQUIRE(L2->dim() == L->dim());
    REQUIRE(cat::lie_to_json(*L2) == j1);
  }
}

TEST_CASE("groups export and ingest bit-exactly") {
  for (const char* name : {"sym:4", "psl2:7", "sym:3*sym:3"}) {
    CAPTURE(name);
    auto G = cat::builtin_group(name);
    json j1 = cat::group_to_json(*G);
    auto G2 = cat::group_from_json(j1, "roundtrip");
    REQUIRE(G2->order() == G->order());
    REQUIRE(cat::group_to_json(*G2) == j1);
  }
}

TEST_CASE("file round-trip through save and ingest") {
  const std::string path = "roundtrip_tmp.json";
  auto L = cat::builtin_lie("jacobson:5");
  cat::save_json_file(path, cat::lie_to_json(*L));
  auto loaded = cat::ingest(path);
  REQUIRE(loaded.lie != nullptr);
  REQUIRE(cat::lie_to_json(*loaded.lie) == cat::lie_to_json(*L));

  auto G = cat::builtin_group("sl2:3");
  cat::save_json_file(path, cat::group_to_json(*G));
  auto loaded2 = cat::ingest(path);
  REQUIRE(loaded2.group != nullptr);
  REQUIRE(loaded2.group->order() == 24);
  std::remove(path.c_str());

  REQUIRE_THROWS_AS((void)cat::ingest("no_such_file.json"), SchemaError);
}

TEST_CASE("Lie schema violations are reported") {
  json base = {{"field", {{"kind", "rationals"}}},
               {"dim", 3u},
               {"table", json::array({json{{"i", 0}, {"j", 1},
                                           {"c", json::array({json{{"k", 2}, {"v", "1"}}})}}})}};

  {
    json j = base;
    j["table"].push_back(j["table"][0]);  // duplicate (0,1)
    REQUIRE_THROWS_AS((void)cat::lie_from_json(j, "test"), SchemaError);
  }
  {
    json j = base;
    j["table"][0]["j"] = 0;  // needs i < j
    REQUIRE_THROWS_AS((void)cat::lie_from_json(j, "test"), SchemaError);
  }
  {
    json j = base;
    j["table"][0]["c"][0]["k"] = 9;  // index out of range
    REQUIRE_THROWS_AS((void)cat::lie_from_json(j, "test"), SchemaError);
  }
  {
    // [a,b] = c, [a,c] = a violates Jacobi; the error names the basis
    json j = base;
    j["basis"] = json::array({"a", "b", "c"});
    j["table"].push_back(
        json{{"i", 0}, {"j", 2}, {"c", json::array({json{{"k", 0}, {"v", "1"}}})}});
    try {
      (void)cat::lie_from_json(j, "test");
      REQUIRE(false);
    } catch (const ValidationError& e) {
      std::string msg = e.what();
      REQUIRE(msg.find("Jacobi") != std::string::npos);
      REQUIRE(msg.find("a") != std::string::npos);
    }
  }
}

TEST_CASE("group schema violations are reported") {
  json base = {{"representation", "permutation"},
               {"degree", 4u},
               {"generators", json::array({"(1 2)", "(1 2 3 4)"})}};
  {
    json j = base;
    j["generators"].push_back("(1 5)");  // out of range for degree 4
    REQUIRE_THROWS_AS((void)cat::group_from_json(j, "test"), SchemaError);
  }
  {
    json j = base;
    j["order_check"] = 25;  // S4 has order 24
    REQUIRE_THROWS_AS((void)cat::group_from_json(j, "test"), ValidationError);
  }
  {
    json j = base;
    j["representation"] = "monoid";
    REQUIRE_THROWS_AS((void)cat::group_from_json(j, "test"), SchemaError);
  }
  REQUIRE_THROWS_AS((void)cat::group_from_json(base, "test", 10), OrderExceedsCap);
}
