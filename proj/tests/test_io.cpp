#include "doctest.h"
#include "mv/errors.hpp"
#include "mv/io.hpp"

using namespace mv;
using io::Json;

TEST_CASE("polytope JSON is bit-exact") {
  auto rs = RootSystem::make("A2");
  auto p = MVPolytope::from_base_lengths(rs, DominantLabels({1, 1}), {1, 0, 0});
  CHECK(io::polytope_to_json(p).dump() == R"({"series":"A","rank":2,"lambda":[1,1],"base_word":[1,2,1],"N":[1,0,0]})");
}

TEST_CASE("vertex block uses rational strings") {
  auto rs = RootSystem::make("A2");
  auto p = MVPolytope::from_base_lengths(rs, DominantLabels({1, 0}), {1, 0, 0});
  const Json j = io::polytope_to_json(p, true);
  REQUIRE(j.contains("vertices"));
  CHECK(j["vertices"].size() == 6);
  CHECK(j["vertices"][0]["w"] == Json::array());
  CHECK(j["vertices"][0]["mu"] == Json::array({"-1/3", "1/3"}));
}

TEST_CASE("polytope JSON roundtrip") {
  auto rs = RootSystem::make("A3");
  for (const auto& p : enumerate_mv(rs, DominantLabels({1, 0, 1})).elements) {
    CHECK(io::polytope_from_json(io::polytope_to_json(p), rs) == p);
    CHECK(io::polytope_from_json(Json::parse(io::polytope_to_json(p, true).dump())) == p);
  }
}

TEST_CASE("polytope JSON on a non-base word") {
  auto j = Json::parse(R"({"series":"A","rank":2,"lambda":[1,1],"base_word":[2,1,2],"N":[0,0,1]})");
  auto p = io::polytope_from_json(j);
  CHECK(p.lengths() == Lengths{1, 0, 0});
}

TEST_CASE("polytope JSON errors") {
  auto bad = [](const char* text) { return io::polytope_from_json(Json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"series":"A","rank":2,"lambda":[1,1],"base_word":[1,2,1]})"), ConfigError);
  CHECK_THROWS_AS(bad(R"({"series":"B","rank":2,"lambda":[1,1],"base_word":[1,2,1],"N":[0,0,0]})"), ConfigError);
  CHECK_THROWS_AS(bad(R"({"series":"A","rank":2,"lambda":[1,1],"base_word":[1,2,2],"N":[0,0,0]})"), ConfigError);
  CHECK_THROWS_AS(bad(R"({"series":"A","rank":2,"lambda":[1,1],"base_word":[1,2,3],"N":[0,0,0]})"), ConfigError);
  CHECK_THROWS_AS(bad(R"({"series":"A","rank":2,"lambda":[1,1],"base_word":[1,2,1],"N":[2,0,0]})"), ConfigError);
  CHECK_THROWS_AS(bad(R"({"series":"A","rank":2,"lambda":[1],"base_word":[1,2,1],"N":[0,0,0]})"), ConfigError);
  CHECK_THROWS_AS(bad(R"({"series":"A","rank":2,"lambda":[1,-1],"base_word":[1,2,1],"N":[0,0,0]})"), ConfigError);
  CHECK_THROWS_AS(bad(R"({"series":"A","rank":2,"lambda":"x","base_word":[1,2,1],"N":[0,0,0]})"), ConfigError);
  CHECK_THROWS_AS(bad(R"({"series":"A","rank":2,"lambda":[1,1],"base_word":[1,2,1],"N":[0,0]})"), ConfigError);
}

TEST_CASE("crystal JSON") {
  auto rs = RootSystem::make("A2");
  auto c = enumerate_mv(rs, DominantLabels({1, 1}));
  const Json j = io::crystal_to_json(c);
  CHECK(j["size"] == 8);
  CHECK(j["elements"].size() == 8);
  CHECK(j["elements"][0].dump() ==
        R"({"series":"A","rank":2,"lambda":[1,1],"base_word":[1,2,1],"N":[0,0,0],"crystal_path":[]})");
  CHECK(j["elements"][1]["crystal_path"] == Json::array({1}));
}

TEST_CASE("label parsing") {
  CHECK(io::parse_labels("1,0,2") == std::vector<int>{1, 0, 2});
  CHECK(io::parse_labels("7") == std::vector<int>{7});
  CHECK_THROWS_AS(io::parse_labels(""), ConfigError);
  CHECK_THROWS_AS(io::parse_labels("1,,2"), ConfigError);
  CHECK_THROWS_AS(io::parse_labels("-1"), ConfigError);
  CHECK_THROWS_AS(io::parse_labels("1.5"), ConfigError);
  CHECK_THROWS_AS(io::parse_labels("1,"), ConfigError);
}

TEST_CASE("vertex table") {
  auto rs = RootSystem::make("A2");
  const std::string t = io::format_vertex_table(highest_mv(rs, DominantLabels({1, 0})));
  CHECK(t.find("mu_e = (2/3, 1/3)") != std::string::npos);
  CHECK(t.find("mu_s1s2s1 = (2/3, 1/3)") != std::string::npos);
}
