#include <doctest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "quatdirac/dirac.hpp"
#include "quatdirac/json_io.hpp"

using namespace quatdirac;
using json_io::Json;

TEST_CASE("chain and chain set encoding") {
  CHECK(json_io::to_json(Chain::s(15, 13)).dump() == R"({"top":15,"bottom":13,"kind":"s"})");
  const ChainSet cs({Chain::s(2), Chain::u(1)});
  CHECK(json_io::to_json(cs).dump() ==
        R"({"schains":[{"top":2,"bottom":2,"kind":"s"}],"uchain":{"top":1,"bottom":1,"kind":"u"}})");
  CHECK(json_io::to_json(ChainSet({Chain::s(3, 1)})).dump() ==
        R"({"schains":[{"top":3,"bottom":1,"kind":"s"}],"uchain":null})");
  CHECK(json_io::chainset_from_json(json_io::to_json(cs)) == cs);
  CHECK(json_io::to_json(RepParams{{{2, 12}, {1, 1}}, 4}).dump() ==
        R"({"aq":[{"k":2,"b":12},{"k":1,"b":1}],"r":4})");
  const RepParams p{{{2, 12}, {5, 5}}, 4};
  CHECK(json_io::params_from_json(json_io::to_json(p)) == p);
}

TEST_CASE("report round trip") {
  const SpinLKTReport r = slkt(DiracSeriesRep(ChainSet({Chain::s(15, 13), Chain::s(14, 6), Chain::s(2), Chain::u(4)})));
  const Json j = json_io::to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"chains", "infchar", "slkt", "multiplicity", "fs_scattered",
                                         "dirac_weight", "candidates_examined"});
  CHECK(json_io::report_from_json(j) == r);
  CHECK(json_io::report_from_json(Json::parse(j.dump())) == r);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(json_io::chain_from_json(Json::parse(R"({"top":3,"bottom":1})")), std::invalid_argument);
  CHECK_THROWS_AS(json_io::chain_from_json(Json::parse(R"({"top":3,"bottom":1,"kind":"x"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(json_io::chain_from_json(Json::parse(R"({"top":3,"bottom":2,"kind":"s"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(json_io::chainset_from_json(Json::parse(R"({"schains":[{"top":3,"bottom":1,"kind":"u"}],"uchain":null})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(json_io::weight_from_json(Json::parse(R"([1,"a"])")), std::invalid_argument);
  CHECK_THROWS_AS(json_io::params_from_json(Json::parse(R"({"aq":[{"k":0,"b":1}],"r":0})")),
                  std::invalid_argument);
}
