#pragma once

#include <nlohmann/json.hpp>

#include "quatdirac/chains.hpp"
#include "quatdirac/dirac.hpp"
#include "quatdirac/weights.hpp"

namespace quatdirac::json_io {

using Json = nlohmann::ordered_json;

// Schemas:
//   Weight        [a, b, ...]
//   Chain         {"top": 15, "bottom": 13, "kind": "s"}
//   ChainSet      {"schains": [Chain...], "uchain": Chain | null}
//   RepParams     {"aq": [{"k": 2, "b": 13}, ...], "r": 4}
//   SpinLKTReport {"chains", "infchar", "slkt", "multiplicity", "fs_scattered",
//                  "dirac_weight", "candidates_examined"}
// Readers validate through the same constructors as the library and throw
// std::invalid_argument on malformed input.

Json to_json(const Weight& w);
Json to_json(const Chain& c);
Json to_json(const ChainSet& cs);
Json to_json(const RepParams& p);
Json to_json(const SpinLKTReport& r);
Json to_json(const SweepReport& r);

Weight weight_from_json(const Json& j);
Chain chain_from_json(const Json& j);
ChainSet chainset_from_json(const Json& j);
RepParams params_from_json(const Json& j);
SpinLKTReport report_from_json(const Json& j);

}  // namespace quatdirac::json_io
