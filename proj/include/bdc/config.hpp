#pragma once

#include "bdc/rmatrix.hpp"
#include "bdc/verify.hpp"

#include <string>

namespace bdc {

enum class Group { SL, GL };

// {
//   "n": 7, "group": "SL",
//   "rows": {"gamma1": [1,2,5], "gamma2": [1,3,4], "map": {"1": 4, "2": 3, "5": 1}},
//   "cols": {...},
//   "cartan": {"rows": ["1/2", ...], "cols": [...]},   // nullspace coefficients
//   "sample": {"seed": 1, "trials": 3, "bound": 3, "resample_limit": 200}
// }
// Omitted triples are empty. A document with a top-level "config" key (the
// output of `seed`) is read through that key.
struct Config {
    BDPair pair;
    Group group = Group::SL;
    std::vector<Rat> rows_cartan, cols_cartan;
    SamplePlan plan;
};

Config parse_config(const std::string& text);
Config load_config(const std::string& path);
nlohmann::json config_to_json(const Config& c);

// The canonical solution shifted by the configured nullspace coefficients.
CartanOp cartan_for(const BDTriple& t, const std::vector<Rat>& coeffs);
BracketSpec bracket_for(const Config& c, BracketKind kind, SlotOrder order);

}  // namespace bdc
