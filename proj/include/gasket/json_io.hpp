#pragma once

#include <string>

#include <json.hpp>

#include "gasket/experiments.hpp"
#include "gasket/harmonic.hpp"
#include "gasket/oneform.hpp"
#include "gasket/piecewise.hpp"

namespace gasket {

// {"corners": ["1", "0", "0"]}
nlohmann::json harmonic_to_json(const Harmonic& h);
Harmonic harmonic_from_json(const nlohmann::json& j);

// {"level": n, "pieces": {"012": {"corners": [...]}, ...}}
nlohmann::json piecewise_to_json(const Piecewise& u);
Piecewise piecewise_from_json(const nlohmann::json& j);

// {"exact": <piecewise>, "loops": {"finite": {"0": "3/5"},
//  "rays": [{"base": "", "dir": 0, "a": "1", "phi": "3/5"}]}}
nlohmann::json oneform_to_json(const OneForm& w);
OneForm oneform_from_json(const nlohmann::json& j);

// {"name", "params", "sequence": [[m, "p/q"]], "limit", "verdict", "notes"}
nlohmann::json report_to_json(const ExperimentReport& r);

// Columns: m,value_num,value_den,limit,residual
std::string report_to_csv(const ExperimentReport& r);

}  // namespace gasket
