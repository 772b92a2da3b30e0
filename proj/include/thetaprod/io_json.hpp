#pragma once

#include <json.hpp>

#include "thetaprod/borcherds.hpp"
#include "thetaprod/cmroots.hpp"
#include "thetaprod/gram.hpp"
#include "thetaprod/multipoly.hpp"
#include "thetaprod/qseries.hpp"

namespace thetaprod {

using json = nlohmann::json;

// {"denom": d, "trunc": t, "terms": [[key, "num/den"], ...]}
json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const json& j);

// {"rank": n, "gram": [[...]], "even": true}
json gram_to_json(const GramMatrix& G);
GramMatrix gram_from_json(const json& j);

// {"modulus": 2|D|, "components": {"h": series, ...}, "scalarized": series}
json vvs_to_json(const VectorValuedSeries& F);

json multipoly_to_json(const MultiPoly& p);

json cm_report_to_json(const RootReport& r);

// human-readable expansion like "1 + 6q + 6q^3 + 12q^(13/4)"
std::string pretty_series(const QSeries& s, std::size_t max_terms = 0);

}  // namespace thetaprod
