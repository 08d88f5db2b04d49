#pragma once

#include <json.hpp>

#include "lctkit/criterion.hpp"
#include "lctkit/mpoly.hpp"
#include "lctkit/newton_polygon.hpp"
#include "lctkit/orderval.hpp"
#include "lctkit/qideal.hpp"
#include "lctkit/rootdata.hpp"
#include "lctkit/series.hpp"

namespace lctkit {

using Json = nlohmann::ordered_json;

// {"var":"t","ram":2,"trunc":"64","terms":[{"e":"3/2","c":"-4/1"}]}; trunc "inf" for exact data.
Json series_to_json(const PSeries& s);
PSeries series_from_json(const Json& j);

// {"vars":["z1","z2"],"terms":[{"exps":[2,0],"c":"1"}]}
Json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j);

// {"exp":"5/6","gens":[...]}; generators are expanded. The zero Q-ideal has no generators.
Json qideal_to_json(const PolyIdeal& a);
Json qideal_to_json(const SeriesIdeal& a);
PolyIdeal poly_qideal_from_json(const Json& j);
SeriesIdeal series_qideal_from_json(const Json& j);
Json qfrac_to_json(const QIdealFrac<MPoly>& f);
Json qfrac_to_json(const QIdealFrac<PSeries>& f);

// {"kind":"exact","value":"1"}, {"kind":"atleast","value":"64"}, {"kind":"inf"}
Json orderval_to_json(const OrderVal& v);
OrderVal orderval_from_json(const Json& j);

Json slopes_to_json(const NewtonPolygon& np);
Json diff_table_to_json(const DiffOrderTable& t);
Json decision_to_json(const LctDecision& d);

}  // namespace lctkit
