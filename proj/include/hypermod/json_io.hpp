#pragma once
// JSON encodings shared by the catalog loader, reports and the CLI.

#include <json.hpp>

#include "hypermod/ball.hpp"
#include "hypermod/qfield.hpp"
#include "hypermod/rational.hpp"
#include "hypermod/series.hpp"

namespace hypermod {

using Json = nlohmann::json;

Json to_json(const Rational& q);  // "num/den"
Json to_json(const QuadFieldElem& a);
Json to_json(const Ball& b);
Json to_json(const PowerSeries& s);

QuadFieldElem qf_from_json(const Json& j);
PowerSeries series_from_json(const Json& j);
Ball ball_from_json(const Json& j);

}  // namespace hypermod
