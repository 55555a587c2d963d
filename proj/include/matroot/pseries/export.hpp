#pragma once

#include <iosfwd>

#include <json.hpp>

#include "matroot/pseries/iterates.hpp"

namespace matroot::pseries {

/// Header `k,i,numerator,denominator`, then one line per coefficient.
void write_csv(std::ostream& out, const CoeffTable& table);

/// {"p", "m", "order", "rows": [{"k", "coeffs": [{"numerator", "denominator"}, ...]}]}.
/// Integers are emitted as decimal strings.
nlohmann::json to_json(const CoeffTable& table);
CoeffTable coeff_table_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace matroot::pseries
