#include "matroot/pseries/export.hpp"

#include <ostream>
#include <stdexcept>

namespace matroot::pseries {

void write_csv(std::ostream& out, const CoeffTable& table) {
  out << "k,i,numerator,denominator\n";
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const auto& row = table.rows[k];
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << k << ',' << i << ',' << row[i].get_num().get_str() << ',' << row[i].get_den().get_str() << '\n';
    }
  }
}

nlohmann::json to_json(const Rational& q) {
  return {{"numerator", q.get_num().get_str()}, {"denominator", q.get_den().get_str()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  return make_rational(BigInt(j.at("numerator").get<std::string>()),
                       BigInt(j.at("denominator").get<std::string>()));
}

nlohmann::json to_json(const CoeffTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : table.rows[k].coeffs()) coeffs.push_back(to_json(c));
    rows.push_back({{"k", k}, {"coeffs", std::move(coeffs)}});
  }
  return {{"p", table.p}, {"m", table.m}, {"order", table.order}, {"rows", std::move(rows)}};
}

CoeffTable coeff_table_from_json(const nlohmann::json& doc) {
  CoeffTable table;
  table.p = doc.at("p").get<int>();
  table.m = doc.at("m").get<int>();
  table.order = doc.at("order").get<std::size_t>();
  for (const auto& row : doc.at("rows")) {
    std::vector<Rational> coeffs;
    for (const auto& c : row.at("coeffs")) coeffs.push_back(rational_from_json(c));
    if (coeffs.size() != table.order + 1) throw std::invalid_argument("row length does not match order");
    table.rows.emplace_back(std::move(coeffs));
  }
  return table;
}

}  // namespace matroot::pseries
