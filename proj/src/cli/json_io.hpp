#pragma once

#include <string>

#include "circalg/cli/document.hpp"
#include "json.hpp"

namespace circalg::cli {

using json = nlohmann::json;

json encode(Complex z);
json encode(const Rational& q);
Complex decode_complex(const json& j, const std::string& field);
Rational decode_rational(const json& j, const std::string& field);

json to_json(const MatrixDocument& doc);
MatrixDocument from_json(const json& j);

}  // namespace circalg::cli
