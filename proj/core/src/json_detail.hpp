#pragma once

// Internal helpers shared by json_io.cpp and script.cpp.

#include "gpforge/engine.hpp"
#include "gpforge/table_algebra.hpp"

#include <json.hpp>

namespace gpforge::detail {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const Element& e, std::size_t dim);
Json to_json(const Poly& p, std::string_view derivation);
Json to_json(const TableAlgebra& m);
Json to_json(const Certificate& c, std::string_view derivation);
Json to_json(const NotInSlice& n);
Json to_json(const CheckResult& r, std::size_t dim);

TableAlgebra model_from_json(const Json& j);
Certificate certificate_from_json(const Json& j, const OperationSignature& sig);

} // namespace gpforge::detail
