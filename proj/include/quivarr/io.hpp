#pragma once

#include "quivarr/equivariant.hpp"
#include "quivarr/liecheck.hpp"

#include <json.hpp>

#include <istream>
#include <string>

namespace quivarr {

using Json = nlohmann::json;

Arrangement parse_arrangement(std::istream& in);
std::string format_arrangement(const Arrangement& a);
Exponents parse_exponents(std::istream& in, size_t hyperplanes);
std::vector<AffineMap> parse_group(std::istream& in, size_t dim);

Quiver quiver_from_json(const Json& j, const GraphPtr& g);
Json to_json(const Quiver& q);
Json to_json(const Quiver& q, const SubquotientWitness& w);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, size_t rows, size_t cols);
Json to_json(const CohomologyReport& r);
Json to_json(const KZReport& r);

std::string read_file(const std::string& path);

}  // namespace quivarr
