#pragma once

#include <string>

#include <json.hpp>

#include "slicepoly/cube.hpp"

namespace slicepoly {

using Json = nlohmann::json;

/// {"p": int, "n": int, "terms": [{"mask": hex, "c": int}]} in canonical term order.
Json poly_to_json(const MultilinearPoly& p);
MultilinearPoly poly_from_json(const Json& j);

std::string to_hex(std::uint64_t mask);
/// Accepts an optional 0x prefix.
std::uint64_t from_hex(const std::string& s);

}  // namespace slicepoly
