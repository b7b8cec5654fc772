#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "parcomp/classify.hpp"

namespace parcomp {

// Rationals are written as "p/q" strings ("p" when q = 1).
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(std::span<const Rational> v);
RatVector rational_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatMatrix& m);
nlohmann::json to_json(const RootSystem& rs);
nlohmann::json to_json(const SymmetricPair& pair);
nlohmann::json to_json(const StrictSystem& sys);
nlohmann::json to_json(const CompatibilityResult& result);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const CrossCheckReport& report);

// Header "pi;compatible;witness", one row per subset in canonical order.
std::string to_csv(const Classification& c);

}  // namespace parcomp
