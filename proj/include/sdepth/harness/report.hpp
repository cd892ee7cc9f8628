#pragma once

#include <json.hpp>

#include "sdepth/depth/configuration.hpp"
#include "sdepth/selection/crossing.hpp"
#include "sdepth/selection/verify.hpp"
#include "sdepth/tverberg/tverberg.hpp"

namespace sdepth::harness {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Rational& r);          // {"num", "den"}
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json to_json(const geom::Point& p);
nlohmann::json to_json(const depth::DepthReport& r); // counts, exact fraction, decimal
nlohmann::json to_json(const depth::MCEstimate& e);
nlohmann::json to_json(const selection::BoundSpec& b);
nlohmann::json to_json(const selection::DeepPointResult& r);
nlohmann::json to_json(const selection::VerificationReport& r);
nlohmann::json to_json(const selection::McVerificationReport& r);
nlohmann::json to_json(const tverberg::TverbergCertificate& c);

} // namespace sdepth::harness
