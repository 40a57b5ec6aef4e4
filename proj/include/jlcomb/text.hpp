#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "jlcomb/gkring.hpp"
#include "jlcomb/global.hpp"
#include "jlcomb/lfactors.hpp"

namespace jlcomb {

/// Registry holding the self-dual unramified line "rho" with p = 1.
LineRegistry default_registry();

// Text syntax. On the inner-form side (d > 1) lines are written with a
// trailing quote and bounds are the centers of the first and last block.
std::string render(const LineRegistry& reg, const Segment& seg, int d);
std::string render(const LineRegistry& reg, const Multisegment& m, int d);
std::string render(const LineRegistry& reg, const VirtualRep& v);
std::string render(const LineRegistry& reg, const SpehUnit& u);
std::string render(const LineRegistry& reg, const UnitaryProduct& p);

Segment parse_segment(std::string_view text, const LineRegistry& reg, int d);
Multisegment parse_multisegment(std::string_view text, const LineRegistry& reg, int d);
VirtualRep parse_virtual(std::string_view text, const LineRegistry& reg, int d);

// JSON.
LineRegistry lines_from_json(const nlohmann::json& j);
nlohmann::json lines_to_json(const LineRegistry& reg);
nlohmann::json to_json(const LineRegistry& reg, const VirtualRep& v);
VirtualRep virtual_from_json(const nlohmann::json& j, const LineRegistry& reg, int d);
nlohmann::json to_json(const LineRegistry& reg, const UnitaryProduct& p, int d);
nlohmann::json to_json(const FormalLFactor& l);
nlohmann::json to_json(const LineRegistry& reg, const EpsilonFactor& e);
GlobalAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GlobalAlgebra& alg);
GlobalCuspidalData cuspidal_from_json(const nlohmann::json& j, const LineRegistry& reg);
nlohmann::json to_json(const LineRegistry& reg, const GlobalCuspidalData& rho);

}  // namespace jlcomb
