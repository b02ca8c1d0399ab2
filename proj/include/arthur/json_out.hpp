#pragma once

#include <json.hpp>

#include "arthur/compgroup.hpp"
#include "arthur/endoscopy.hpp"
#include "arthur/levi.hpp"
#include "arthur/packets.hpp"

namespace arthur {

using Json = nlohmann::ordered_json;

Json to_json(const ParityDecomposition& d, const ArthurParameter& psi);
Json compgroup_json(const ArthurParameter& psi);
Json to_json(const std::vector<EndoscopicDatum>& data, const GroupDescriptor& g);
Json levi_json(const GroupDescriptor& g, int c);
Json to_json(const PacketTable& packet);

std::string pretty_packet(const PacketTable& packet);

}  // namespace arthur
