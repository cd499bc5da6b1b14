#pragma once

#include <json.hpp>

#include "bpb/moduli.hpp"
#include "bpb/pi_set.hpp"
#include "bpb/witnesses.hpp"

namespace bpb {

inline constexpr const char* kSchema = "bpb/1";

template <class Tag>
nlohmann::ordered_json to_json(const Coords<Tag>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (double c : v.values()) a.push_back(c);
  return a;
}

nlohmann::ordered_json to_json(const PiWitness& w);
nlohmann::ordered_json to_json(const PairState& p);
nlohmann::ordered_json to_json(const Witness& w);
nlohmann::ordered_json to_json(const Estimate& e);
nlohmann::ordered_json to_json(const AlphaReport& r);
nlohmann::ordered_json to_json(const ConvexityReport& r);
nlohmann::ordered_json to_json(const CorrectorResult& r);

}  // namespace bpb
