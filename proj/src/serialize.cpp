#include "bpb/serialize.hpp"

namespace bpb {

using nlohmann::ordered_json;

ordered_json to_json(const PiWitness& w) {
  ordered_json j;
  j["y"] = to_json(w.y);
  j["g"] = to_json(w.g);
  j["distance"] = w.distance;
  return j;
}

ordered_json to_json(const PairState& p) {
  ordered_json j;
  j["x"] = to_json(p.x);
  j["f"] = to_json(p.f);
  j["norm_x"] = p.norm_x;
  j["norm_f"] = p.norm_f;
  j["action"] = p.action;
  return j;
}

ordered_json to_json(const Witness& w) {
  ordered_json j = to_json(w.pair);
  j["predicted"] = w.predicted;
  if (w.construction != 0) j["construction"] = w.construction;
  return j;
}

ordered_json to_json(const Estimate& e) {
  ordered_json j;
  j["value"] = e.value;
  j["mesh_error"] = e.mesh_error;
  return j;
}

ordered_json to_json(const AlphaReport& r) {
  ordered_json j;
  j["alpha"] = r.alpha;
  j["maximizer"] = {{"x", to_json(r.maximizer.first)}, {"y", to_json(r.maximizer.second)}};
  j["mesh_error"] = r.mesh_error;
  return j;
}

ordered_json to_json(const ConvexityReport& r) {
  ordered_json j;
  j["eps"] = r.eps;
  j["delta_x"] = r.delta_x;
  j["mesh_error"] = r.mesh_error;
  return j;
}

ordered_json to_json(const CorrectorResult& r) {
  ordered_json j = to_json(r.witness);
  j["bound_x"] = r.bound_x;
  j["bound_f"] = r.bound_f;
  j["slack_x"] = r.slack_x;
  j["slack_f"] = r.slack_f;
  j["resolution"] = r.resolution;
  return j;
}

}  // namespace bpb
