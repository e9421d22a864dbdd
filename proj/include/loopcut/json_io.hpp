#ifndef LOOPCUT_JSON_IO_HPP
#define LOOPCUT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "loopcut/cut.hpp"
#include "loopcut/frame.hpp"
#include "loopcut/landau.hpp"
#include "loopcut/oracle.hpp"
#include "loopcut/pinch.hpp"
#include "loopcut/strata.hpp"
#include "loopcut/types.hpp"

namespace loopcut {

using json = nlohmann::json;

/// Parse the config schema
/// {"n": int, "D": int, "masses": [float...],
///  "momenta": [[[re,im] x D] x (n-1)], "regulators": [[re,im]...]?}.
/// Complex numbers always serialize as [re, im] pairs.
/// Throws usage_error naming the offending field.
KinematicConfig config_from_json(const json& j);
KinematicConfig load_config(const std::string& path);

json to_json(const cdouble& z);
json to_json(const CVec& v);
json to_json(const KinematicConfig& config);
json to_json(const FrameReduction& fr);
json to_json(const PinchData& pd);
json to_json(const AlphaSolution& a);
json to_json(const LandauScan& scan);
json to_json(const ChannelQuadratic& q);
json to_json(const CutResult& r);
json to_json(const DiscExpansion& e);
json to_json(const WickProfile& w);
json to_json(const EuclideanResult& r);

}  // namespace loopcut

#endif  // LOOPCUT_JSON_IO_HPP
