#include "unwrapforge/sources.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "unwrapforge/errors.hpp"

namespace unwrapforge {

void Range::validate(const char* name) const {
  if (!(min <= max))
    throw ConfigError(std::string("range '") + name + "': min must be <= max");
  if (!std::isfinite(min) || !std::isfinite(max))
    throw ConfigError(std::string("range '") + name + "': non-finite bound");
}

void SourceSamplerConfig::validate() const {
  center_east.validate("center_east");
  center_north.validate("center_north");
  depth.validate("depth");
  strike.validate("strike");
  dip.validate("dip");
  rake.validate("rake");
  slip.validate("slip");
  length.validate("length");
  width.validate("width");
  fracture_delta.validate("fracture_delta");
  fracture_anchor_east.validate("fracture_anchor_east");
  fracture_anchor_north.validate("fracture_anchor_north");
  if (p_two_sources < 0.0 || p_two_sources > 1.0)
    throw ConfigError("p_two_sources must be in [0, 1]");
  if (p_fracture_given_shallow < 0.0 || p_fracture_given_shallow > 1.0)
    throw ConfigError("p_fracture_given_shallow must be in [0, 1]");
  if (depth.min <= 0.0) throw ConfigError("depth range must be positive");
  if (dip.min <= 0.0 || dip.max > 90.0) throw ConfigError("dip range must lie in (0, 90]");
  if (slip.min < 0.0) throw ConfigError("slip range must be non-negative");
  if (length.min <= 0.0 || width.min <= 0.0)
    throw ConfigError("length/width ranges must be positive");
}

SampledSources sample_sources(const SourceSamplerConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  Rng rng(seed);
  SampledSources out;

  const int n_sources = (rng.uniform() < cfg.p_two_sources) ? 2 : 1;
  bool any_shallow = false;
  for (int k = 0; k < n_sources; ++k) {
    FaultSource s;
    s.center_east = cfg.center_east.sample(rng);
    s.center_north = cfg.center_north.sample(rng);
    s.depth = cfg.depth.sample(rng);
    s.strike = cfg.strike.sample(rng);
    s.dip = cfg.dip.sample(rng);
    s.rake = cfg.rake.sample(rng);
    s.slip = cfg.slip.sample(rng);
    s.length = cfg.length.sample(rng);
    s.width = cfg.width.sample(rng);
    s.validate();
    any_shallow = any_shallow || s.depth < cfg.shallow_depth_threshold;
    out.sources.push_back(s);
  }

  if (any_shallow && rng.uniform() < cfg.p_fracture_given_shallow) {
    FractureSpec f;
    f.anchor[0] = cfg.fracture_anchor_east.sample(rng);
    f.anchor[1] = cfg.fracture_anchor_north.sample(rng);
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    f.normal = {std::cos(theta), std::sin(theta)};
    f.delta = cfg.fracture_delta.sample(rng);
    f.validate();
    out.fractures.push_back(f);
  }
  return out;
}

static void range_to_json(nlohmann::json& j, const Range& r) {
  j = nlohmann::json{{"min", r.min}, {"max", r.max}};
}
static void range_from_json(const nlohmann::json& j, Range& r) {
  r.min = j.at("min").get<double>();
  r.max = j.at("max").get<double>();
}

void to_json(nlohmann::json& j, const SourceSamplerConfig& cfg) {
  nlohmann::json ranges;
  range_to_json(ranges["center_east"], cfg.center_east);
  range_to_json(ranges["center_north"], cfg.center_north);
  range_to_json(ranges["depth"], cfg.depth);
  range_to_json(ranges["strike"], cfg.strike);
  range_to_json(ranges["dip"], cfg.dip);
  range_to_json(ranges["rake"], cfg.rake);
  range_to_json(ranges["slip"], cfg.slip);
  range_to_json(ranges["length"], cfg.length);
  range_to_json(ranges["width"], cfg.width);
  range_to_json(ranges["fracture_delta"], cfg.fracture_delta);
  range_to_json(ranges["fracture_anchor_east"], cfg.fracture_anchor_east);
  range_to_json(ranges["fracture_anchor_north"], cfg.fracture_anchor_north);
  j = nlohmann::json{{"ranges", ranges},
                     {"p_two_sources", cfg.p_two_sources},
                     {"p_fracture_given_shallow", cfg.p_fracture_given_shallow},
                     {"shallow_depth_threshold", cfg.shallow_depth_threshold}};
}

void from_json(const nlohmann::json& j, SourceSamplerConfig& cfg) {
  if (j.contains("ranges")) {
    const auto& r = j.at("ranges");
    if (r.contains("center_east")) range_from_json(r.at("center_east"), cfg.center_east);
    if (r.contains("center_north")) range_from_json(r.at("center_north"), cfg.center_north);
    if (r.contains("depth")) range_from_json(r.at("depth"), cfg.depth);
    if (r.contains("strike")) range_from_json(r.at("strike"), cfg.strike);
    if (r.contains("dip")) range_from_json(r.at("dip"), cfg.dip);
    if (r.contains("rake")) range_from_json(r.at("rake"), cfg.rake);
    if (r.contains("slip")) range_from_json(r.at("slip"), cfg.slip);
    if (r.contains("length")) range_from_json(r.at("length"), cfg.length);
    if (r.contains("width")) range_from_json(r.at("width"), cfg.width);
    if (r.contains("fracture_delta")) range_from_json(r.at("fracture_delta"), cfg.fracture_delta);
    if (r.contains("fracture_anchor_east"))
      range_from_json(r.at("fracture_anchor_east"), cfg.fracture_anchor_east);
    if (r.contains("fracture_anchor_north"))
      range_from_json(r.at("fracture_anchor_north"), cfg.fracture_anchor_north);
  }
  cfg.p_two_sources = j.value("p_two_sources", cfg.p_two_sources);
  cfg.p_fracture_given_shallow =
      j.value("p_fracture_given_shallow", cfg.p_fracture_given_shallow);
  cfg.shallow_depth_threshold =
      j.value("shallow_depth_threshold", cfg.shallow_depth_threshold);
  cfg.validate();
}

void to_json(nlohmann::json& j, const FaultSource& s) {
  j = nlohmann::json{{"center_east", s.center_east}, {"center_north", s.center_north},
                     {"depth", s.depth},             {"strike", s.strike},
                     {"dip", s.dip},                 {"rake", s.rake},
                     {"slip", s.slip},               {"length", s.length},
                     {"width", s.width}};
}

void from_json(const nlohmann::json& j, FaultSource& s) {
  s.center_east = j.at("center_east").get<double>();
  s.center_north = j.at("center_north").get<double>();
  s.depth = j.at("depth").get<double>();
  s.strike = j.at("strike").get<double>();
  s.dip = j.at("dip").get<double>();
  s.rake = j.at("rake").get<double>();
  s.slip = j.at("slip").get<double>();
  s.length = j.at("length").get<double>();
  s.width = j.at("width").get<double>();
}

void to_json(nlohmann::json& j, const FractureSpec& f) {
  j = nlohmann::json{{"anchor", f.anchor}, {"normal", f.normal}, {"delta", f.delta}};
}

void from_json(const nlohmann::json& j, FractureSpec& f) {
  f.anchor = j.at("anchor").get<std::array<double, 2>>();
  f.normal = j.at("normal").get<std::array<double, 2>>();
  f.delta = j.at("delta").get<double>();
}

}  // namespace unwrapforge
