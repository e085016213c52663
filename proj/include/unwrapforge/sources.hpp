#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "unwrapforge/okada.hpp"
#include "unwrapforge/rng.hpp"

namespace unwrapforge {

struct Range {
  double min = 0.0;
  double max = 0.0;
  void validate(const char* name) const;  // throws ConfigError when min > max
  double sample(Rng& rng) const { return min + (max - min) * rng.uniform(); }
};

struct SourceSamplerConfig {
  Range center_east{-12000.0, 12000.0};
  Range center_north{-12000.0, 12000.0};
  Range depth{800.0, 12000.0};
  Range strike{0.0, 360.0};
  Range dip{30.0, 89.0};
  Range rake{-180.0, 180.0};
  Range slip{0.2, 3.0};
  Range length{3000.0, 15000.0};
  Range width{2000.0, 8000.0};
  double p_two_sources = 0.3;
  double p_fracture_given_shallow = 0.5;
  double shallow_depth_threshold = 4000.0;  // m, top-edge depth
  Range fracture_delta{-3.0, 3.0};
  Range fracture_anchor_east{-10000.0, 10000.0};
  Range fracture_anchor_north{-10000.0, 10000.0};

  void validate() const;
};

struct SampledSources {
  std::vector<FaultSource> sources;     // 1 or 2
  std::vector<FractureSpec> fractures;  // 0 or 1
};

// Deterministic given the seed: the draw order is fixed (two-source coin,
// then each source field in declaration order, then the fracture coin and
// fracture fields). A fracture can only accompany a shallow source.
SampledSources sample_sources(const SourceSamplerConfig& cfg, std::uint64_t seed);

void to_json(nlohmann::json& j, const SourceSamplerConfig& cfg);
void from_json(const nlohmann::json& j, SourceSamplerConfig& cfg);
void to_json(nlohmann::json& j, const FaultSource& s);
void from_json(const nlohmann::json& j, FaultSource& s);
void to_json(nlohmann::json& j, const FractureSpec& f);
void from_json(const nlohmann::json& j, FractureSpec& f);

}  // namespace unwrapforge
