#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "iqc/checks.hpp"
#include "iqc/models.hpp"

namespace iqc {

// Everything a run needs, resolvable from config file + flags. index_min >
// index_max means "no explicit window": cyclic models get their full cycle,
// line models a symmetric default.
struct RunConfig {
  std::string model_kind = "cyclic";
  std::int64_t dimension = 128;
  Real tau = 1.0;
  std::int64_t index_min = 1;
  std::int64_t index_max = 0;
  int panels = 4;
  int nodes = 16;
  CheckTolerances tolerances;
  std::string output_dir = "out";
  bool write_json = true;
  bool write_csv = true;
  std::uint64_t seed = 8675309;
};

inline constexpr std::int64_t kDefaultLineHalfWindow = 16;

// Throws ConfigError for unusable values (unknown model, bad window, ...).
std::shared_ptr<ClockModel> build_model(const RunConfig& cfg);
QuadratureRule build_rule(const RunConfig& cfg);

}  // namespace iqc
