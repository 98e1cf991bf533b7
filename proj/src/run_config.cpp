#include "iqc/run_config.hpp"

namespace iqc {

namespace {

ClockGrid line_grid(const RunConfig& cfg) {
  std::int64_t lo = cfg.index_min;
  std::int64_t hi = cfg.index_max;
  if (lo > hi) {
    lo = -kDefaultLineHalfWindow;
    hi = kDefaultLineHalfWindow;
  }
  try {
    return ClockGrid(cfg.tau, lo, hi);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

std::shared_ptr<ClockModel> build_model(const RunConfig& cfg) {
  if (cfg.model_kind == "two-component-cos") {
    return make_two_component(line_grid(cfg), cosine_profile(cfg.tau));
  }
  if (cfg.model_kind == "piecewise-linear") {
    return make_piecewise_linear(line_grid(cfg));
  }
  if (cfg.model_kind == "cyclic") {
    const CyclicSpec spec{cfg.dimension, cfg.tau};
    if (cfg.index_min > cfg.index_max) {
      return make_cyclic(spec, cyclic_full_grid(spec));
    }
    ClockGrid grid = [&] {
      try {
        return ClockGrid(cfg.tau, cfg.index_min, cfg.index_max);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }();
    return make_cyclic(spec, grid);
  }
  throw ConfigError("unknown model kind: " + cfg.model_kind +
                    " (expected two-component-cos | piecewise-linear | cyclic)");
}

QuadratureRule build_rule(const RunConfig& cfg) {
  if (cfg.panels < 1 || cfg.nodes < 2) {
    throw ConfigError("quadrature needs panels >= 1 and nodes >= 2");
  }
  return QuadratureRule::window(cfg.tau, cfg.panels, cfg.nodes);
}

}  // namespace iqc
