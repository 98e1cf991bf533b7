#include "iqc/report_io.hpp"

#include <cmath>
#include <ctime>
#include <fstream>

#include "iqc/format.hpp"

namespace iqc {

namespace {

void emit(const json& v, std::string& out, int depth) {
  const std::string pad(std::size_t(depth) * 2, ' ');
  const std::string pad_in(std::size_t(depth + 1) * 2, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + json(it.key()).dump() + ": ";
        emit(it.value(), out, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        emit(item, out, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::string:
      out += json(v.get<std::string>()).dump();
      return;
    case json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      return;
    case json::value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      return;
    case json::value_t::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      return;
    case json::value_t::number_float: {
      const Real x = v.get<Real>();
      out += std::isfinite(x) ? fmt17(x) : "null";
      return;
    }
    default:
      out += "null";
      return;
  }
}

json complex_json(const Scalar& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json grid_json(const ClockGrid& g) {
  return json{{"tau", g.tau()},
              {"index_min", g.index_min()},
              {"index_max", g.index_max()},
              {"size", g.size()}};
}

json rule_json(const QuadratureRule& rule) {
  return json{{"panel_count", std::int64_t(rule.boundaries().size()) - 1},
              {"nodes_per_panel", rule.nodes_per_panel()},
              {"lo", rule.lo()},
              {"hi", rule.hi()}};
}

// Offsets r for which c0(r, u) is worth tabulating: one cycle for a cyclic
// model, the symmetric reachable range otherwise.
std::pair<std::int64_t, std::int64_t> offset_range(const ClockModel& model) {
  if (model.cyclic()) {
    const std::int64_t d = model.cycle_length();
    const std::int64_t hi = d / 2;
    return {hi - d + 1, hi};
  }
  const auto& g = model.grid();
  const std::int64_t span = std::max(-g.index_min(), g.index_max());
  return {-span, span};
}

}  // namespace

std::string to_json_text(const json& doc) {
  std::string out;
  emit(doc, out, 0);
  out += "\n";
  return out;
}

json identity_report_json(const ClockModel& model, const IdentityReport& report) {
  json doc;
  doc["model"] = model.name();
  doc["grid"] = grid_json(model.grid());
  doc["u_samples"] = report.u_samples;
  doc["max_orthonormality_defect"] = report.max_orthonormality_defect;
  doc["max_unitarity_defect"] = report.max_unitarity_defect;
  doc["max_cross_term_defect"] = report.max_cross_term_defect;
  doc["max_symmetry_defect"] = report.max_symmetry_defect;
  doc["unitarity_defect_at_half_window"] = report.unitarity_defect_at_half_window;
  doc["tail_weighted_sum"] = report.tail_weighted_sum;
  doc["derivative_tail"] = report.derivative_tail;
  doc["shift_defect"] = report.shift_defect;
  doc["kinked"] = report.kinked;
  doc["exactly_unitary"] = model.exactly_unitary();
  doc["passed"] = report.passed;
  return doc;
}

json checks_report_json(const ClockModel& model, const QuadratureRule& rule,
                        std::uint64_t seed, const std::vector<CheckReport>& checks) {
  json doc;
  doc["model"] = model.name();
  doc["grid"] = grid_json(model.grid());
  doc["quadrature"] = rule_json(rule);
  doc["seed"] = seed;

  json arr = json::array();
  bool all_passed = true;
  for (const auto& c : checks) {
    json item;
    item["check_name"] = c.check_name;
    item["measured"] = complex_json(c.measured);
    item["target"] = complex_json(c.target);
    item["abs_error"] = c.abs_error;
    if (c.informational()) {
      item["tolerance"] = nullptr;
      item["informational"] = true;
    } else {
      item["tolerance"] = c.tolerance;
      item["informational"] = false;
    }
    item["passed"] = c.passed;
    json ctx;
    for (const auto& [k, val] : c.context) ctx[k] = val;
    item["context"] = ctx;
    arr.push_back(std::move(item));
    all_passed = all_passed && c.passed;
  }
  doc["checks"] = std::move(arr);
  doc["all_passed"] = all_passed;
  return doc;
}

std::string matrix_csv(const OperatorMatrix& op) {
  const auto& g = op.grid();
  std::string out = "row,col,re,im\n";
  for (std::int64_t r = g.index_min(); r <= g.index_max(); ++r) {
    for (std::int64_t c = g.index_min(); c <= g.index_max(); ++c) {
      const Scalar z = op.entry(r, c);
      out += std::to_string(r) + "," + std::to_string(c) + "," +
             fmt17(z.real()) + "," + fmt17(z.imag()) + "\n";
    }
  }
  return out;
}

json matrix_envelope_json(const OperatorMatrix& op, const ClockModel& model,
                          const QuadratureRule* rule) {
  json doc;
  doc["label"] = to_string(op.label());
  doc["model"] = model.name();
  doc["grid"] = grid_json(model.grid());
  doc["hermitian_defect"] = op.hermitian_defect();
  if (rule != nullptr) doc["quadrature"] = rule_json(*rule);
  return doc;
}

std::string overlap_table_csv(const ClockModel& model, int u_samples) {
  const Real tau = model.grid().tau();
  const auto [lo, hi] = offset_range(model);
  std::string out = "n,u,re,im\n";
  for (std::int64_t n = lo; n <= hi; ++n) {
    for (int j = 0; j < u_samples; ++j) {
      const Real u = -0.5 * tau + tau * Real(j) / Real(u_samples - 1);
      const Scalar z = model.c0(n, u);
      out += std::to_string(n) + "," + fmt17(u) + "," + fmt17(z.real()) + "," +
             fmt17(z.imag()) + "\n";
    }
  }
  return out;
}

std::string reading_vs_t_csv(const ClockModel& model, const OperatorMatrix& tc,
                             int samples, Real range_in_tau) {
  const Real tau = model.grid().tau();
  std::string out = "t,reading,abs_error\n";
  for (int j = 0; j < samples; ++j) {
    const Real t =
        tau * range_in_tau * (2.0 * Real(j) / Real(samples - 1) - 1.0);
    const Real value = reading(model, tc, t);
    out += fmt17(t) + "," + fmt17(value) + "," + fmt17(std::abs(value - t)) + "\n";
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "dimension,commutator_abs_error,period_step_abs_error,herm_defect\n";
  for (const auto& r : rows) {
    out += std::to_string(r.dimension) + "," + fmt17(r.commutator_abs_error) + "," +
           fmt17(r.period_step_abs_error) + "," + fmt17(r.herm_defect) + "\n";
  }
  return out;
}

json run_meta_json(const std::string& command, const std::string& model,
                   std::uint64_t seed, const std::vector<std::string>& outputs) {
  char stamp[32] = {0};
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);

  json doc;
  doc["command"] = command;
  doc["model"] = model;
  doc["seed"] = seed;
  doc["written_at"] = stamp;
  doc["outputs"] = outputs;
  return doc;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  out << content;
  if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace iqc
