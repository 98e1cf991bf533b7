#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "iqc/checks.hpp"
#include "iqc/identities.hpp"

namespace iqc {

using json = nlohmann::ordered_json;

// Serializes with every float at 17 significant digits so equal doubles give
// equal bytes. Non-finite floats become null. Two-space indent, sorted only
// where the producer sorted; insertion order is preserved.
std::string to_json_text(const json& doc);

json identity_report_json(const ClockModel& model, const IdentityReport& report);

json checks_report_json(const ClockModel& model, const QuadratureRule& rule,
                        std::uint64_t seed, const std::vector<CheckReport>& checks);

// Dense matrix table, row = left index of the operator entry.
std::string matrix_csv(const OperatorMatrix& op);
json matrix_envelope_json(const OperatorMatrix& op, const ClockModel& model,
                          const QuadratureRule* rule);

// Click-overlap table c0(n, u) on the identity-suite u grid; one cycle of
// offsets for cyclic models, the full reachable offset range otherwise.
std::string overlap_table_csv(const ClockModel& model, int u_samples = 33);

// reading(t) against t on a uniform grid, default 13 points across [-10, 10] tau.
std::string reading_vs_t_csv(const ClockModel& model, const OperatorMatrix& tc,
                             int samples = 13, Real range_in_tau = 10.0);

std::string sweep_csv(const std::vector<SweepRow>& rows);

// The only artifact that carries wall-clock data; everything else is a pure
// function of config + seed.
json run_meta_json(const std::string& command, const std::string& model,
                   std::uint64_t seed, const std::vector<std::string>& outputs);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace iqc
