#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "iqc/checks.hpp"
#include "iqc/identities.hpp"
#include "iqc/models.hpp"
#include "iqc/report_io.hpp"

using namespace iqc;

namespace {
bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Extracts the value cell of the first CSV row starting with `prefix`.
Real csv_value(const std::string& table, const std::string& prefix, int field) {
  std::istringstream in(table);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) != 0) continue;
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i <= field; ++i) std::getline(cells, cell, ',');
    return std::stod(cell);
  }
  REQUIRE_MESSAGE(false, "row not found: " << prefix);
  return 0;
}
}  // namespace

TEST_CASE("json text pins every float at seventeen digits") {
  json doc;
  doc["x"] = 0.1;
  doc["one"] = 1.0;
  doc["n"] = std::int64_t(7);
  doc["bad"] = std::numeric_limits<double>::infinity();
  const std::string text = to_json_text(doc);
  CHECK(contains(text, "\"x\": 0.10000000000000001"));
  CHECK(contains(text, "\"one\": 1"));
  CHECK(contains(text, "\"n\": 7"));
  CHECK(contains(text, "\"bad\": null"));
}

TEST_CASE("identity report serializes with a stable field order") {
  const CyclicSpec spec{16, 1.0};
  auto model = make_cyclic(spec, cyclic_full_grid(spec));
  const std::string text =
      to_json_text(identity_report_json(*model, validate_identities(*model)));

  const char* order[] = {"\"model\"",
                         "\"grid\"",
                         "\"u_samples\"",
                         "\"max_orthonormality_defect\"",
                         "\"max_unitarity_defect\"",
                         "\"max_cross_term_defect\"",
                         "\"max_symmetry_defect\"",
                         "\"unitarity_defect_at_half_window\"",
                         "\"tail_weighted_sum\"",
                         "\"derivative_tail\"",
                         "\"shift_defect\"",
                         "\"kinked\"",
                         "\"exactly_unitary\"",
                         "\"passed\""};
  std::size_t last = 0;
  for (const char* key : order) {
    const std::size_t at = text.find(key);
    REQUIRE_MESSAGE(at != std::string::npos, key);
    CHECK(at > last);
    last = at;
  }
  CHECK(contains(text, "\"passed\": true"));
}

TEST_CASE("time-average matrix table carries the twelfth-step neighbours") {
  auto pl = make_piecewise_linear(ClockGrid(1.0, -6, 6));
  const QuadratureRule rule = QuadratureRule::window(1.0);
  const OperatorMatrix tc = build_tc(*pl, rule);
  const std::string table = matrix_csv(tc);

  CHECK(table.rfind("row,col,re,im\n", 0) == 0);
  CHECK(csv_value(table, "0,1,", 2) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(csv_value(table, "0,-1,", 2) == doctest::Approx(-1.0 / 12.0).epsilon(1e-14));
  CHECK(csv_value(table, "0,0,", 2) == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  CHECK(contains(table, "0,1,0.08333333333333"));
  CHECK(contains(table, "0,-1,-0.08333333333333"));

  const json env = matrix_envelope_json(tc, *pl, &rule);
  const std::string env_text = to_json_text(env);
  CHECK(env.at("label") == "TC");
  CHECK(env.at("model") == "piecewise-linear");
  CHECK(contains(env_text, "\"quadrature\""));

  const OperatorMatrix pc = build_pc(pl->grid());
  const json pc_env = matrix_envelope_json(pc, *pl, nullptr);
  CHECK(!pc_env.contains("quadrature"));
  CHECK(pc_env.at("hermitian_defect") == 0.0);
}

TEST_CASE("overlap table spans the reachable offsets at half-window steps") {
  auto pl = make_piecewise_linear(ClockGrid(1.0, -4, 4));
  const std::string table = overlap_table_csv(*pl);
  CHECK(table.rfind("n,u,re,im\n", 0) == 0);
  CHECK(contains(table, "\n0,0,1,0\n"));
  CHECK(contains(table, "\n0,-0.5,0.5,0\n"));
  CHECK(contains(table, "\n0,0.5,0.5,0\n"));
  // 33 samples per offset
  int zero_rows = 0;
  std::istringstream in(table);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("0,", 0) == 0) ++zero_rows;
  CHECK(zero_rows == 33);
}

TEST_CASE("reading table has thirteen sampled horizons") {
  const CyclicSpec spec{32, 1.0};
  auto model = make_cyclic(spec, cyclic_full_grid(spec));
  const OperatorMatrix tc = build_tc(*model, QuadratureRule::window(1.0));
  const std::string table = reading_vs_t_csv(*model, tc);
  CHECK(table.rfind("t,reading,abs_error\n", 0) == 0);
  int lines = 0;
  for (char ch : table)
    if (ch == '\n') ++lines;
  CHECK(lines == 14);
  CHECK(contains(table, "\n-10,"));
  CHECK(contains(table, "\n10,"));
  CHECK(contains(table, "\n0,"));
}

TEST_CASE("sweep table header names its three error columns") {
  const std::vector<SweepRow> rows{{16, 0.0625, 0.015625, 1e-15}};
  const std::string table = sweep_csv(rows);
  CHECK(table.rfind("dimension,commutator_abs_error,period_step_abs_error,herm_defect\n",
                    0) == 0);
  CHECK(contains(table, "\n16,0.0625,0.015625,"));
}

TEST_CASE("informational checks serialize with a null tolerance") {
  auto pl = make_piecewise_linear(ClockGrid(1.0, -4, 4));
  CheckReport info;
  info.check_name = "uncertainty_product[click0]";
  info.model = pl->name();
  info.tolerance = std::numeric_limits<Real>::infinity();
  info.passed = true;
  CheckReport hard;
  hard.check_name = "pointer_step[click0]";
  hard.model = pl->name();
  hard.tolerance = 1e-8;
  hard.passed = true;

  const json doc = checks_report_json(*pl, QuadratureRule::window(1.0), 5, {info, hard});
  const std::string text = to_json_text(doc);
  CHECK(contains(text, "\"tolerance\": null"));
  CHECK(contains(text, "\"informational\": true"));
  CHECK(contains(text, "\"tolerance\": 1e-08"));
  CHECK(doc.at("all_passed") == true);
  CHECK(doc.at("seed") == 5);
}

TEST_CASE("run metadata stamps UTC seconds and lists its outputs") {
  const json meta = run_meta_json("report", "piecewise-linear", 9,
                                  {"checks_report.json", "reading_vs_t.csv"});
  CHECK(meta.at("command") == "report");
  CHECK(meta.at("seed") == 9);
  const std::string stamp = meta.at("written_at").get<std::string>();
  CHECK(stamp.size() == 20);
  CHECK(stamp.back() == 'Z');
  CHECK(stamp[4] == '-');
  CHECK(stamp[10] == 'T');
  CHECK(meta.at("outputs").size() == 2);
}

TEST_CASE("writing into a missing directory reports a configuration error") {
  CHECK_THROWS_AS(write_text_file("/nonexistent-dir-iqc/x.json", "{}"),
                  ConfigError);
}
