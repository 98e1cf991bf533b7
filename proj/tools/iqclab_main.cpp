#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iqc/format.hpp"
#include "iqc/report_io.hpp"
#include "iqc/run_config.hpp"

namespace fs = std::filesystem;
using namespace iqc;

namespace {

// Maps INI sections onto the dotted option names of the single app, so
// [model] kind=cyclic feeds --model.kind. The stock reader would route
// sections into subcommands instead. Unknown keys stay unmatched and the
// parser rejects them.
struct FlatSectionConfig final : CLI::ConfigBase {
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::vector<CLI::ConfigItem> out;
    std::string line;
    std::string section;
    while (std::getline(input, line)) {
      const std::string text = CLI::detail::trim_copy(line);
      if (text.empty() || text.front() == '#' || text.front() == ';') continue;
      if (text.front() == '[' && text.back() == ']') {
        section = CLI::detail::trim_copy(text.substr(1, text.size() - 2));
        continue;
      }
      const std::size_t eq = text.find('=');
      if (eq == std::string::npos) throw CLI::ConfigError::Extras(text);
      std::string value = CLI::detail::trim_copy(text.substr(eq + 1));
      if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
          value.back() == value.front())
        value = value.substr(1, value.size() - 2);
      CLI::ConfigItem item;
      const std::string key = CLI::detail::trim_copy(text.substr(0, eq));
      item.name = section.empty() ? key : section + "." + key;
      item.inputs = {value};
      out.push_back(std::move(item));
    }
    return out;
  }
};

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (fs::path(cfg.output_dir) / name).string();
}

void finish_outputs(const RunConfig& cfg, const std::string& command,
                    const std::string& model, std::vector<std::string> files) {
  write_text_file(out_path(cfg, "run_meta.json"),
                  to_json_text(run_meta_json(command, model, cfg.seed, files)));
}

int cmd_validate(const RunConfig& cfg) {
  const auto model = build_model(cfg);
  const IdentityReport report = validate_identities(*model);
  fs::create_directories(cfg.output_dir);

  std::vector<std::string> files;
  if (cfg.write_json) {
    write_text_file(out_path(cfg, "identity_report.json"),
                    to_json_text(identity_report_json(*model, report)));
    files.push_back("identity_report.json");
  }
  finish_outputs(cfg, "validate", model->name(), files);

  std::printf("identity suite [%s]: orthonormality %.3e, unitarity %.3e, "
              "cross %.3e, symmetry %.3e, %s\n",
              model->name().c_str(), report.max_orthonormality_defect,
              report.max_unitarity_defect, report.max_cross_term_defect,
              report.max_symmetry_defect, report.passed ? "pass" : "FAIL");
  if (model->exactly_unitary() && !report.passed) return 1;
  return 0;
}

int cmd_report(const RunConfig& cfg) {
  const auto model = build_model(cfg);
  const QuadratureRule rule = build_rule(cfg);
  const std::vector<CheckReport> checks =
      run_checks(*model, rule, cfg.seed, cfg.tolerances);
  fs::create_directories(cfg.output_dir);

  std::vector<std::string> files;
  if (cfg.write_json) {
    write_text_file(out_path(cfg, "checks_report.json"),
                    to_json_text(checks_report_json(*model, rule, cfg.seed, checks)));
    files.push_back("checks_report.json");
  }
  if (cfg.write_csv) {
    const OperatorMatrix tc = build_tc(*model, rule);
    write_text_file(out_path(cfg, "reading_vs_t.csv"),
                    reading_vs_t_csv(*model, tc));
    write_text_file(out_path(cfg, "overlap_table.csv"), overlap_table_csv(*model));
    files.push_back("reading_vs_t.csv");
    files.push_back("overlap_table.csv");
  }
  finish_outputs(cfg, "report", model->name(), files);

  bool failed = false;
  for (const auto& c : checks) {
    const char* mark = c.informational() ? "info" : (c.passed ? "PASS" : "FAIL");
    std::printf("[%s] %-40s abs_error %.3e\n", mark, c.check_name.c_str(),
                c.abs_error);
    failed = failed || !c.passed;
  }
  if (model->exactly_unitary() && failed) return 1;
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::vector<std::int64_t>& dims) {
  if (dims.empty()) throw ConfigError("sweep needs at least one dimension");
  const std::vector<SweepRow> rows =
      run_sweep(dims, cfg.tau, cfg.panels, cfg.nodes);
  fs::create_directories(cfg.output_dir);
  write_text_file(out_path(cfg, "sweep.csv"), sweep_csv(rows));
  finish_outputs(cfg, "sweep", "cyclic", {"sweep.csv"});
  for (const auto& r : rows) {
    std::printf("D=%-6lld commutator %.6e  step %.6e  herm %.3e\n",
                static_cast<long long>(r.dimension), r.commutator_abs_error,
                r.period_step_abs_error, r.herm_defect);
  }
  return 0;
}

int cmd_export(const RunConfig& cfg, const std::string& which, bool symmetrize) {
  const auto model = build_model(cfg);
  const QuadratureRule rule = build_rule(cfg);

  OperatorMatrix op = [&] {
    if (which == "H") return build_hamiltonian(*model);
    if (which == "PC") return build_pc(model->grid());
    return build_tc(*model, rule);
  }();
  if (symmetrize) op = symmetrized(op);

  fs::create_directories(cfg.output_dir);
  const std::string base = which + "_matrix";
  write_text_file(out_path(cfg, base + ".csv"), matrix_csv(op));
  const QuadratureRule* used = which == "TC" ? &rule : nullptr;
  write_text_file(out_path(cfg, base + ".json"),
                  to_json_text(matrix_envelope_json(op, *model, used)));
  finish_outputs(cfg, "export", model->name(), {base + ".csv", base + ".json"});
  std::printf("wrote %s (hermitian defect %.3e)\n", base.c_str(),
              op.hermitian_defect());
  return 0;
}

int cmd_read(const RunConfig& cfg, Real t) {
  const auto model = build_model(cfg);
  const OperatorMatrix tc = build_tc(*model, build_rule(cfg));
  std::printf("%s\n", fmt17(reading(*model, tc, t)).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for discrete quantum clock models"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI config; sections [model] [grid] "
                                 "[quadrature] [tolerances] [output] [random]");
  app.config_formatter(std::make_shared<FlatSectionConfig>());
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig cfg;
  app.add_option("--model,--model.kind", cfg.model_kind,
                 "two-component-cos | piecewise-linear | cyclic")
      ->capture_default_str();
  app.add_option("--D,--dimension,--model.dimension", cfg.dimension,
                 "cycle length for the cyclic model")
      ->capture_default_str();
  app.add_option("--tau,--model.tau", cfg.tau, "grid period")
      ->capture_default_str();
  app.add_option("--index-min,--grid.index_min", cfg.index_min,
                 "lowest grid index (defaults to the model's natural window)");
  app.add_option("--index-max,--grid.index_max", cfg.index_max,
                 "highest grid index");
  app.add_option("--panels,--quadrature.panels", cfg.panels,
                 "quadrature panels across the window")
      ->capture_default_str();
  app.add_option("--nodes,--quadrature.nodes", cfg.nodes,
                 "Gauss nodes per panel")
      ->capture_default_str();
  app.add_option("--out,--output.dir", cfg.output_dir, "output directory")
      ->capture_default_str();
  app.add_option("--output.json", cfg.write_json, "write JSON reports");
  app.add_option("--output.csv", cfg.write_csv, "write CSV tables");
  app.add_option("--seed,--random.seed", cfg.seed, "probe-state seed")
      ->capture_default_str();

  auto& tols = cfg.tolerances;
  app.add_option("--tolerances.identity_abs", tols.identity_abs);
  app.add_option("--tolerances.constancy_abs", tols.constancy_abs);
  app.add_option("--tolerances.commutator_abs", tols.commutator_abs);
  app.add_option("--tolerances.reading_tau", tols.reading_tau);
  app.add_option("--tolerances.uncertainty_slack", tols.uncertainty_slack);
  app.add_option("--tolerances.uniformity_abs", tols.uniformity_abs);
  app.add_option("--tolerances.consistency_abs", tols.consistency_abs);

  CLI::App* validate = app.add_subcommand("validate", "run the overlap identity suite");
  CLI::App* report = app.add_subcommand("report", "run the full property-check suite");
  CLI::App* sweep = app.add_subcommand("sweep", "cyclic convergence sweep over dimensions");
  CLI::App* do_export = app.add_subcommand("export", "write one operator matrix");
  CLI::App* read = app.add_subcommand("read", "print the clock reading at one time");

  std::vector<std::int64_t> sweep_dims{32, 64, 128};
  sweep->add_option("--dims", sweep_dims, "dimensions to sweep")
      ->delimiter(',')
      ->capture_default_str();

  std::string export_which;
  bool export_symmetrize = false;
  do_export->add_option("--which", export_which, "H | PC | TC")
      ->required()
      ->check(CLI::IsMember({"H", "PC", "TC"}));
  do_export->add_flag("--symmetrize", export_symmetrize,
                      "export (A + A^dagger)/2 instead of A");

  Real read_t = 0.0;
  read->add_option("--t", read_t, "time at which to evaluate the reading")
      ->required();

  for (CLI::App* sub : {validate, report, sweep, do_export, read}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg);
    if (report->parsed()) return cmd_report(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg, sweep_dims);
    if (do_export->parsed()) return cmd_export(cfg, export_which, export_symmetrize);
    if (read->parsed()) return cmd_read(cfg, read_t);
    std::fprintf(stderr, "no subcommand\n");
    return 2;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const NumericsError& e) {
    std::fprintf(stderr, "numerics error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
