#include "matroot/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matroot/densela/io.hpp"
#include "matroot/densela/structure.hpp"
#include "matroot/pseries/export.hpp"
#include "matroot/schroeder/iteration.hpp"
#include "matroot/verify/campaign.hpp"

namespace matroot::cli {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

template <typename Scalar>
int compute_typed(const DenseMatrix<Scalar>& a, const ComputeOptions& options, std::ostream& out, std::ostream& err) {
  schroeder::SchroederConfig config;
  config.p = options.p;
  config.m = options.m;
  config.tol = options.tol;
  config.max_iter = options.max_iter;
  config.norm = options.norm;
  config.skip_precheck = options.skip_precheck;

  const auto result = schroeder::run(a, config);
  const auto& report = result.report;
  if (report.precheck.warning) err << "warning: " << *report.precheck.warning << '\n';

  if (options.out) {
    write_matrix_file(*options.out, AnyMatrix(result.root));
  } else {
    out << to_json(result.root).dump() << '\n';
  }
  if (options.report) write_text(*options.report, schroeder::to_json(report).dump(2) + "\n");

  out << "termination: " << schroeder::to_string(report.termination) << '\n';
  out << "iterations: " << report.iterations() << '\n';
  if (!report.steps.empty()) {
    const auto& last = report.last();
    out << "final_residual: " << fmt17(last.residual_norm) << '\n';
    if (last.bound_plain) {
      out << "bound_plain: " << fmt17(*last.bound_plain) << '\n';
      out << "bound_sharp: " << fmt17(*last.bound_sharp) << '\n';
    } else {
      out << "bounds: unavailable (||I - A||_" << report.norm << " = " << fmt17(report.normB) << " >= 1)\n";
    }
  }
  if (report.termination != schroeder::Termination::converged) {
    err << "error: " << report.message << '\n';
    return kComputationFailed;
  }
  return kSuccess;
}

}  // namespace

int cmd_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err) {
  AnyMatrix a;
  try {
    a = read_matrix_file(options.input);
    std::visit([](const auto& m) { require_square(m, "input matrix"); }, a);
    schroeder::SchroederConfig probe;
    probe.p = options.p;
    probe.m = options.m;
    probe.tol = options.tol;
    probe.max_iter = options.max_iter;
    probe.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  try {
    return std::visit([&](const auto& m) { return compute_typed(m, options, out, err); }, a);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationFailed;
  }
}

int cmd_series(const SeriesOptions& options, std::ostream& out, std::ostream& err) {
  if (options.format != "csv" && options.format != "json") {
    err << "error: --format must be csv or json\n";
    return kUsageError;
  }
  pseries::CoeffTable table;
  try {
    table = pseries::schroeder_coeff_table(options.p, options.m, options.k, options.order);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  std::ostringstream text;
  if (options.format == "csv") {
    pseries::write_csv(text, table);
  } else {
    text << pseries::to_json(table).dump(2) << '\n';
  }
  try {
    if (options.out) {
      write_text(*options.out, text.str());
    } else {
      out << text.str();
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationFailed;
  }
  return kSuccess;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  verify::CampaignSpec spec;
  try {
    if (options.config) {
      std::ifstream f(*options.config);
      if (!f) throw std::invalid_argument("cannot open config " + *options.config);
      nlohmann::json doc;
      try {
        f >> doc;
      } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
      }
      spec = verify::campaign_from_json(doc);
    }
    if (options.seed) spec.seed = *options.seed;
    spec.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::vector<verify::Certificate> certs;
  try {
    certs = verify::run_campaign(spec);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationFailed;
  }
  if (options.report) {
    nlohmann::json doc{{"campaign", verify::to_json(spec)},
                       {"passed", verify::campaign_passed(certs)},
                       {"certificates", verify::to_json(certs)}};
    write_text(*options.report, doc.dump(2) + "\n");
  }
  verify::print_summary(out, certs);
  return verify::campaign_passed(certs) ? kSuccess : kVerificationFailed;
}

int cmd_structure(const StructureOptions& options, std::ostream& out, std::ostream& err) {
  AnyMatrix a;
  try {
    a = read_matrix_file(options.input);
    std::visit([](const auto& m) { require_square(m, "input matrix"); }, a);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  ClassifyOptions copts;
  copts.seed = options.seed;
  const auto report = std::visit([&](const auto& m) { return classify(m, copts); }, a);
  out << to_json(report).dump(2) << '\n';
  return kSuccess;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix pth roots by the Schroeder family of iterations, with exact series verification"};
  app.require_subcommand(1);

  ComputeOptions compute;
  std::string norm_name = "inf";
  auto* c = app.add_subcommand("compute", "Compute A^{1/p} from a Matrix Market or JSON matrix");
  c->add_option("--input", compute.input, "input matrix")->required();
  c->add_option("--out", compute.out, "output matrix (.json or Matrix Market); stdout JSON if omitted");
  c->add_option("--report", compute.report, "iteration report (JSON)");
  c->add_option("--p", compute.p, "root order p >= 2")->capture_default_str();
  c->add_option("--m", compute.m, "Schroeder order parameter m >= 1")->capture_default_str();
  c->add_option("--tol", compute.tol, "residual tolerance")->capture_default_str();
  c->add_option("--max-iter", compute.max_iter, "iteration cap")->capture_default_str();
  c->add_option("--norm", norm_name, "norm for residuals and bounds")
      ->check(CLI::IsMember({"one", "inf", "fro"}))
      ->capture_default_str();
  c->add_flag("--skip-precheck", compute.skip_precheck, "skip the spectrum precheck");

  SeriesOptions series;
  auto* s = app.add_subcommand("series", "Exact coefficient rows c_{k,i} of the scalar iterates");
  s->add_option("--p", series.p)->capture_default_str();
  s->add_option("--m", series.m)->capture_default_str();
  s->add_option("--order", series.order, "truncation order N")->capture_default_str();
  s->add_option("--k", series.k, "last iterate index")->capture_default_str();
  s->add_option("--format", series.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  s->add_option("--out", series.out, "output file; stdout if omitted");

  VerifyOptions verify_opts;
  auto* v = app.add_subcommand("verify", "Run a verification campaign");
  v->add_option("--config", verify_opts.config, "campaign config (JSON); default grid if omitted");
  v->add_option("--report", verify_opts.report, "certificates (JSON)");
  v->add_option("--seed", verify_opts.seed, "override the campaign seed");

  StructureOptions structure;
  auto* st = app.add_subcommand("structure", "Classify a matrix (Z, M1, H1)");
  st->add_option("--input", structure.input, "input matrix")->required();
  st->add_option("--seed", structure.seed, "power-iteration seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  if (c->parsed()) {
    compute.norm = parse_norm_kind(norm_name);
    return cmd_compute(compute, out, err);
  }
  if (s->parsed()) return cmd_series(series, out, err);
  if (v->parsed()) return cmd_verify(verify_opts, out, err);
  return cmd_structure(structure, out, err);
}

}  // namespace matroot::cli
