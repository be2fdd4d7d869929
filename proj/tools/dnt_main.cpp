// dnt: D numbers decision toolkit.
//
// Subcommands:
//   run      parse a problem file, execute the pipeline, print the report
//   verify   run the bundled reference checks
//   scales   show the built-in linguistic scales and their exclusiveness
//   inspect  parse a problem file and re-emit it in canonical form

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dnt/case_study.hpp"
#include "dnt/dnumbers.hpp"
#include "dnt/problem_io.hpp"
#include "dnt/report.hpp"
#include "dnt/verification.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open \"" + path + "\"");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::string num(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

int cmd_run(const std::string& path, const dnt::ReportOptions& report_options,
            const dnt::PipelineOptions& overrides, bool json,
            bool precision_set) {
  const auto parsed = dnt::parse_problem(slurp(path));

  dnt::PipelineOptions options;
  options.epsilon_override = overrides.epsilon_override
                                 ? overrides.epsilon_override
                                 : parsed.options.epsilon_override;
  options.msd_threshold = overrides.msd_threshold ? overrides.msd_threshold
                                                  : parsed.options.msd_threshold;

  dnt::ReportOptions render = report_options;
  if (!precision_set) {
    render.precision = parsed.options.precision;
  }

  const auto trace = dnt::run(parsed.problem, options);
  std::cout << (json ? dnt::render_report_json(parsed.problem, trace, render)
                     : dnt::render_report(parsed.problem, trace, render));
  return 0;
}

int cmd_verify(bool json) {
  const auto checks = dnt::run_reference_checks();
  if (json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      doc.push_back({{"name", c.name},
                     {"passed", c.passed},
                     {"max_delta", c.max_delta},
                     {"tolerance", c.tolerance},
                     {"detail", c.detail}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "check\tstatus\tmax_delta\ttolerance\tdetail\n";
    for (const auto& c : checks) {
      std::printf("%s\t%s\t%.3g\t%.3g\t%s\n", c.name.c_str(),
                  c.passed ? "PASS" : "FAIL", c.max_delta, c.tolerance,
                  c.detail.c_str());
    }
    const auto passed = static_cast<int>(
        std::count_if(checks.begin(), checks.end(),
                      [](const dnt::CheckResult& c) { return c.passed; }));
    std::printf("summary\t%d/%zu checks passed\n", passed, checks.size());
  }
  return dnt::all_passed(checks) ? 0 : 1;
}

int cmd_scales(bool json, int precision) {
  struct Entry {
    const char* name;
    const dnt::LinguisticScale* scale;
  };
  const Entry entries[] = {
      {"weights", &dnt::scales::importance_weights()},
      {"ratings", &dnt::scales::performance_ratings()},
  };
  nlohmann::ordered_json doc;
  for (const auto& [name, scale] : entries) {
    const auto matrix = dnt::relative_matrix(*scale);
    const double eps = dnt::exclusive_coefficient(matrix);
    if (json) {
      nlohmann::ordered_json s;
      s["universe"] = {scale->universe().lo, scale->universe().hi};
      nlohmann::ordered_json terms = nlohmann::ordered_json::object();
      for (const auto& t : scale->terms()) {
        terms[t.label] = {t.shape.a(), t.shape.b(), t.shape.c()};
      }
      s["terms"] = std::move(terms);
      nlohmann::ordered_json rel = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < matrix.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < matrix.size(); ++j) {
          row.push_back(matrix.at(i, j));
        }
        rel.push_back(std::move(row));
      }
      s["relative-matrix"] = std::move(rel);
      s["epsilon"] = eps;
      doc[name] = std::move(s);
      continue;
    }
    std::cout << "== " << name << " ==\n";
    std::cout << "universe\t" << num(scale->universe().lo, precision) << "\t"
              << num(scale->universe().hi, precision) << "\n";
    std::cout << "term\ta\tb\tc\n";
    for (const auto& t : scale->terms()) {
      std::cout << t.label << "\t" << num(t.shape.a(), precision) << "\t"
                << num(t.shape.b(), precision) << "\t"
                << num(t.shape.c(), precision) << "\n";
    }
    std::cout << "relative-matrix";
    for (const auto& t : scale->terms()) {
      std::cout << "\t" << t.label;
    }
    std::cout << "\n";
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      std::cout << matrix.labels()[i];
      for (std::size_t j = 0; j < matrix.size(); ++j) {
        std::cout << "\t" << num(matrix.at(i, j), precision);
      }
      std::cout << "\n";
    }
    std::cout << "epsilon\t" << num(eps, precision) << "\n\n";
  }
  if (json) {
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_inspect(const std::string& path, bool json) {
  const auto parsed = dnt::parse_problem(slurp(path));
  if (!json) {
    std::cout << dnt::render_problem(parsed.problem, parsed.options);
    return 0;
  }
  const auto& p = parsed.problem;
  nlohmann::ordered_json doc;
  doc["experts"] = std::vector<std::string>(p.experts().begin(), p.experts().end());
  doc["criteria"] =
      std::vector<std::string>(p.criteria().begin(), p.criteria().end());
  doc["candidates"] =
      std::vector<std::string>(p.candidates().begin(), p.candidates().end());
  auto scale_json = [](const dnt::LinguisticScale& s) {
    nlohmann::ordered_json out;
    out["universe"] = {s.universe().lo, s.universe().hi};
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& t : s.terms()) {
      terms[t.label] = {t.shape.a(), t.shape.b(), t.shape.c()};
    }
    out["terms"] = std::move(terms);
    return out;
  };
  doc["weight-scale"] = scale_json(p.weight_scale());
  doc["rating-scale"] = scale_json(p.rating_scale());
  nlohmann::ordered_json weights = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < p.criteria().size(); ++c) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (std::size_t e = 0; e < p.experts().size(); ++e) {
      row[p.experts()[e]] = p.weight_label(c, e);
    }
    weights[p.criteria()[c]] = std::move(row);
  }
  doc["weights"] = std::move(weights);
  nlohmann::ordered_json ratings = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < p.criteria().size(); ++c) {
    nlohmann::ordered_json per_candidate = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < p.candidates().size(); ++a) {
      nlohmann::ordered_json row = nlohmann::ordered_json::object();
      for (std::size_t e = 0; e < p.experts().size(); ++e) {
        row[p.experts()[e]] = p.rating_label(c, a, e);
      }
      per_candidate[p.candidates()[a]] = std::move(row);
    }
    ratings[p.criteria()[c]] = std::move(per_candidate);
  }
  doc["ratings"] = std::move(ratings);
  nlohmann::ordered_json options = nlohmann::ordered_json::object();
  if (parsed.options.msd_threshold) {
    options["msd-threshold"] = *parsed.options.msd_threshold;
  }
  if (parsed.options.epsilon_override) {
    options["epsilon-override"] = *parsed.options.epsilon_override;
  }
  options["precision"] = parsed.options.precision;
  doc["options"] = std::move(options);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D numbers decision toolkit"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run the pipeline on a problem file");
  std::string run_path;
  dnt::ReportOptions report_options;
  dnt::PipelineOptions overrides;
  bool run_json = false;
  std::string stage;
  double epsilon_override = -1.0;
  std::string msd_threshold;
  run->add_option("file", run_path, "problem file")->required();
  run->add_option("--stage", stage, "emit one stage only")
      ->check(CLI::IsMember(dnt::report_stage_names()));
  auto* precision_opt =
      run->add_option("--precision", report_options.precision,
                      "decimals for numeric cells")
          ->check(CLI::Range(0, 12));
  auto* eps_opt = run->add_option("--epsilon-override", epsilon_override,
                                  "use this exclusive coefficient")
                      ->check(CLI::Range(0.0, 1.0));
  auto* msd_opt = run->add_option("--msd-threshold", msd_threshold,
                                  "threshold term for the supported degree");
  run->add_flag("--json", run_json, "machine-readable report");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the reference checks");
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "machine-readable results");

  // scales
  auto* scales = app.add_subcommand("scales", "Show the built-in scales");
  bool scales_json = false;
  int scales_precision = 4;
  scales->add_flag("--json", scales_json, "machine-readable output");
  scales->add_option("--precision", scales_precision, "decimals")
      ->check(CLI::Range(0, 12));

  // inspect
  auto* inspect = app.add_subcommand(
      "inspect", "Validate a problem file and re-emit it canonically");
  std::string inspect_path;
  bool inspect_json = false;
  inspect->add_option("file", inspect_path, "problem file")->required();
  inspect->add_flag("--json", inspect_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      if (!stage.empty()) {
        report_options.stage = stage;
      }
      if (*eps_opt) {
        overrides.epsilon_override = epsilon_override;
      }
      if (*msd_opt) {
        overrides.msd_threshold = msd_threshold;
      }
      return cmd_run(run_path, report_options, overrides, run_json,
                     static_cast<bool>(*precision_opt));
    }
    if (*verify) {
      return cmd_verify(verify_json);
    }
    if (*scales) {
      return cmd_scales(scales_json, scales_precision);
    }
    return cmd_inspect(inspect_path, inspect_json);
  } catch (const dnt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dnt::PipelineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
