// SPDX-License-Identifier: MIT
//
// fanogeo — command-line front end for the fanogeo library.
//
// Exit codes: 0 on success (and for "yes" answers: state valid, factorization
// holds), 1 for honest negative answers (invalid state, factorization fails),
// 2 for usage or runtime errors (message as {"error": ...} JSON on stderr).
#include <CLI11.hpp>

#include <Eigen/Dense>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "fanogeo/embedding.hpp"
#include "fanogeo/fano.hpp"
#include "fanogeo/geometry.hpp"
#include "fanogeo/json_io.hpp"
#include "fanogeo/lie_basis.hpp"
#include "fanogeo/partition.hpp"
#include "fanogeo/separability.hpp"
#include "fanogeo/state_factory.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

json read_document(const std::string& path) {
  if (path == "-") {
    try {
      return json::parse(std::cin);
    } catch (const json::parse_error& e) {
      throw std::runtime_error(std::string("stdin: ") + e.what());
    }
  }
  return fanogeo::read_json_file(path);
}

void emit(const json& j, const std::string& output = {}) {
  if (output.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    fanogeo::write_json_file(output, j);
  }
}

/// Shortest decimal representation that reparses to the same double.
std::string number_text(double v) { return json(v).dump(); }

fanogeo::DensityMatrix read_density_document(const std::string& path) {
  json j = read_document(path);
  if (j.is_object() && j.contains("matrix")) return j.get<fanogeo::DensityMatrix>();
  if (j.is_object() && j.contains("data"))
    return fanogeo::reconstruct(j.get<fanogeo::FanoTensor>());
  throw std::runtime_error("state document must carry a \"matrix\" or \"data\" field");
}

struct CaseOptions {
  std::string name = "two-qubit-product";
  int levels = 2;
  int qudits = 2;
  std::string partition_text;
};

void add_case_options(CLI::App* cmd, CaseOptions& opt) {
  cmd->add_option("--case", opt.name,
                  "Manifold case: two-qubit-product, three-qubit-biproduct, "
                  "three-qubit-product, or general")
      ->capture_default_str();
  cmd->add_option("--levels", opt.levels, "Levels per subsystem (general case only)")
      ->capture_default_str();
  cmd->add_option("--qudits", opt.qudits, "Number of subsystems (general case only)")
      ->capture_default_str();
  cmd->add_option("--partition", opt.partition_text,
                  "Grouping for the general case, 1-based, e.g. \"1|2,3\" "
                  "(default: all subsystems separate)");
}

fanogeo::ManifoldCase resolve_case(const CaseOptions& opt) {
  if (opt.name == "general") {
    fanogeo::Partition p = opt.partition_text.empty()
                               ? fanogeo::Partition::finest(opt.qudits)
                               : fanogeo::Partition::parse(opt.partition_text, opt.qudits);
    return fanogeo::general_case(opt.levels, opt.qudits, p);
  }
  return fanogeo::case_by_name(opt.name);
}

json case_header(const fanogeo::ManifoldCase& c) {
  return json{{"case", c.name},
              {"levels", c.levels},
              {"qudits", c.qudits},
              {"partition", c.partition.to_string()},
              {"domain_dim", c.domain_dim()},
              {"codomain_dim", c.codomain_dim()}};
}

struct PointOptions {
  std::string file;
  std::string inline_text;
  bool origin = false;
};

void add_point_options(CLI::App* cmd, PointOptions& opt) {
  cmd->add_option("--point", opt.file,
                  "JSON point file: either a plain array or {\"u\": [...]} "
                  "(\"-\" reads stdin)");
  cmd->add_option("--u", opt.inline_text, "Inline comma-separated coordinates");
  cmd->add_flag("--origin", opt.origin, "Evaluate at the origin (the default)");
}

Eigen::VectorXd parse_inline_vector(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t a = item.find_first_not_of(" \t");
    const size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::runtime_error("--u has an empty component");
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item.substr(a, b - a + 1), &used);
    } catch (const std::exception&) {
      throw std::runtime_error("cannot parse --u component \"" + item + "\"");
    }
    if (used != b - a + 1) throw std::runtime_error("cannot parse --u component \"" + item + "\"");
    vals.push_back(v);
  }
  if (vals.empty()) throw std::runtime_error("--u is empty");
  Eigen::VectorXd u(Eigen::Index(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) u[Eigen::Index(i)] = vals[i];
  return u;
}

Eigen::VectorXd resolve_point(const PointOptions& opt, const fanogeo::ManifoldCase& c) {
  const int given = int(!opt.file.empty()) + int(!opt.inline_text.empty()) + int(opt.origin);
  if (given > 1) throw std::runtime_error("give only one of --point, --u, --origin");
  Eigen::VectorXd u;
  if (!opt.file.empty()) {
    json j = read_document(opt.file);
    if (j.is_array()) {
      u = fanogeo::real_vector_from_json(j);
    } else if (j.is_object() && j.contains("u")) {
      if (j.contains("case") && j.at("case").get<std::string>() != c.name)
        throw std::runtime_error("point file was written for case \"" +
                                 j.at("case").get<std::string>() + "\" but \"" + c.name +
                                 "\" is selected");
      u = fanogeo::real_vector_from_json(j.at("u"));
    } else {
      throw std::runtime_error("point document must be an array or contain a \"u\" field");
    }
  } else if (!opt.inline_text.empty()) {
    u = parse_inline_vector(opt.inline_text);
  } else {
    u = Eigen::VectorXd::Zero(c.domain_dim());
  }
  if (u.size() != c.domain_dim())
    throw std::runtime_error("point has " + std::to_string(u.size()) + " coordinates but case " +
                             c.name + " needs " + std::to_string(c.domain_dim()));
  return u;
}

std::string format_complex(const fanogeo::cplx& z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", z.real(), z.imag());
  return buf;
}

int run_basis(int levels, bool table, const std::string& output) {
  const auto& elems = fanogeo::basis_elements(levels);
  const auto& gens = fanogeo::generators(levels);
  if (table) {
    for (size_t i = 0; i < elems.size(); ++i) {
      std::cout << "e^" << i << ":\n";
      for (Eigen::Index r = 0; r < elems[i].rows(); ++r) {
        std::cout << " ";
        for (Eigen::Index c = 0; c < elems[i].cols(); ++c)
          std::cout << " " << format_complex(elems[i](r, c));
        std::cout << "\n";
      }
    }
    return kOk;
  }
  json je = json::array(), jg = json::array();
  for (const auto& m : elems) je.push_back(fanogeo::complex_matrix_to_json(m));
  for (const auto& m : gens) jg.push_back(fanogeo::complex_matrix_to_json(m));
  emit(json{{"levels", levels}, {"elements", je}, {"generators", jg}}, output);
  return kOk;
}

int run_decompose(const std::string& path, const std::string& output) {
  json doc = read_document(path);
  if (doc.is_object() && doc.contains("matrix")) {
    // Refuse unphysical inputs, reporting the full diagnostic on stderr.
    auto rho = doc.get<fanogeo::DensityMatrix>();
    fanogeo::ValidationReport report = fanogeo::validate(rho);
    if (!report.valid) {
      std::cerr << json(report).dump() << '\n';
      return kError;
    }
    emit(json(fanogeo::decompose(rho)), output);
    return kOk;
  }
  emit(json(fanogeo::read_state_tensor(doc)), output);
  return kOk;
}

int run_reconstruct(const std::string& path, const std::string& output) {
  emit(json(fanogeo::reconstruct(fanogeo::read_state_tensor(read_document(path)))), output);
  return kOk;
}

int run_validate(const std::string& path, const std::string& output) {
  fanogeo::ValidationReport report = fanogeo::validate(read_density_document(path));
  emit(json(report), output);
  return report.valid ? kOk : kNo;
}

int run_check(const std::string& path, const std::string& partition_text, bool classify,
              double tolerance, const std::string& output) {
  if (classify == !partition_text.empty())
    throw std::runtime_error("give exactly one of --partition or --classify");
  fanogeo::FanoTensor d = fanogeo::read_state_tensor(read_document(path));
  if (classify) {
    std::vector<fanogeo::ProductCheckReport> reports = fanogeo::classify(d, tolerance);
    bool any_nontrivial = false;
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back(json(r));
      if (r.partition.group_count() > 1 && r.is_product) any_nontrivial = true;
    }
    emit(json{{"levels", d.levels},
              {"qudits", d.qudits},
              {"reports", arr},
              {"any_nontrivial_product", any_nontrivial}},
         output);
    return any_nontrivial ? kOk : kNo;
  }
  fanogeo::Partition p = fanogeo::Partition::parse(partition_text, d.qudits);
  fanogeo::ProductCheckReport report = fanogeo::is_product(d, p, tolerance);
  emit(json(report), output);
  return report.is_product ? kOk : kNo;
}

int run_metric(const CaseOptions& copt, const PointOptions& popt, const std::string& output) {
  fanogeo::ManifoldCase c = resolve_case(copt);
  fanogeo::EmbeddingMap map = fanogeo::build_map(c);
  Eigen::VectorXd u = resolve_point(popt, c);
  fanogeo::MetricTensor metric = fanogeo::induced_metric(map, u);
  json out = case_header(c);
  out["point"] = fanogeo::real_vector_to_json(u);
  out["g"] = fanogeo::real_matrix_to_json(metric.g);
  out["condition_number"] = metric.condition_number;
  out["closed_form_available"] = fanogeo::has_metric_closed_form(c);
  if (fanogeo::has_metric_closed_form(c)) {
    Eigen::MatrixXd closed = fanogeo::metric_closed_form(c, u);
    out["closed_form_max_deviation"] = (metric.g - closed).cwiseAbs().maxCoeff();
  }
  emit(out, output);
  return kOk;
}

int run_curvature(const CaseOptions& copt, const PointOptions& popt, const std::string& output) {
  fanogeo::ManifoldCase c = resolve_case(copt);
  fanogeo::EmbeddingMap map = fanogeo::build_map(c);
  Eigen::VectorXd u = resolve_point(popt, c);
  fanogeo::MetricTensor metric = fanogeo::induced_metric(map, u);
  fanogeo::CurvatureReport curv = fanogeo::curvature(map, u);
  fanogeo::SymmetryResiduals res = fanogeo::symmetry_residuals(curv, metric.g);
  json out = case_header(c);
  out["point"] = fanogeo::real_vector_to_json(u);
  out["scalar"] = curv.scalar;
  out["metric_condition_number"] = curv.metric_condition_number;
  out["symmetry_residuals"] = json{{"christoffel_symmetry", res.christoffel_symmetry},
                                   {"riemann_last_pair", res.riemann_last_pair},
                                   {"riemann_first_pair", res.riemann_first_pair},
                                   {"riemann_pair_exchange", res.riemann_pair_exchange},
                                   {"first_bianchi", res.first_bianchi}};
  out["closed_form_available"] = fanogeo::has_scalar_closed_form(c);
  if (fanogeo::has_scalar_closed_form(c)) {
    const double closed = fanogeo::scalar_curvature_closed_form(c, u);
    out["scalar_closed_form"] = closed;
    out["closed_form_deviation"] = std::abs(curv.scalar - closed);
  }
  emit(out, output);
  return kOk;
}

struct SampleOptions {
  CaseOptions case_opt;
  int count = 100;
  std::uint64_t seed = 1;
  std::string mode = "box";
  std::string format = "json";
  std::string output;
};

int run_sample(const SampleOptions& opt) {
  fanogeo::ManifoldCase c = resolve_case(opt.case_opt);
  fanogeo::EmbeddingMap map = fanogeo::build_map(c);
  if (opt.count < 1) throw std::runtime_error("--count must be positive");
  fanogeo::SampleMode mode;
  if (opt.mode == "box") {
    mode = fanogeo::SampleMode::box;
  } else if (opt.mode == "physical") {
    mode = fanogeo::SampleMode::physical;
  } else {
    throw std::runtime_error("--mode must be box or physical");
  }
  const bool closed = fanogeo::has_scalar_closed_form(c);
  const int m = c.domain_dim();

  fanogeo::SeededRng rng(opt.seed);
  std::vector<Eigen::VectorXd> points;
  std::vector<double> scalars, closed_scalars, conditions;
  points.reserve(size_t(opt.count));
  for (int i = 0; i < opt.count; ++i) {
    Eigen::VectorXd u = fanogeo::random_manifold_point(c, mode, rng);
    fanogeo::CurvatureReport curv = fanogeo::curvature(map, u);
    points.push_back(std::move(u));
    scalars.push_back(curv.scalar);
    conditions.push_back(curv.metric_condition_number);
    if (closed) closed_scalars.push_back(fanogeo::scalar_curvature_closed_form(c, points.back()));
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!opt.output.empty()) {
    file.open(opt.output);
    if (!file) throw std::runtime_error("cannot open " + opt.output + " for writing");
    out = &file;
  }

  if (opt.format == "csv") {
    *out << "index";
    for (int k = 0; k < m; ++k) *out << ",u" << k;
    *out << ",scalar";
    if (closed) *out << ",scalar_closed_form";
    *out << ",condition_number\r\n";
    for (int i = 0; i < opt.count; ++i) {
      *out << i;
      for (int k = 0; k < m; ++k) *out << "," << number_text(points[size_t(i)][k]);
      *out << "," << number_text(scalars[size_t(i)]);
      if (closed) *out << "," << number_text(closed_scalars[size_t(i)]);
      *out << "," << number_text(conditions[size_t(i)]) << "\r\n";
    }
  } else if (opt.format == "json") {
    json arr = json::array();
    for (int i = 0; i < opt.count; ++i) {
      json row{{"index", i},
               {"u", fanogeo::real_vector_to_json(points[size_t(i)])},
               {"scalar", scalars[size_t(i)]},
               {"condition_number", conditions[size_t(i)]}};
      if (closed) row["scalar_closed_form"] = closed_scalars[size_t(i)];
      arr.push_back(std::move(row));
    }
    json doc = case_header(c);
    doc["mode"] = opt.mode;
    doc["seed"] = opt.seed;
    doc["count"] = opt.count;
    doc["points"] = arr;
    *out << doc.dump(2) << '\n';
  } else {
    throw std::runtime_error("--format must be csv or json");
  }
  if (!opt.output.empty() && !file) throw std::runtime_error("failed writing " + opt.output);

  double mn = scalars[0], mx = scalars[0], sum = 0.0;
  int nonnegative = 0;
  for (double s : scalars) {
    mn = std::min(mn, s);
    mx = std::max(mx, s);
    sum += s;
    if (s >= 0.0) ++nonnegative;
  }
  std::cerr << json{{"count", opt.count},
                    {"min", mn},
                    {"max", mx},
                    {"mean", sum / opt.count},
                    {"nonnegative_count", nonnegative}}
                   .dump()
            << '\n';
  return kOk;
}

int run_fixtures(const std::string& out_dir) {
  fs::create_directories(out_dir);
  json manifest = json::array();
  auto put = [&](const std::string& name, const fanogeo::DensityMatrix& rho,
                 const std::string& desc, const std::vector<std::string>& product_partitions,
                 const std::vector<std::string>& nonproduct_partitions,
                 const json& extra = json::object()) {
    fanogeo::write_json_file(fs::path(out_dir) / name, json(rho));
    json entry{{"file", name},
               {"levels", rho.levels},
               {"qudits", rho.qudits},
               {"description", desc},
               {"product_partitions", product_partitions},
               {"nonproduct_partitions", nonproduct_partitions}};
    entry.update(extra);
    manifest.push_back(std::move(entry));
  };
  const std::vector<std::string> all3 = {"1,2|3", "1,3|2", "1|2,3", "1|2|3"};

  put("bell.json", fanogeo::bell_state(), "maximally correlated two-qubit pair", {}, {"1|2"});
  put("ghz3.json", fanogeo::ghz_state(3), "three-qubit GHZ state", {}, all3);
  put("w3.json", fanogeo::w_state(3), "three-qubit W state", {}, all3);
  for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    char name[32];
    std::snprintf(name, sizeof name, "werner-p%03d.json", int(p * 100 + 0.5));
    put(name, fanogeo::werner_state(p), "Werner mixture, weight " + number_text(p),
        p == 0.0 ? std::vector<std::string>{"1|2"} : std::vector<std::string>{},
        p == 0.0 ? std::vector<std::string>{} : std::vector<std::string>{"1|2"},
        json{{"p", p}});
  }
  struct Spec {
    const char* case_name;
    const char* stem;
    std::vector<std::string> product;
  };
  const std::vector<Spec> specs = {
      {"two-qubit-product", "product-2q", {"1|2"}},
      {"three-qubit-biproduct", "biproduct-3q", {"1,2|3"}},
      {"three-qubit-product", "product-3q", all3},
  };
  for (const auto& spec : specs) {
    fanogeo::ManifoldCase c = fanogeo::case_by_name(spec.case_name);
    fanogeo::EmbeddingMap map = fanogeo::build_map(c);
    for (std::uint64_t seed : {901, 902}) {
      Eigen::VectorXd u = fanogeo::random_manifold_point(c, fanogeo::SampleMode::physical, seed);
      fanogeo::DensityMatrix rho = fanogeo::reconstruct(fanogeo::tensor_at(map, u));
      put(std::string(spec.stem) + "-" + std::to_string(seed - 900) + ".json", rho,
          std::string("random factorized state on the ") + spec.case_name + " family",
          spec.product, {}, json{{"case", spec.case_name}, {"seed", seed}});
    }
  }
  fanogeo::write_json_file(fs::path(out_dir) / "manifest.json", json{{"fixtures", manifest}});
  emit(json{{"out_dir", out_dir}, {"count", manifest.size() + 1}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Coefficient-tensor toolkit for multi-qudit states: orthogonal basis "
      "expansions, factorization tests, and the induced geometry of "
      "product-state families"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fanogeo 1.0.0");
  std::function<int()> action;

  std::string output_path;
  auto add_output_option = [&](CLI::App* cmd) {
    cmd->add_option("--output,-o", output_path, "Write the JSON document here instead of stdout");
  };

  // basis
  int basis_levels = 2;
  bool basis_table = false;
  CLI::App* basis = app.add_subcommand("basis", "Print the orthogonal matrix basis");
  basis->add_option("--levels", basis_levels, "Levels per subsystem")->capture_default_str();
  basis->add_flag("--table", basis_table, "Human-readable table instead of JSON");
  add_output_option(basis);
  basis->callback(
      [&] { action = [&] { return run_basis(basis_levels, basis_table, output_path); }; });

  // decompose / reconstruct / validate
  std::string state_path;
  CLI::App* dec = app.add_subcommand(
      "decompose", "Expand a state into its coefficient tensor (JSON to stdout)");
  dec->add_option("state", state_path, "State JSON file (\"-\" reads stdin)")->required();
  add_output_option(dec);
  dec->callback([&] { action = [&] { return run_decompose(state_path, output_path); }; });

  CLI::App* rec = app.add_subcommand(
      "reconstruct", "Rebuild the density matrix from a coefficient tensor");
  rec->add_option("state", state_path, "Coefficient JSON file (\"-\" reads stdin)")->required();
  add_output_option(rec);
  rec->callback([&] { action = [&] { return run_reconstruct(state_path, output_path); }; });

  CLI::App* val = app.add_subcommand(
      "validate", "Check Hermiticity, trace, and positivity (exit 1 if invalid)");
  val->add_option("state", state_path, "State JSON file (\"-\" reads stdin)")->required();
  add_output_option(val);
  val->callback([&] { action = [&] { return run_validate(state_path, output_path); }; });

  // check
  std::string check_partition;
  bool check_classify = false;
  double check_tolerance = 1e-10;
  CLI::App* check = app.add_subcommand(
      "check", "Test whether a state factorizes over a grouping (exit 1 if not)");
  check->add_option("state", state_path, "State JSON file (\"-\" reads stdin)")->required();
  check->add_option("--partition", check_partition, "Grouping to test, 1-based, e.g. \"1,2|3\"");
  check->add_flag("--classify", check_classify, "Test every grouping, coarsest first");
  check->add_option("--tolerance", check_tolerance, "Largest residual entry still accepted")
      ->capture_default_str();
  add_output_option(check);
  check->callback([&] {
    action = [&] {
      return run_check(state_path, check_partition, check_classify, check_tolerance, output_path);
    };
  });

  // metric
  CaseOptions metric_case;
  PointOptions metric_point;
  CLI::App* metric = app.add_subcommand("metric", "Induced metric at a point of a product family");
  add_case_options(metric, metric_case);
  add_point_options(metric, metric_point);
  add_output_option(metric);
  metric->callback(
      [&] { action = [&] { return run_metric(metric_case, metric_point, output_path); }; });

  // curvature
  CaseOptions curv_case;
  PointOptions curv_point;
  CLI::App* curv = app.add_subcommand(
      "curvature", "Scalar curvature and identity residuals at a point");
  add_case_options(curv, curv_case);
  add_point_options(curv, curv_point);
  add_output_option(curv);
  curv->callback(
      [&] { action = [&] { return run_curvature(curv_case, curv_point, output_path); }; });

  // sample
  SampleOptions sample;
  CLI::App* samp = app.add_subcommand(
      "sample", "Deterministic curvature sweep over random points (summary JSON on stderr)");
  add_case_options(samp, sample.case_opt);
  samp->add_option("--count", sample.count, "Number of points")->capture_default_str();
  samp->add_option("--seed", sample.seed, "Generator seed")->capture_default_str();
  samp->add_option("--mode", sample.mode, "box (uniform coordinates) or physical (valid states)")
      ->capture_default_str();
  samp->add_option("--format", sample.format, "csv or json")->capture_default_str();
  samp->add_option("--output,-o", sample.output, "Write rows to this file instead of stdout");
  samp->callback([&] { action = [&] { return run_sample(sample); }; });

  // fixtures
  std::string fixtures_dir;
  CLI::App* fix = app.add_subcommand(
      "fixtures", "Write a reference set of state files plus a manifest");
  fix->add_option("--out-dir", fixtures_dir, "Target directory")->required();
  fix->callback([&] { action = [&] { return run_fixtures(fixtures_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return kError;
  }
}
