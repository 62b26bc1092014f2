// SPDX-License-Identifier: MIT
#include "fanogeo/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace fanogeo {

namespace {

void require_layout(const nlohmann::json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string(what) + " document must be an object with a \"" +
                                key + "\" field");
}

std::pair<int, int> read_shape(const nlohmann::json& j, const char* what) {
  require_layout(j, "levels", what);
  require_layout(j, "qudits", what);
  const int levels = j.at("levels").get<int>();
  const int qudits = j.at("qudits").get<int>();
  if (levels < 2) throw std::invalid_argument(std::string(what) + ": levels must be at least 2");
  if (qudits < 1) throw std::invalid_argument(std::string(what) + ": qudits must be at least 1");
  return {levels, qudits};
}

}  // namespace

void to_json(nlohmann::json& j, const DensityMatrix& rho) {
  j = nlohmann::json{{"levels", rho.levels},
                     {"qudits", rho.qudits},
                     {"matrix", complex_matrix_to_json(rho.matrix)}};
}

void from_json(const nlohmann::json& j, DensityMatrix& rho) {
  const auto [levels, qudits] = read_shape(j, "density");
  require_layout(j, "matrix", "density");
  rho.levels = levels;
  rho.qudits = qudits;
  rho.matrix = complex_matrix_from_json(j.at("matrix"));
  if (rho.matrix.rows() != rho.dim() || rho.matrix.cols() != rho.dim())
    throw std::invalid_argument("density: matrix is " + std::to_string(rho.matrix.rows()) + "x" +
                                std::to_string(rho.matrix.cols()) + " but levels/qudits require " +
                                std::to_string(rho.dim()) + "x" + std::to_string(rho.dim()));
}

void to_json(nlohmann::json& j, const FanoTensor& d) {
  j = nlohmann::json{{"levels", d.levels}, {"qudits", d.qudits}, {"data", d.data}};
}

void from_json(const nlohmann::json& j, FanoTensor& d) {
  const auto [levels, qudits] = read_shape(j, "coefficients");
  require_layout(j, "data", "coefficients");
  d.levels = levels;
  d.qudits = qudits;
  d.data = j.at("data").get<std::vector<double>>();
  if (std::ssize(d.data) != d.size())
    throw std::invalid_argument("coefficients: data has " + std::to_string(d.data.size()) +
                                " entries but levels/qudits require " + std::to_string(d.size()));
}

void to_json(nlohmann::json& j, const ValidationReport& report) {
  j = nlohmann::json{{"hermiticity_dev", report.hermiticity_dev},
                     {"trace_dev", report.trace_dev},
                     {"min_eigenvalue", report.min_eigenvalue},
                     {"hermitian", report.hermitian},
                     {"unit_trace", report.unit_trace},
                     {"positive_semidefinite", report.positive_semidefinite},
                     {"valid", report.valid}};
}

void to_json(nlohmann::json& j, const ProductCheckReport& report) {
  j = nlohmann::json{{"partition", report.partition.to_string()},
                     {"tolerance", report.tolerance},
                     {"residual_norm", report.residual_norm},
                     {"max_violation", report.max_violation},
                     {"is_product", report.is_product}};
}

nlohmann::json complex_matrix_to_json(const Eigen::MatrixXcd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd complex_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix must be a non-empty array of rows");
  const Eigen::Index rows = Eigen::Index(j.size());
  const Eigen::Index cols = Eigen::Index(j.front().size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const nlohmann::json& row = j.at(size_t(r));
    if (!row.is_array() || Eigen::Index(row.size()) != cols)
      throw std::invalid_argument("matrix rows must all have the same length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const nlohmann::json& entry = row.at(size_t(c));
      if (entry.is_number()) {
        m(r, c) = cplx(entry.get<double>(), 0.0);
      } else if (entry.is_array() && entry.size() == 2) {
        m(r, c) = cplx(entry.at(0).get<double>(), entry.at(1).get<double>());
      } else {
        throw std::invalid_argument("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

nlohmann::json real_matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json real_vector_to_json(const Eigen::VectorXd& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Eigen::VectorXd real_vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array of numbers");
  Eigen::VectorXd v(Eigen::Index(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = j.at(size_t(i)).get<double>();
  return v;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

FanoTensor read_state_tensor(const nlohmann::json& j) {
  if (j.is_object() && j.contains("data")) return j.get<FanoTensor>();
  if (j.is_object() && j.contains("matrix")) return decompose(j.get<DensityMatrix>());
  throw std::invalid_argument(
      "state document must carry either a \"matrix\" or a \"data\" field");
}

}  // namespace fanogeo
