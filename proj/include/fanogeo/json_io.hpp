// SPDX-License-Identifier: MIT
#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>

#include "fanogeo/fano.hpp"
#include "fanogeo/separability.hpp"

namespace fanogeo {

/// ADL serializers: assign these types to nlohmann::json directly and read
/// them back with get<...>(). Doubles round-trip exactly (shortest
/// representation that reparses to the same value).
///
/// Density document: {"levels": N, "qudits": M, "matrix": [[[re, im], ...]]}.
void to_json(nlohmann::json& j, const DensityMatrix& rho);
void from_json(const nlohmann::json& j, DensityMatrix& rho);

/// Coefficient document: {"levels": N, "qudits": M, "data": [ ... ]} with the
/// flat row-major coefficient list.
void to_json(nlohmann::json& j, const FanoTensor& d);
void from_json(const nlohmann::json& j, FanoTensor& d);

/// Report serializers (output only). Partitions appear in their 1-based
/// string form, e.g. "1,2|3".
void to_json(nlohmann::json& j, const ValidationReport& report);
void to_json(nlohmann::json& j, const ProductCheckReport& report);

/// Dense matrices as row-major nested arrays; complex entries as [re, im].
nlohmann::json complex_matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd complex_matrix_from_json(const nlohmann::json& j);
nlohmann::json real_matrix_to_json(const Eigen::MatrixXd& m);
nlohmann::json real_vector_to_json(const Eigen::VectorXd& v);
Eigen::VectorXd real_vector_from_json(const nlohmann::json& j);

/// Parses a JSON document from a file; errors mention the file name.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Writes pretty-printed (two-space) JSON with a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

/// Accepts either document flavor — a density matrix (key "matrix") or a
/// coefficient tensor (key "data") — and returns the coefficient tensor,
/// decomposing in the former case.
FanoTensor read_state_tensor(const nlohmann::json& j);

}  // namespace fanogeo
