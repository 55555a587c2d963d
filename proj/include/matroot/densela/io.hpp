#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "matroot/densela/dense.hpp"

namespace matroot {

/// A matrix read from disk whose scalar kind is only known at run time.
using AnyMatrix = std::variant<RealMatrix, ComplexMatrix>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix Market `matrix` objects in array or coordinate layout with real,
/// integer or complex fields and general, symmetric, skew-symmetric or
/// hermitian symmetry. Indices are 1-based; array data is column-major.
AnyMatrix read_matrix_market(std::istream& in);
void write_matrix_market(std::ostream& out, const RealMatrix& a);
void write_matrix_market(std::ostream& out, const ComplexMatrix& a);

/// {"rows", "cols", "kind": "real"|"complex", "data": [...]}, data row-major,
/// complex entries interleaved as re, im.
AnyMatrix matrix_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const RealMatrix& a);
nlohmann::json to_json(const ComplexMatrix& a);

/// Picks the format from the content: a leading '{' means JSON.
AnyMatrix read_matrix(std::istream& in);
AnyMatrix read_matrix_file(const std::filesystem::path& path);

enum class MatrixFormat { matrix_market, json };

/// Format from the extension: .json means JSON, anything else Matrix Market.
MatrixFormat format_for_path(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const AnyMatrix& a);

}  // namespace matroot
