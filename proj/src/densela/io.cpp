#include "matroot/densela/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace matroot {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%') continue;
    return true;
  }
  return false;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename Scalar>
void require_finite(const DenseMatrix<Scalar>& a) {
  if (!all_finite(a)) throw ParseError("matrix contains NaN or Inf entries");
}

struct MarketHeader {
  bool coordinate = false;
  bool complex = false;
  std::string symmetry = "general";
};

MarketHeader parse_header(const std::string& line) {
  std::istringstream ss(line);
  std::string banner, object, layout, field, symmetry;
  ss >> banner >> object >> layout >> field >> symmetry;
  if (banner != "%%MatrixMarket") throw ParseError("missing %%MatrixMarket banner");
  object = lower(object);
  layout = lower(layout);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix") throw ParseError("unsupported Matrix Market object '" + object + "'");
  MarketHeader h;
  if (layout == "coordinate") {
    h.coordinate = true;
  } else if (layout != "array") {
    throw ParseError("unsupported Matrix Market layout '" + layout + "'");
  }
  if (field == "complex") {
    h.complex = true;
  } else if (field != "real" && field != "integer" && field != "double") {
    throw ParseError("unsupported Matrix Market field '" + field + "'");
  }
  if (symmetry.empty()) symmetry = "general";
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric" && symmetry != "hermitian") {
    throw ParseError("unsupported Matrix Market symmetry '" + symmetry + "'");
  }
  if (symmetry == "hermitian" && !h.complex) symmetry = "symmetric";
  h.symmetry = symmetry;
  return h;
}

template <typename Scalar>
Scalar mirrored(const Scalar& v, const std::string& symmetry) {
  if (symmetry == "skew-symmetric") return -v;
  if constexpr (is_complex_v<Scalar>) {
    if (symmetry == "hermitian") return std::conj(v);
  }
  return v;
}

template <typename Scalar>
Scalar read_value(std::istringstream& ss) {
  double re = 0.0, im = 0.0;
  if (!(ss >> re)) throw ParseError("missing matrix value");
  if constexpr (is_complex_v<Scalar>) {
    if (!(ss >> im)) throw ParseError("missing imaginary part");
    return Scalar(re, im);
  } else {
    return re;
  }
}

template <typename Scalar>
DenseMatrix<Scalar> read_market_body(std::istream& in, const MarketHeader& h) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("missing size line");
  std::istringstream size_line(line);
  long rows = 0, cols = 0, nnz = 0;
  if (!(size_line >> rows >> cols) || rows <= 0 || cols <= 0) throw ParseError("bad size line: " + line);
  if (h.coordinate && !(size_line >> nnz)) throw ParseError("coordinate size line needs an entry count");
  const bool symmetric = h.symmetry != "general";
  if (symmetric && rows != cols) throw ParseError("symmetric storage requires a square matrix");

  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(rows, cols);
  if (h.coordinate) {
    for (long e = 0; e < nnz; ++e) {
      if (!next_data_line(in, line)) throw ParseError("expected " + std::to_string(nnz) + " entries");
      std::istringstream ss(line);
      long i = 0, j = 0;
      if (!(ss >> i >> j)) throw ParseError("bad coordinate entry: " + line);
      if (i < 1 || i > rows || j < 1 || j > cols) throw ParseError("index out of range: " + line);
      const Scalar v = read_value<Scalar>(ss);
      a(i - 1, j - 1) = v;
      if (symmetric && i != j) a(j - 1, i - 1) = mirrored(v, h.symmetry);
    }
  } else {
    for (long j = 0; j < cols; ++j) {
      const long first_row = symmetric ? (h.symmetry == "skew-symmetric" ? j + 1 : j) : 0;
      for (long i = first_row; i < rows; ++i) {
        if (!next_data_line(in, line)) throw ParseError("too few array entries");
        std::istringstream ss(line);
        const Scalar v = read_value<Scalar>(ss);
        a(i, j) = v;
        if (symmetric && i != j) a(j, i) = mirrored(v, h.symmetry);
      }
    }
  }
  require_finite(a);
  return a;
}

template <typename Scalar>
void write_market(std::ostream& out, const DenseMatrix<Scalar>& a) {
  out << "%%MatrixMarket matrix array " << (is_complex_v<Scalar> ? "complex" : "real") << " general\n";
  out << a.rows() << ' ' << a.cols() << '\n';
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if constexpr (is_complex_v<Scalar>) {
        out << format_double(a(i, j).real()) << ' ' << format_double(a(i, j).imag()) << '\n';
      } else {
        out << format_double(a(i, j)) << '\n';
      }
    }
}

}  // namespace

AnyMatrix read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market input");
  const auto header = parse_header(line);
  if (header.complex) return read_market_body<std::complex<double>>(in, header);
  return read_market_body<double>(in, header);
}

void write_matrix_market(std::ostream& out, const RealMatrix& a) { write_market(out, a); }
void write_matrix_market(std::ostream& out, const ComplexMatrix& a) { write_market(out, a); }

AnyMatrix matrix_from_json(const nlohmann::json& doc) {
  try {
    const auto rows = doc.at("rows").get<long>();
    const auto cols = doc.at("cols").get<long>();
    const auto kind = doc.value("kind", std::string("real"));
    const auto& data = doc.at("data");
    if (rows <= 0 || cols <= 0) throw ParseError("matrix dimensions must be positive");
    if (kind == "real") {
      if (static_cast<long>(data.size()) != rows * cols) throw ParseError("data length does not match rows*cols");
      RealMatrix a(rows, cols);
      for (long k = 0; k < rows * cols; ++k) a(k / cols, k % cols) = data.at(k).get<double>();
      require_finite(a);
      return a;
    }
    if (kind == "complex") {
      if (static_cast<long>(data.size()) != 2 * rows * cols) {
        throw ParseError("complex data length must be 2*rows*cols");
      }
      ComplexMatrix a(rows, cols);
      for (long k = 0; k < rows * cols; ++k) {
        a(k / cols, k % cols) = {data.at(2 * k).get<double>(), data.at(2 * k + 1).get<double>()};
      }
      require_finite(a);
      return a;
    }
    throw ParseError("unknown matrix kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON matrix: ") + e.what());
  }
}

nlohmann::json to_json(const RealMatrix& a) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) data.push_back(a(i, j));
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"kind", "real"}, {"data", std::move(data)}};
}

nlohmann::json to_json(const ComplexMatrix& a) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      data.push_back(a(i, j).real());
      data.push_back(a(i, j).imag());
    }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"kind", "complex"}, {"data", std::move(data)}};
}

AnyMatrix read_matrix(std::istream& in) {
  in >> std::ws;
  if (in.peek() == '{') {
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return matrix_from_json(doc);
  }
  return read_matrix_market(in);
}

AnyMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_matrix(in);
}

MatrixFormat format_for_path(const std::filesystem::path& path) {
  return lower(path.extension().string()) == ".json" ? MatrixFormat::json : MatrixFormat::matrix_market;
}

void write_matrix_file(const std::filesystem::path& path, const AnyMatrix& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const auto format = format_for_path(path);
  std::visit(
      [&](const auto& m) {
        if (format == MatrixFormat::json) {
          out << to_json(m).dump() << '\n';
        } else {
          write_matrix_market(out, m);
        }
      },
      a);
}

}  // namespace matroot
