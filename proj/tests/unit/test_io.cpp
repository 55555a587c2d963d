#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "matroot/densela/io.hpp"

using namespace matroot;

namespace {

RealMatrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> g;
  RealMatrix a(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) a(i, j) = g(rng) * std::pow(10.0, static_cast<double>(i - j));
  return a;
}

AnyMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

}  // namespace

TEST_CASE("matrix market array real general is column-major") {
  const auto any = parse("%%MatrixMarket matrix array real general\n% comment\n2 2\n1\n3\n2\n4\n");
  const auto& a = std::get<RealMatrix>(any);
  CHECK(a(0, 0) == 1);
  CHECK(a(1, 0) == 3);
  CHECK(a(0, 1) == 2);
  CHECK(a(1, 1) == 4);
}

TEST_CASE("matrix market coordinate and symmetry variants") {
  const auto sym = std::get<RealMatrix>(
      parse("%%MatrixMarket matrix coordinate real symmetric\n3 3 3\n1 1 1.0\n2 1 -0.5\n3 3 2\n"));
  CHECK(sym(0, 1) == -0.5);
  CHECK(sym(1, 0) == -0.5);
  CHECK(sym(1, 1) == 0.0);
  CHECK(sym(2, 2) == 2.0);

  const auto skew = std::get<RealMatrix>(parse("%%MatrixMarket matrix coordinate integer skew-symmetric\n2 2 1\n2 1 3\n"));
  CHECK(skew(1, 0) == 3);
  CHECK(skew(0, 1) == -3);

  const auto herm = std::get<ComplexMatrix>(
      parse("%%MatrixMarket matrix coordinate complex hermitian\n2 2 2\n1 1 1 0\n2 1 0.5 2\n"));
  CHECK(herm(1, 0) == std::complex<double>(0.5, 2));
  CHECK(herm(0, 1) == std::complex<double>(0.5, -2));

  const auto carr = std::get<ComplexMatrix>(parse("%%MatrixMarket matrix array complex general\n1 2\n1 2\n3 4\n"));
  CHECK(carr(0, 0) == std::complex<double>(1, 2));
  CHECK(carr(0, 1) == std::complex<double>(3, 4));
}

TEST_CASE("malformed input is a parse error") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket vector array real general\n1 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real general\n1 1\nnan\n"), ParseError);
  CHECK_THROWS_AS(parse("{\"rows\": 1, \"cols\": 2, \"kind\": \"real\", \"data\": [1]}"), ParseError);
  CHECK_THROWS_AS(parse("{\"rows\": 1, \"cols\": 1, \"kind\": \"quaternion\", \"data\": [1]}"), ParseError);
  CHECK_THROWS_AS(parse("{not json"), ParseError);
}

TEST_CASE("json dense format") {
  const auto a = std::get<RealMatrix>(parse(R"({"rows": 2, "cols": 2, "kind": "real", "data": [1, 2, 3, 4]})"));
  CHECK(a(0, 1) == 2);
  CHECK(a(1, 0) == 3);
  const auto c = std::get<ComplexMatrix>(parse(R"({"rows": 1, "cols": 1, "kind": "complex", "data": [1.5, -2]})"));
  CHECK(c(0, 0) == std::complex<double>(1.5, -2));
}

TEST_CASE("json round trip is bit-identical") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const RealMatrix a = random_matrix(rng, 1 + trial % 7, 1 + trial % 5);
    const auto back = std::get<RealMatrix>(matrix_from_json(nlohmann::json::parse(to_json(a).dump())));
    CHECK(back == a);
  }
  ComplexMatrix c(2, 2);
  c << std::complex<double>(0.1, 1.0 / 3.0), 2, std::complex<double>(-1e-300, 5e300), 0;
  CHECK(std::get<ComplexMatrix>(matrix_from_json(nlohmann::json::parse(to_json(c).dump()))) == c);
}

TEST_CASE("matrix market round trip preserves values") {
  std::mt19937_64 rng(10);
  const RealMatrix a = random_matrix(rng, 4, 3);
  std::stringstream ss;
  write_matrix_market(ss, a);
  CHECK(std::get<RealMatrix>(read_matrix_market(ss)) == a);

  ComplexMatrix c(1, 2);
  c << std::complex<double>(0.1, -0.7), std::complex<double>(1e-5, 3);
  std::stringstream cs;
  write_matrix_market(cs, c);
  CHECK(std::get<ComplexMatrix>(read_matrix_market(cs)) == c);
}

TEST_CASE("file helpers pick the format from the extension") {
  CHECK(format_for_path("x.json") == MatrixFormat::json);
  CHECK(format_for_path("x.mtx") == MatrixFormat::matrix_market);
  CHECK(format_for_path("x") == MatrixFormat::matrix_market);

  const auto dir = std::filesystem::temp_directory_path() / "matroot_io_test";
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(11);
  const RealMatrix a = random_matrix(rng, 3, 3);
  for (const char* name : {"a.json", "a.mtx"}) {
    write_matrix_file(dir / name, a);
    CHECK(std::get<RealMatrix>(read_matrix_file(dir / name)) == a);
  }
  CHECK_THROWS(read_matrix_file(dir / "missing.mtx"));
  std::filesystem::remove_all(dir);
}
