#include "anorm/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace anorm {

ComplexMatrix parse_matrix_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix file: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    throw ParseError("matrix file: expected keys rows, cols, data");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw ParseError("matrix file: rows/cols must be integers");
  const long long rows = j["rows"].get<long long>();
  const long long cols = j["cols"].get<long long>();
  if (rows < 0 || cols < 0) throw ParseError("matrix file: negative dimension");
  if (rows != cols) throw ParseError("matrix file: operators must be square");
  const auto& data = j["data"];
  if (!data.is_array() ||
      data.size() != static_cast<std::size_t>(rows * cols))
    throw ParseError("matrix file: data must hold rows*cols entries");

  ComplexMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::size_t idx = 0;
  for (const auto& entry : data) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number())
      throw ParseError("matrix file: each entry must be [re, im]");
    const double re = entry[0].get<double>();
    const double im = entry[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw ParseError("matrix file: non-finite entry");
    m.data()[idx++] = Complex(re, im);
  }
  return m;
}

std::string write_matrix_file(const ComplexMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      data.push_back({m(i, j).real(), m(i, j).imag()});
  nlohmann::json j{
      {"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
  return j.dump();
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << write_matrix_file(m) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace anorm
