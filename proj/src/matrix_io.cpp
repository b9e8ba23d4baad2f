#include "sectoria/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "sectoria/errors.hpp"

namespace sectoria {

namespace {

using nlohmann::json;

std::vector<double> flatten(const json& j, std::size_t n, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("field '") + field + "' must be an array");
  std::vector<double> out;
  out.reserve(n * n);
  const bool nested = !j.empty() && j.front().is_array();
  if (nested) {
    if (j.size() != n) throw ParseError(std::string("field '") + field + "' must have n rows");
    for (const json& row : j) {
      if (!row.is_array() || row.size() != n) {
        throw ParseError(std::string("field '") + field + "' must be an n x n array");
      }
      for (const json& v : row) {
        if (!v.is_number()) throw ParseError(std::string("non-numeric entry in '") + field + "'");
        out.push_back(v.get<double>());
      }
    }
  } else {
    if (j.size() != n * n) throw ParseError(std::string("field '") + field + "' must have n*n entries");
    for (const json& v : j) {
      if (!v.is_number()) throw ParseError(std::string("non-numeric entry in '") + field + "'");
      out.push_back(v.get<double>());
    }
  }
  for (double v : out) {
    if (!std::isfinite(v)) throw ParseError(std::string("non-finite entry in '") + field + "'");
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

ComplexMatrix parse_matrix_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im")) {
    throw ParseError("matrix file must be an object with fields n, re, im");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    throw ParseError("field 'n' must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(j["n"].get<long long>());
  const std::vector<double> re = flatten(j["re"], n, "re");
  const std::vector<double> im = flatten(j["im"], n, "im");
  return ComplexMatrix::from_parts(n, n, re, im);
}

std::string matrix_to_json(const ComplexMatrix& a) {
  require_square(a, "matrix_to_json");
  nlohmann::ordered_json j;
  j["n"] = a.n();
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (std::size_t k = 0; k < a.n(); ++k) {
      re_row.push_back(a(i, k).real());
      im_row.push_back(a(i, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  try {
    return parse_matrix_json(read_text_file(path));
  } catch (const MathError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << matrix_to_json(a) << '\n';
  if (!out) throw ParseError("write failed for " + path.string());
}

PositiveSequencePair parse_sequence_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_array() ||
      !j["b"].is_array()) {
    throw ParseError("sequence file must be an object with arrays a and b");
  }
  auto numbers = [](const json& arr) {
    std::vector<double> v;
    for (const json& x : arr) {
      if (!x.is_number()) throw ParseError("non-numeric sequence entry");
      v.push_back(x.get<double>());
    }
    return v;
  };
  try {
    return PositiveSequencePair(numbers(j["a"]), numbers(j["b"]));
  } catch (const MathError& e) {
    throw ParseError(e.what());
  }
}

PositiveSequencePair read_sequence_file(const std::filesystem::path& path) {
  return parse_sequence_json(read_text_file(path));
}

}  // namespace sectoria
