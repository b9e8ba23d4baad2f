#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sectoria/claim2.hpp"
#include "sectoria/matrix.hpp"

namespace sectoria {

/// Malformed or unreadable input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix files are JSON objects {"n": n, "re": [[...], ...], "im": [[...], ...]}
// with row-major n×n arrays. Flat arrays of length n² are also accepted on
// input. Doubles are written in shortest round-trip form, so write/read is
// bit-exact.

ComplexMatrix parse_matrix_json(std::string_view text);
std::string matrix_to_json(const ComplexMatrix& a);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& a);

/// {"a": [1, a_1, ..., a_n], "b": [1, b_1, ..., b_n]}
PositiveSequencePair parse_sequence_json(std::string_view text);
PositiveSequencePair read_sequence_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace sectoria
