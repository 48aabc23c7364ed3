#pragma once

// JSON file formats and the command-line complex-list syntax.
//
//   matrix:   {"rows": r, "cols": c, "entries": [[[re, im], ...], ...]}
//   group:    {"order": n, "table": [[...], ...]}
//   element:  [[re, im], ...]
//   laurent:  [[offset, re, im], ...]

#include "fpnorm/complex_matrix.hpp"
#include "fpnorm/finite_group.hpp"
#include "fpnorm/laurent.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fpnorm {

/// Malformed input; what() names the offending field.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

ComplexMatrix parse_matrix(std::string_view text);
FiniteGroup parse_group(std::string_view text);
ComplexVector parse_element(std::string_view text);
LaurentElement parse_laurent(std::string_view text);

std::string matrix_to_json(const ComplexMatrix& A);
std::string group_to_json(const FiniteGroup& g);
std::string element_to_json(std::span<const cplx> coefficients);
std::string laurent_to_json(const LaurentElement& f);

/// Whole file as a string; InputError if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

/// "1,0+1i,-0.5-2i,i" -> {1, i, -0.5-2i, i}.
ComplexVector parse_complex_list(std::string_view text);
cplx parse_complex(std::string_view text);

}  // namespace fpnorm
