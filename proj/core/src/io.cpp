#include "fpnorm/io.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fpnorm {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object()) throw InputError("document: expected a JSON object");
  const auto it = obj.find(name);
  if (it == obj.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t count_field(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw InputError(std::string("field '") + name + "': expected a nonnegative integer");
  return v.get<std::size_t>();
}

double finite_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InputError(where + ": not finite");
  return d;
}

cplx complex_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw InputError(where + ": expected [re, im]");
  return {finite_number(v[0], where + "[0]"), finite_number(v[1], where + "[1]")};
}

json pair_of(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

ComplexMatrix parse_matrix(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t rows = count_field(doc, "rows");
  const std::size_t cols = count_field(doc, "cols");
  const json& entries = field(doc, "entries");
  if (!entries.is_array() || entries.size() != rows)
    throw InputError("field 'entries': expected " + std::to_string(rows) + " rows");
  ComplexMatrix A(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    const std::string where = "entries[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != cols)
      throw InputError(where + ": ragged row, expected " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) A(i, j) = complex_pair(row[j], where + "[" + std::to_string(j) + "]");
  }
  return A;
}

FiniteGroup parse_group(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t n = count_field(doc, "order");
  const json& table = field(doc, "table");
  if (!table.is_array() || table.size() != n) throw InputError("field 'table': expected " + std::to_string(n) + " rows");
  MultiplicationTable t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "table[" + std::to_string(i) + "]";
    if (!table[i].is_array() || table[i].size() != n) throw InputError(where + ": ragged row");
    for (std::size_t j = 0; j < n; ++j) {
      const json& v = table[i][j];
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw InputError(where + "[" + std::to_string(j) + "]: expected a nonnegative integer");
      t[i][j] = v.get<std::size_t>();
    }
  }
  try {
    return FiniteGroup(std::move(t));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("field 'table': ") + e.what());
  }
}

ComplexVector parse_element(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_array()) throw InputError("element: expected an array of [re, im]");
  ComplexVector out;
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(complex_pair(doc[i], "element[" + std::to_string(i) + "]"));
  return out;
}

LaurentElement parse_laurent(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_array()) throw InputError("laurent: expected an array of [offset, re, im]");
  std::map<std::int64_t, cplx> coeffs;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = "laurent[" + std::to_string(i) + "]";
    const json& t = doc[i];
    if (!t.is_array() || t.size() != 3) throw InputError(where + ": expected [offset, re, im]");
    if (!t[0].is_number_integer()) throw InputError(where + "[0]: expected an integer offset");
    coeffs[t[0].get<std::int64_t>()] += cplx(finite_number(t[1], where + "[1]"), finite_number(t[2], where + "[2]"));
  }
  return LaurentElement(std::move(coeffs));
}

std::string matrix_to_json(const ComplexMatrix& A) {
  json entries = json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(pair_of(A(i, j)));
    entries.push_back(std::move(row));
  }
  json doc;
  doc["rows"] = A.rows();
  doc["cols"] = A.cols();
  doc["entries"] = std::move(entries);
  return doc.dump();
}

std::string group_to_json(const FiniteGroup& g) {
  json doc;
  doc["order"] = g.order();
  doc["table"] = g.table();
  return doc.dump();
}

std::string element_to_json(std::span<const cplx> coefficients) {
  json doc = json::array();
  for (const cplx& z : coefficients) doc.push_back(pair_of(z));
  return doc.dump();
}

std::string laurent_to_json(const LaurentElement& f) {
  json doc = json::array();
  for (const auto& [n, z] : f.coefficients()) doc.push_back(json::array({n, z.real(), z.imag()}));
  return doc.dump();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw InputError("invalid complex number '" + std::string(whole) + "'");
  return v;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputError("empty complex number");
  if (s.back() != 'i') {
    if (s.find('i') != std::string::npos) throw InputError("invalid complex number '" + std::string(text) + "'");
    return {parse_real(s, text), 0.0};
  }
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  if (split == std::string::npos) return {0.0, parse_real(s, text)};
  const std::string_view sv(s);
  const std::string_view real_part = sv.substr(0, split);
  if (real_part == "+" || real_part == "-") throw InputError("invalid complex number '" + std::string(text) + "'");
  return {parse_real(real_part, text), parse_real(sv.substr(split), text)};
}

ComplexVector parse_complex_list(std::string_view text) {
  ComplexVector out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace fpnorm
