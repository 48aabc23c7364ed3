#include "fpnorm/io.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <string>

using namespace fpnorm;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(ParseMatrix, ReadsEntries) {
  const ComplexMatrix A = parse_matrix(R"({"rows": 2, "cols": 2, "entries": [[[1, 0], [0, 1]], [[0, -1], [2.5, 0]]]})");
  EXPECT_EQ(A, (ComplexMatrix{{1.0, cplx(0, 1)}, {cplx(0, -1), 2.5}}));
}

TEST(ParseMatrix, ErrorsNameTheField) {
  EXPECT_NE(error_of([] { parse_matrix(R"({"rows": 2, "cols": 2, "entries": [[[1,0],[0,0]], [[1,0]]]})"); })
                .find("entries[1]"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_matrix(R"({"rows": 2, "entries": []})"); }).find("cols"), std::string::npos);
  EXPECT_NE(error_of([] { parse_matrix(R"({"rows": -1, "cols": 1, "entries": []})"); }).find("rows"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_matrix(R"({"rows": 1, "cols": 1, "entries": [[["a", 0]]]})"); })
                .find("entries[0][0][0]"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_matrix(R"({"rows": 1, "cols": 1, "entries": [[[1]]]})"); }).find("entries[0][0]"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_matrix("{"); }).find("invalid JSON"), std::string::npos);
  EXPECT_NE(error_of([] { parse_matrix("[]"); }), "");
}

TEST(ParseMatrix, RoundTrips) {
  const ComplexMatrix A = tst::random_matrix(3, 4, 2);
  EXPECT_EQ(parse_matrix(matrix_to_json(A)), A);
}

TEST(ParseGroup, ReadsAndValidates) {
  const FiniteGroup g = parse_group(R"({"order": 2, "table": [[0, 1], [1, 0]]})");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(parse_group(group_to_json(FiniteGroup::symmetric(3))).table(), FiniteGroup::symmetric(3).table());
  EXPECT_NE(error_of([] { parse_group(R"({"order": 3, "table": [[0,1,2],[1,0,0],[2,0,0]]})"); }).find("table"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_group(R"({"order": 2, "table": [[0,1],[1]]})"); }).find("table[1]"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_group(R"({"order": 2, "table": [[0,1],[1,-1]]})"); }).find("table[1][1]"),
            std::string::npos);
}

TEST(ParseElement, RoundTrips) {
  const ComplexVector a = {1.0, cplx(0.0, -2.0), cplx(0.25, 3.0)};
  EXPECT_EQ(parse_element(element_to_json(a)), a);
  EXPECT_NE(error_of([] { parse_element("[[1, 0], [2]]"); }).find("element[1]"), std::string::npos);
}

TEST(ParseLaurent, RoundTripsAndMergesOffsets) {
  const LaurentElement f({{-3, cplx(1.0, 2.0)}, {4, 0.5}});
  EXPECT_EQ(parse_laurent(laurent_to_json(f)).coefficients(), f.coefficients());
  EXPECT_EQ(parse_laurent("[[1, 1, 0], [1, 0, 1]]")[1], cplx(1.0, 1.0));
  EXPECT_NE(error_of([] { parse_laurent("[[1.5, 1, 0]]"); }).find("laurent[0][0]"), std::string::npos);
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("1"), cplx(1.0));
  EXPECT_EQ(parse_complex("i"), cplx(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
  EXPECT_EQ(parse_complex("-2i"), cplx(0.0, -2.0));
  EXPECT_EQ(parse_complex("0+1i"), cplx(0.0, 1.0));
  EXPECT_EQ(parse_complex("-0.5-2i"), cplx(-0.5, -2.0));
  EXPECT_EQ(parse_complex("1e-3+2i"), cplx(1e-3, 2.0));
  EXPECT_EQ(parse_complex("2.5e+1-i"), cplx(25.0, -1.0));
  EXPECT_EQ(parse_complex(" 3 + 4i "), cplx(3.0, 4.0));
  for (const char* bad : {"", "x", "1+", "i1", "1+2j", "+-i", "1e400"}) EXPECT_THROW(parse_complex(bad), InputError) << bad;
}

TEST(ParseComplex, Lists) {
  EXPECT_EQ(parse_complex_list("1,0+1i,-0.5-2i,i"), (ComplexVector{1.0, cplx(0, 1), cplx(-0.5, -2), cplx(0, 1)}));
  EXPECT_THROW(parse_complex_list("1,,2"), InputError);
}

TEST(ReadTextFile, MissingFileNamesThePath) {
  EXPECT_NE(error_of([] { read_text_file("/nonexistent/x.json"); }).find("/nonexistent/x.json"), std::string::npos);
}
