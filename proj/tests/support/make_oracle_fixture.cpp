// Regenerates tests/fixtures/oracle_fixture.json and the CLI matrix file.
//   make_oracle_fixture <fixture-dir>

#include "sphere_oracle.hpp"

#include "fpnorm/io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_oracle_fixture <fixture-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  const double ps[] = {1.3, 2.7};
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  nlohmann::json cases = nlohmann::json::array();
  std::string cli_matrix;
  for (int c = 0; c < 20; ++c) {
    const std::size_t n = c < 10 ? 2 : 3;
    fpnorm::ComplexMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = {unit(rng), unit(rng)};
    nlohmann::json item;
    item["matrix"] = nlohmann::json::parse(fpnorm::matrix_to_json(A));
    for (double p : ps) item["oracle"][std::to_string(p).substr(0, 3)] = fpnorm::tst::sphere_oracle(A, p);
    std::cout << "case " << c << ": " << item["oracle"].dump() << "\n";
    if (c == 10) cli_matrix = fpnorm::matrix_to_json(A);
    cases.push_back(std::move(item));
  }
  nlohmann::json doc;
  doc["seed"] = 20240611;
  doc["p"] = {1.3, 2.7};
  doc["cases"] = std::move(cases);
  std::ofstream(dir / "oracle_fixture.json") << doc.dump(2) << "\n";
  std::ofstream(dir / "random3x3.json") << cli_matrix << "\n";
  return 0;
}
