#pragma once

#include "fpnorm/certified_interval.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fpnorm::cli {

using Json = nlohmann::ordered_json;

/// Where an expected value comes from: a closed form quoted from the
/// underlying result, an independent oracle, or a structural identity.
enum class Provenance { Published, Oracle, Structural };

const char* to_string(Provenance p);

struct CheckRecord {
  std::string name;
  Provenance provenance = Provenance::Oracle;
  Json inputs = Json::object();
  Json result = Json::object();
  Json expected = Json::object();
  bool pass = false;
  double seconds = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  bool passed() const;
  std::size_t failures() const;
  /// Checks sorted by name; wall times only when requested, so that equal
  /// inputs give byte-identical output.
  Json to_json(bool timings = false) const;
};

Json interval_json(const CertifiedInterval& c);
Json complex_json(std::span<const cplx> v);

}  // namespace fpnorm::cli
