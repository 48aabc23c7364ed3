#include "report.hpp"

#include <algorithm>

namespace fpnorm::cli {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Published: return "published";
    case Provenance::Oracle: return "oracle";
    case Provenance::Structural: return "structural";
  }
  return "unknown";
}

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

Json SuiteReport::to_json(bool timings) const {
  std::vector<const CheckRecord*> sorted;
  for (const auto& c : checks) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->name < b->name; });

  Json doc;
  doc["suite"] = suite;
  doc["seed"] = seed;
  doc["verdict"] = passed() ? "pass" : "fail";
  doc["checks_total"] = checks.size();
  doc["checks_failed"] = failures();
  Json list = Json::array();
  for (const CheckRecord* c : sorted) {
    Json r;
    r["name"] = c->name;
    r["provenance"] = to_string(c->provenance);
    r["inputs"] = c->inputs;
    r["result"] = c->result;
    r["expected"] = c->expected;
    r["verdict"] = c->pass ? "pass" : "fail";
    if (timings) r["seconds"] = c->seconds;
    list.push_back(std::move(r));
  }
  doc["checks"] = std::move(list);
  return doc;
}

Json interval_json(const CertifiedInterval& c) {
  Json j;
  j["lower"] = c.lower;
  j["upper"] = c.upper;
  j["converged"] = c.converged;
  return j;
}

Json complex_json(std::span<const cplx> v) {
  Json out = Json::array();
  for (const cplx& z : v) out.push_back(Json::array({z.real(), z.imag()}));
  return out;
}

}  // namespace fpnorm::cli
