#include "fpnorm/exponent.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fpnorm {

PExponent::PExponent(double value) : value_(value) {
  if (std::isnan(value) || value < 1.0 || value == -std::numeric_limits<double>::infinity())
    throw std::invalid_argument("exponent must lie in [1, inf]; got " + std::to_string(value));
}

bool PExponent::is_infinite() const noexcept { return std::isinf(value_); }

double PExponent::reciprocal() const noexcept { return is_infinite() ? 0.0 : 1.0 / value_; }

PExponent PExponent::conjugate() const noexcept {
  if (is_one()) return infinity();
  if (is_infinite()) return PExponent(1.0);
  return PExponent(value_ / (value_ - 1.0));
}

std::string PExponent::to_string() const {
  if (is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

PExponent parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return PExponent::infinity();
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash != std::string::npos) {
      const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
      std::size_t u1 = 0, u2 = 0;
      const double a = std::stod(num, &u1), b = std::stod(den, &u2);
      if (u1 != num.size() || u2 != den.size() || b == 0.0) throw std::invalid_argument(text);
      return PExponent(a / b);
    }
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return PExponent(v);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("cannot parse exponent '" + text + "'");
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).rfind("exponent must", 0) == 0) throw;
    throw std::invalid_argument("cannot parse exponent '" + text + "'");
  }
}

}  // namespace fpnorm
