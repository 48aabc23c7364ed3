#pragma once

#include <limits>
#include <string>

namespace fpnorm {

/// Hölder exponent p in [1, inf], the index of the l^p space an operator acts on.
class PExponent {
public:
  /// Throws std::invalid_argument unless value is +inf or a finite number >= 1.
  explicit PExponent(double value);

  static PExponent infinity() { return PExponent(std::numeric_limits<double>::infinity()); }

  double value() const noexcept { return value_; }
  /// 1/p, with 1/inf = 0.
  double reciprocal() const noexcept;
  PExponent conjugate() const noexcept;

  bool is_one() const noexcept { return value_ == 1.0; }
  bool is_two() const noexcept { return value_ == 2.0; }
  bool is_infinite() const noexcept;
  /// p in {1, 2, inf}: the exponents with closed-form operator norms.
  bool is_endpoint() const noexcept { return is_one() || is_two() || is_infinite(); }

  std::string to_string() const;

  friend bool operator==(const PExponent&, const PExponent&) = default;

private:
  double value_;
};

/// Parses "1.5", "4/3", "inf". Throws std::invalid_argument.
PExponent parse_exponent(const std::string& text);

}  // namespace fpnorm
