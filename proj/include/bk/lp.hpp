#pragma once

#include <string>

namespace bk {

/// Exponent of the planar l^p norm used to glue the two wedge components.
/// Either a finite real p >= 1 or the symbolic value infinity.
class LpExponent {
 public:
  /// Defaults to p = infinity (the max-glue).
  LpExponent() = default;

  static LpExponent finite(double p);
  static LpExponent inf() { return LpExponent{}; }

  /// Accepts "inf" or a decimal number >= 1.
  static LpExponent parse(const std::string& text);

  bool is_inf() const { return inf_; }
  /// Finite exponent value; throws std::logic_error for p = infinity.
  double value() const;

  std::string to_string() const;

  friend bool operator==(const LpExponent&, const LpExponent&) = default;

 private:
  explicit LpExponent(double p) : inf_(false), p_(p) {}

  bool inf_ = true;
  double p_ = 0.0;
};

/// ||(a, b)||_p for a, b >= 0.
double lp_combine(double a, double b, const LpExponent& p);

/// Largest s >= 0 with ||(a, s)||_p <= t, i.e. (t^p - a^p)^{1/p} (t for p =
/// infinity). Returns a negative value when a > t + kMetricTol. Values of
/// t^p - a^p within kMetricTol of zero are clamped to 0.
double lp_residual(double t, double a, const LpExponent& p);

/// Norm-equivalence constant C with C^{-1}||x||_p <= ||x||_q <= C||x||_p on R^2.
double lp_equivalence_constant(const LpExponent& p, const LpExponent& q);

/// Additive tolerance for metric-axiom checks and closed scale comparisons.
inline constexpr double kMetricTol = 1e-12;

inline bool within_scale(double d, double t) { return d <= t + kMetricTol; }

}  // namespace bk
