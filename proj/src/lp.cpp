#include "bk/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bk {

LpExponent LpExponent::finite(double p) {
  if (!std::isfinite(p) || p < 1.0)
    throw std::invalid_argument("lp exponent must satisfy p >= 1, got " + std::to_string(p));
  return LpExponent(p);
}

LpExponent LpExponent::parse(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "infinity") return inf();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse lp exponent '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("cannot parse lp exponent '" + text + "'");
  return finite(p);
}

double LpExponent::value() const {
  if (inf_) throw std::logic_error("LpExponent::value() called on p = inf");
  return p_;
}

std::string LpExponent::to_string() const {
  if (inf_) return "inf";
  std::string s = std::to_string(p_);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

double lp_combine(double a, double b, const LpExponent& p) {
  if (p.is_inf()) return std::max(a, b);
  const double e = p.value();
  if (e == 1.0) return a + b;
  if (e == 2.0) return std::hypot(a, b);
  if (a == 0.0) return b;
  if (b == 0.0) return a;
  // Built only from monotone operations so the floating-point result stays
  // nondecreasing in each argument; mixed-simplex criteria rely on that.
  return std::pow(std::pow(a, e) + std::pow(b, e), 1.0 / e);
}

double lp_residual(double t, double a, const LpExponent& p) {
  if (a > t + kMetricTol) return -1.0;
  if (p.is_inf()) return t;
  const double e = p.value();
  const double gap = std::pow(t, e) - std::pow(std::min(a, t), e);
  if (gap <= kMetricTol) return 0.0;
  return std::pow(gap, 1.0 / e);
}

double lp_equivalence_constant(const LpExponent& p, const LpExponent& q) {
  const double ip = p.is_inf() ? 0.0 : 1.0 / p.value();
  const double iq = q.is_inf() ? 0.0 : 1.0 / q.value();
  return std::pow(2.0, std::abs(ip - iq));
}

}  // namespace bk
