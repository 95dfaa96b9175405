#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lorentz {

/// A secondary integrability index in [1, inf].  Infinity is a distinct state
/// of the type, never a floating-point sentinel, so `value()` on an infinite
/// index is a hard error rather than a silent Inf propagating into arithmetic.
class Exponent {
 public:
  static Exponent finite(double v) {
    if (!(v >= 1.0) || !std::isfinite(v)) {
      throw std::invalid_argument("Exponent::finite: index must lie in [1, inf), got " +
                                  std::to_string(v));
    }
    return Exponent(v, false);
  }

  static Exponent infinity() { return Exponent(0.0, true); }

  [[nodiscard]] bool is_infinite() const { return infinite_; }

  /// Finite value; only valid when `!is_infinite()`.
  [[nodiscard]] double value() const {
    if (infinite_) throw std::logic_error("Exponent::value: index is infinite");
    return value_;
  }

  /// Total order on [1, inf] with inf as the maximum.
  friend bool operator<(const Exponent& a, const Exponent& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator==(const Exponent& a, const Exponent& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator<=(const Exponent& a, const Exponent& b) { return a < b || a == b; }

  /// "2", "1.5", "inf".
  [[nodiscard]] std::string str() const;

  /// Parses the same grammar `str()` emits; accepts "inf" case-insensitively.
  static Exponent parse(const std::string& text);

 private:
  Exponent(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

/// Conjugate on the closed range [1, inf]: 1' = inf, inf' = 1, otherwise
/// p' = p/(p-1).  Involutive, and 1/p + 1/p' = 1 up to rounding.
inline Exponent conjugate_exponent(const Exponent& p) {
  if (p.is_infinite()) return Exponent::finite(1.0);
  const double v = p.value();
  if (v == 1.0) return Exponent::infinity();
  return Exponent::finite(v / (v - 1.0));
}

/// Conjugate restricted to the open range (1, inf), where both p and p' are
/// finite.  This is the form the norm formulas consume.
inline double conjugate_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("conjugate_exponent: p must lie in (1, inf), got " +
                                std::to_string(p));
  }
  return p / (p - 1.0);
}

/// An admissible Lorentz exponent pair: p in (1, inf), q in [1, inf].
struct ExponentPair {
  double p;
  Exponent q;

  ExponentPair(double p_, Exponent q_) : p(p_), q(q_) {
    if (!(p > 1.0) || !std::isfinite(p)) {
      throw std::invalid_argument("ExponentPair: p must lie in (1, inf), got " +
                                  std::to_string(p));
    }
  }

  static ExponentPair make(double p, double q) { return {p, Exponent::finite(q)}; }
  static ExponentPair make_inf(double p) { return {p, Exponent::infinity()}; }

  [[nodiscard]] bool q_infinite() const { return q.is_infinite(); }
  [[nodiscard]] double q_value() const { return q.value(); }

  [[nodiscard]] std::string str() const { return "(" + std::to_string(p) + "," + q.str() + ")"; }
};

inline std::string Exponent::str() const {
  if (infinite_) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value_);
  return buf;
}

inline Exponent Exponent::parse(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "inf" || t == "infinity") return Exponent::infinity();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("Exponent::parse: cannot parse '" + text + "'");
  }
  if (pos != t.size()) throw std::invalid_argument("Exponent::parse: trailing junk in '" + text + "'");
  return Exponent::finite(v);
}

}  // namespace lorentz
