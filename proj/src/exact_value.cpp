#include "hermann/exact_value.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hermann {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// tan(k*pi/12) for k = 0..11 as (a, b) meaning a + b*sqrt(3); k = 6 is the pole.
struct TanEntry {
  bool pole;
  Rational a;
  Rational b;
};

const std::array<TanEntry, 12>& tan_table() {
  static const std::array<TanEntry, 12> table = {{
      {false, Rational(0), Rational(0)},      // 0
      {false, Rational(2), Rational(-1)},     // pi/12: 2 - sqrt3
      {false, Rational(0), Rational(1, 3)},   // pi/6: sqrt3/3
      {false, Rational(1), Rational(0)},      // pi/4
      {false, Rational(0), Rational(1)},      // pi/3
      {false, Rational(2), Rational(1)},      // 5pi/12: 2 + sqrt3
      {true, Rational(0), Rational(0)},       // pi/2
      {false, Rational(-2), Rational(-1)},    // 7pi/12
      {false, Rational(0), Rational(-1)},     // 2pi/3
      {false, Rational(-1), Rational(0)},     // 3pi/4
      {false, Rational(0), Rational(-1, 3)},  // 5pi/6
      {false, Rational(-2), Rational(1)},     // 11pi/12
  }};
  return table;
}

}  // namespace

Rational ExactValue::rational_part() const { return std::get<Surd>(value_).a; }
Rational ExactValue::sqrt3_part() const { return std::get<Surd>(value_).b; }

double ExactValue::to_double() const {
  if (const auto* s = std::get_if<Surd>(&value_)) {
    return boost::rational_cast<double>(s->a) + boost::rational_cast<double>(s->b) * kSqrt3;
  }
  if (is_infinite()) return INFINITY;
  return std::get<double>(value_);
}

bool ExactValue::is_zero(double tol) const {
  if (const auto* s = std::get_if<Surd>(&value_)) return s->a == Rational(0) && s->b == Rational(0);
  if (is_infinite()) return false;
  return std::abs(std::get<double>(value_)) < tol;
}

int ExactValue::sign() const {
  if (const auto* s = std::get_if<Surd>(&value_)) {
    // sign(a + b*sqrt3): compare a^2 with 3 b^2 when the signs differ.
    int sa = s->a > 0 ? 1 : (s->a < 0 ? -1 : 0);
    int sb = s->b > 0 ? 1 : (s->b < 0 ? -1 : 0);
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    Rational lhs = s->a * s->a;
    Rational rhs = s->b * s->b * 3;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }
  if (is_infinite()) return 1;
  double v = std::get<double>(value_);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

ExactValue ExactValue::operator+(const ExactValue& o) const {
  if (is_infinite() || o.is_infinite()) throw std::domain_error("arithmetic on an infinite value");
  if (is_finite_exact() && o.is_finite_exact()) {
    const auto& x = std::get<Surd>(value_);
    const auto& y = std::get<Surd>(o.value_);
    return ExactValue(x.a + y.a, x.b + y.b);
  }
  return ExactValue(to_double() + o.to_double());
}

ExactValue ExactValue::operator-(const ExactValue& o) const { return *this + (-o); }

ExactValue ExactValue::operator-() const {
  if (const auto* s = std::get_if<Surd>(&value_)) return ExactValue(-s->a, -s->b);
  if (is_infinite()) return *this;
  return ExactValue(-std::get<double>(value_));
}

ExactValue ExactValue::operator*(const ExactValue& o) const {
  if (is_infinite() || o.is_infinite()) throw std::domain_error("arithmetic on an infinite value");
  if (is_finite_exact() && o.is_finite_exact()) {
    const auto& x = std::get<Surd>(value_);
    const auto& y = std::get<Surd>(o.value_);
    return ExactValue(x.a * y.a + x.b * y.b * 3, x.a * y.b + x.b * y.a);
  }
  return ExactValue(to_double() * o.to_double());
}

ExactValue ExactValue::operator/(const ExactValue& o) const {
  if (is_infinite() || o.is_infinite()) throw std::domain_error("arithmetic on an infinite value");
  if (o.is_zero(0.0) && o.is_finite_exact()) throw std::domain_error("division by exact zero");
  if (is_finite_exact() && o.is_finite_exact()) {
    // 1/(a + b sqrt3) = (a - b sqrt3)/(a^2 - 3 b^2); the norm is nonzero because
    // sqrt3 is irrational.
    const auto& y = std::get<Surd>(o.value_);
    Rational norm = y.a * y.a - y.b * y.b * 3;
    ExactValue inverse(y.a / norm, -y.b / norm);
    return *this * inverse;
  }
  return ExactValue(to_double() / o.to_double());
}

bool ExactValue::operator==(const ExactValue& o) const {
  if (is_finite_exact() && o.is_finite_exact()) {
    const auto& x = std::get<Surd>(value_);
    const auto& y = std::get<Surd>(o.value_);
    return x.a == y.a && x.b == y.b;
  }
  if (is_infinite() || o.is_infinite()) return is_infinite() && o.is_infinite();
  if (is_numeric() && o.is_numeric()) return std::get<double>(value_) == std::get<double>(o.value_);
  return false;
}

std::string ExactValue::to_string() const {
  if (const auto* s = std::get_if<Surd>(&value_)) {
    if (s->b == Rational(0)) return rational_string(s->a);
    std::string b;
    if (s->b == Rational(1)) {
      b = "sqrt3";
    } else if (s->b == Rational(-1)) {
      b = "-sqrt3";
    } else {
      b = rational_string(s->b) + "*sqrt3";
    }
    if (s->a == Rational(0)) return b;
    std::string out = rational_string(s->a);
    if (s->b > 0) out += "+";
    return out + b;
  }
  if (is_infinite()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

bool approx_equal(const ExactValue& x, const ExactValue& y, double tol) {
  if (x.is_finite_exact() && y.is_finite_exact()) return x == y;
  if (x.is_infinite() || y.is_infinite()) return x.is_infinite() && y.is_infinite();
  return std::abs(x.to_double() - y.to_double()) < tol;
}

ExactValue tan_exact(const Angle& a) {
  if (a.is_exact()) {
    Rational twelfths = reduce_mod_pi(a).pi_multiple() * 12;
    if (twelfths.denominator() == 1) {
      const TanEntry& e = tan_table()[static_cast<std::size_t>(twelfths.numerator())];
      if (e.pole) return ExactValue::infinite();
      return ExactValue(e.a, e.b);
    }
  }
  return ExactValue::numeric(std::tan(a.to_radians()));
}

ExactValue cot_exact(const Angle& a) {
  if (a.is_exact()) {
    Rational twelfths = reduce_mod_pi(a).pi_multiple() * 12;
    if (twelfths.denominator() == 1) {
      const TanEntry& e = tan_table()[static_cast<std::size_t>(twelfths.numerator())];
      if (e.pole) return ExactValue(Rational(0));
      if (e.a == Rational(0) && e.b == Rational(0)) return ExactValue::infinite();
      return ExactValue(Rational(1)) / ExactValue(e.a, e.b);
    }
  }
  double x = a.to_radians();
  return ExactValue::numeric(std::cos(x) / std::sin(x));
}

}  // namespace hermann
