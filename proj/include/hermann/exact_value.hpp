#pragma once

#include <string>
#include <variant>

#include "hermann/angle.hpp"

namespace hermann {

/// Element of Q(sqrt 3) written a + b*sqrt(3), the value +-infinity of a pole,
/// or a plain double when exactness was lost.
class ExactValue {
 public:
  struct Infinite {};

  ExactValue() : value_(Surd{Rational(0), Rational(0)}) {}
  ExactValue(Rational a, Rational b = Rational(0)) : value_(Surd{a, b}) {}

  static ExactValue finite(Rational a, Rational b) { return ExactValue(a, b); }
  static ExactValue infinite() { return ExactValue(Infinite{}); }
  static ExactValue numeric(double v) { return ExactValue(v); }

  bool is_finite_exact() const { return std::holds_alternative<Surd>(value_); }
  bool is_infinite() const { return std::holds_alternative<Infinite>(value_); }
  bool is_numeric() const { return std::holds_alternative<double>(value_); }

  /// Rational part a and sqrt(3) part b. Only valid for finite exact values.
  Rational rational_part() const;
  Rational sqrt3_part() const;

  double to_double() const;

  /// Exact zero test for exact values, |x| < tol for numeric ones.
  bool is_zero(double tol = kDefaultTolerance) const;

  /// -1, 0 or +1. Exact for Q(sqrt 3) elements.
  int sign() const;

  ExactValue operator+(const ExactValue& o) const;
  ExactValue operator-(const ExactValue& o) const;
  ExactValue operator*(const ExactValue& o) const;
  ExactValue operator/(const ExactValue& o) const;
  ExactValue operator-() const;
  ExactValue& operator+=(const ExactValue& o) { return *this = *this + o; }
  ExactValue& operator-=(const ExactValue& o) { return *this = *this - o; }

  /// Structural equality (exact component-wise; numeric bitwise).
  bool operator==(const ExactValue& o) const;

  std::string to_string() const;

 private:
  struct Surd {
    Rational a;
    Rational b;
  };
  explicit ExactValue(Infinite) : value_(Infinite{}) {}
  explicit ExactValue(double v) : value_(v) {}

  std::variant<Surd, Infinite, double> value_;
};

/// Equal exactly when both operands are exact, within `tol` otherwise.
bool approx_equal(const ExactValue& x, const ExactValue& y,
                  double tol = kDefaultTolerance);

/// tan(a); exact for multiples of pi/12, numeric otherwise.
ExactValue tan_exact(const Angle& a);
/// cot(a); exact for multiples of pi/12, numeric otherwise.
ExactValue cot_exact(const Angle& a);

}  // namespace hermann
