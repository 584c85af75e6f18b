#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <boost/rational.hpp>

namespace hermann {

using Rational = boost::rational<std::int64_t>;

inline constexpr double kPi = 3.14159265358979323846;

/// Absolute tolerance used when numeric values are compared.
inline constexpr double kDefaultTolerance = 1e-9;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An angle that is either an exact rational multiple of pi or a plain number
/// of radians. Arithmetic between two exact angles stays exact; anything that
/// touches a numeric angle becomes numeric.
class Angle {
 public:
  Angle() : value_(Rational(0)) {}

  static Angle pi_times(Rational multiple) { return Angle(multiple); }
  static Angle pi_times(std::int64_t num, std::int64_t den = 1) {
    return Angle(Rational(num, den));
  }
  static Angle radians(double value) { return Angle(value); }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }

  /// Multiple of pi. Throws std::logic_error for numeric angles.
  Rational pi_multiple() const;
  double to_radians() const;

  Angle operator+(const Angle& other) const;
  Angle operator-(const Angle& other) const;
  Angle operator-() const;
  Angle operator*(std::int64_t k) const;
  Angle& operator+=(const Angle& other) { return *this = *this + other; }

  /// Structural equality: exact angles compare exactly, numeric angles compare
  /// bitwise, and an exact angle never equals a numeric one.
  bool operator==(const Angle& other) const;

  /// Human readable form: "0", "pi", "-pi/6", "2*pi/3", or a decimal.
  std::string to_string() const;
  /// Serialization form "p/q*pi" for exact angles, decimal otherwise.
  std::string to_pq_string() const;

  /// Parses "pi/3", "-pi/6", "2*pi/3", "5/12*pi", "0", "0.25",
  /// "atan(sqrt(5))", "pi/2-2*atan(sqrt(7/3))". Symbolic multiples of pi are
  /// exact; decimals and function values are numeric.
  static Angle parse(std::string_view text);

 private:
  explicit Angle(Rational r) : value_(r) {}
  explicit Angle(double d) : value_(d) {}

  std::variant<Rational, double> value_;
};

/// Representative of the angle in [0, pi).
Angle reduce_mod_pi(const Angle& a);

/// Index k in 0..11 with a == k*pi/12 (mod pi), if there is one. Exact angles
/// are tested exactly; numeric angles within `tol` (and `snapped` is set).
std::optional<int> twelfth_class(const Angle& a, double tol = kDefaultTolerance,
                                 bool* snapped = nullptr);

/// Distance of a (numeric value) to the nearest point of c + pi*Z.
double distance_mod_pi(double a, double c);

}  // namespace hermann
