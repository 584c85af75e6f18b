#include "hermann/angle.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hermann {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Floor of a rational as an integer.
std::int64_t floor_rational(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

// Value produced while parsing: a pure rational number, a rational multiple of
// pi, or a number in radians.
struct Term {
  enum class Kind { number, pi_multiple, numeric } kind = Kind::number;
  Rational r{0};
  double d = 0.0;

  double value() const {
    switch (kind) {
      case Kind::number: return boost::rational_cast<double>(r);
      case Kind::pi_multiple: return boost::rational_cast<double>(r) * kPi;
      case Kind::numeric: return d;
    }
    return d;
  }
  static Term numeric(double v) { return Term{Kind::numeric, Rational(0), v}; }
};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse angle '" + std::string(s_) + "': " + what +
                     " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term expr() {
    Term lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = add(lhs, term(), 1);
      } else if (accept('-')) {
        lhs = add(lhs, term(), -1);
      } else {
        return lhs;
      }
    }
  }

  Term term() {
    Term lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = mul(lhs, unary());
      } else if (accept('/')) {
        lhs = div(lhs, unary());
      } else if (starts_implicit_product()) {
        // "2pi" reads as 2*pi
        lhs = mul(lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  bool starts_implicit_product() {
    skip_ws();
    return s_.substr(pos_, 2) == "pi";
  }

  Term unary() {
    if (accept('-')) {
      Term t = unary();
      t.r = -t.r;
      t.d = -t.d;
      return t;
    }
    if (accept('+')) return unary();
    return primary();
  }

  Term primary() {
    skip_ws();
    if (accept('(')) {
      Term t = expr();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      return number();
    }
    std::string ident;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ident += s_[pos_++];
    if (ident.empty()) fail("expected a number, 'pi' or a function");
    if (ident == "pi") return Term{Term::Kind::pi_multiple, Rational(1), 0.0};
    if (!accept('(')) fail("expected '(' after " + ident);
    Term arg = expr();
    if (!accept(')')) fail("expected ')'");
    double x = arg.value();
    if (ident == "sqrt") return Term::numeric(std::sqrt(x));
    if (ident == "atan" || ident == "arctan") return Term::numeric(std::atan(x));
    if (ident == "tan") return Term::numeric(std::tan(x));
    if (ident == "sin") return Term::numeric(std::sin(x));
    if (ident == "cos") return Term::numeric(std::cos(x));
    if (ident == "asin" || ident == "arcsin") return Term::numeric(std::asin(x));
    if (ident == "acos" || ident == "arccos") return Term::numeric(std::acos(x));
    fail("unknown function " + ident);
  }

  Term number() {
    std::size_t start = pos_;
    bool decimal = false;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
            s_[pos_] == 'e' || s_[pos_] == 'E' ||
            ((s_[pos_] == '-' || s_[pos_] == '+') && pos_ > start &&
             (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E')))) {
      if (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E') decimal = true;
      ++pos_;
    }
    std::string text(s_.substr(start, pos_ - start));
    if (decimal) {
      try {
        return Term::numeric(std::stod(text));
      } catch (const std::exception&) {
        fail("bad number");
      }
    }
    try {
      return Term{Term::Kind::number, Rational(std::stoll(text)), 0.0};
    } catch (const std::exception&) {
      fail("bad integer");
    }
  }

  static Term add(const Term& a, const Term& b, int sign) {
    using K = Term::Kind;
    if (a.kind == b.kind && a.kind != K::numeric) {
      Term t = a;
      t.r = sign > 0 ? a.r + b.r : a.r - b.r;
      return t;
    }
    // Zero is neutral for any kind.
    if (b.kind == K::number && b.r == Rational(0)) return a;
    if (a.kind == K::number && a.r == Rational(0)) {
      Term t = b;
      if (sign < 0) {
        t.r = -t.r;
        t.d = -t.d;
      }
      return t;
    }
    return Term::numeric(sign > 0 ? a.value() + b.value() : a.value() - b.value());
  }

  Term mul(const Term& a, const Term& b) const {
    using K = Term::Kind;
    if (a.kind == K::number && b.kind == K::number) return Term{K::number, a.r * b.r, 0.0};
    if (a.kind == K::number && b.kind == K::pi_multiple) return Term{K::pi_multiple, a.r * b.r, 0.0};
    if (a.kind == K::pi_multiple && b.kind == K::number) return Term{K::pi_multiple, a.r * b.r, 0.0};
    return Term::numeric(a.value() * b.value());
  }

  Term div(const Term& a, const Term& b) const {
    using K = Term::Kind;
    if (b.kind == K::number) {
      if (b.r == Rational(0)) fail("division by zero");
      if (a.kind != K::numeric) return Term{a.kind, a.r / b.r, 0.0};
    }
    if (a.kind == K::pi_multiple && b.kind == K::pi_multiple) return Term{K::number, a.r / b.r, 0.0};
    double den = b.value();
    if (den == 0.0) fail("division by zero");
    return Term::numeric(a.value() / den);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational Angle::pi_multiple() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw std::logic_error("pi_multiple() on a numeric angle");
}

double Angle::to_radians() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return boost::rational_cast<double>(*r) * kPi;
  return std::get<double>(value_);
}

Angle Angle::operator+(const Angle& other) const {
  if (is_exact() && other.is_exact()) return Angle(pi_multiple() + other.pi_multiple());
  return Angle(to_radians() + other.to_radians());
}

Angle Angle::operator-(const Angle& other) const { return *this + (-other); }

Angle Angle::operator-() const {
  if (is_exact()) return Angle(-pi_multiple());
  return Angle(-std::get<double>(value_));
}

Angle Angle::operator*(std::int64_t k) const {
  if (is_exact()) return Angle(pi_multiple() * k);
  return Angle(std::get<double>(value_) * static_cast<double>(k));
}

bool Angle::operator==(const Angle& other) const { return value_ == other.value_; }

std::string Angle::to_string() const {
  if (!is_exact()) return format_double(std::get<double>(value_));
  Rational r = pi_multiple();
  std::int64_t p = r.numerator();
  std::int64_t q = r.denominator();
  if (p == 0) return "0";
  std::string s = p < 0 ? "-" : "";
  std::int64_t ap = p < 0 ? -p : p;
  if (ap != 1) s += std::to_string(ap) + "*";
  s += "pi";
  if (q != 1) s += "/" + std::to_string(q);
  return s;
}

std::string Angle::to_pq_string() const {
  if (!is_exact()) return format_double(std::get<double>(value_));
  Rational r = pi_multiple();
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()) + "*pi";
}

Angle Angle::parse(std::string_view text) {
  Term t = Parser(text).parse();
  switch (t.kind) {
    case Term::Kind::pi_multiple: return Angle(t.r);
    case Term::Kind::number:
      // A bare integer zero is the exact angle 0; other bare numbers are radians.
      if (t.r == Rational(0)) return Angle(Rational(0));
      return Angle(boost::rational_cast<double>(t.r));
    case Term::Kind::numeric: return Angle(t.d);
  }
  return Angle(t.d);
}

Angle reduce_mod_pi(const Angle& a) {
  if (a.is_exact()) {
    Rational r = a.pi_multiple();
    return Angle::pi_times(r - Rational(floor_rational(r)));
  }
  double x = std::fmod(a.to_radians(), kPi);
  if (x < 0) x += kPi;
  if (x >= kPi) x -= kPi;
  return Angle::radians(x);
}

double distance_mod_pi(double a, double c) {
  double d = std::fmod(a - c, kPi);
  if (d < 0) d += kPi;
  return std::min(d, kPi - d);
}

std::optional<int> twelfth_class(const Angle& a, double tol, bool* snapped) {
  if (snapped) *snapped = false;
  if (a.is_exact()) {
    Rational r = reduce_mod_pi(a).pi_multiple() * 12;
    if (r.denominator() != 1) return std::nullopt;
    return static_cast<int>(r.numerator());
  }
  double x = a.to_radians();
  for (int k = 0; k < 12; ++k) {
    if (distance_mod_pi(x, k * kPi / 12.0) < tol) {
      if (snapped) *snapped = true;
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace hermann
