#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "qo/errors.hpp"

namespace qo {

// Exact signed rational. Workhorse scalar for series exponents, where
// intermediate values (partial derivatives, Laurent shifts) may be negative.
struct Rat {
  long long num = 0;
  long long den = 1;  // always > 0, gcd(|num|, den) = 1

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d);

  static Rat parse(const std::string& s);

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }
  bool is_nonneg() const { return num >= 0; }
  double to_double() const { return double(num) / double(den); }
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }
};

long long lcm_ll(long long a, long long b);

// Nonnegative rational extended with +infinity. Scalar for all branch
// exponents (lambda, mu, a, b); infinity absorbs addition and dominates
// every finite value.
class ExtRat {
public:
  ExtRat() : inf_(false), v_(0) {}
  ExtRat(long long n) : inf_(false), v_(n) { check_nonneg(); }
  ExtRat(long long n, long long d) : inf_(false), v_(n, d) { check_nonneg(); }
  explicit ExtRat(const Rat& r) : inf_(false), v_(r) { check_nonneg(); }

  static ExtRat infinity() { ExtRat e; e.inf_ = true; return e; }
  static ExtRat parse(const std::string& s);

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  bool is_zero() const { return !inf_ && v_.is_zero(); }
  bool is_integer() const { return !inf_ && v_.is_integer(); }
  const Rat& rat() const;  // requires finite
  double to_double() const;
  long long denominator() const { return inf_ ? 1 : v_.den; }
  std::string str() const { return inf_ ? "inf" : v_.str(); }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  friend ExtRat operator*(const ExtRat& a, const ExtRat& b);
  // a - b with b finite; NegativeExponent when the result would be negative.
  friend ExtRat sub_checked(const ExtRat& a, const ExtRat& b);
  // a / b with b finite positive.
  friend ExtRat operator/(const ExtRat& a, const ExtRat& b);

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b);
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

private:
  void check_nonneg() const {
    if (!inf_ && v_.num < 0)
      fail(ErrorCode::NegativeExponent, "ExtRat must be nonnegative: " + v_.str());
  }
  bool inf_;
  Rat v_;
};

using Complex = std::complex<double>;

// Point of the complex projective plane, stored normalized so the
// largest-modulus coordinate equals 1 (ties broken by the first index).
class ProjPoint2 {
public:
  ProjPoint2() : c_{Complex(0), Complex(0), Complex(1)} {}
  ProjPoint2(Complex a, Complex b, Complex c);

  const std::array<Complex, 3>& coords() const { return c_; }

  // Chordal (sine of Fubini-Study angle) distance: 0 iff projectively equal,
  // 1 on orthogonal representatives.
  friend double projpoint_distance(const ProjPoint2& p, const ProjPoint2& q);

  friend bool operator==(const ProjPoint2& p, const ProjPoint2& q) {
    return projpoint_distance(p, q) < 1e-9;
  }

  std::string str() const;

private:
  std::array<Complex, 3> c_;
};

}  // namespace qo
