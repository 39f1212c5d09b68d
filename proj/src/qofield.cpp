#include "qo/qofield.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace qo {

namespace {

long long checked_ll(__int128 v, const char* ctx) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    fail(ErrorCode::ArithmeticOverflow, ctx);
  return static_cast<long long>(v);
}

}  // namespace

Rat::Rat(long long n, long long d) : num(n), den(d) {
  if (den == 0) fail(ErrorCode::MalformedExponent, "zero denominator");
  if (den < 0) { num = -num; den = -den; }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
}

long long lcm_ll(long long a, long long b) {
  return checked_ll(__int128(a) / std::gcd(a, b) * b, "lcm");
}

Rat operator+(const Rat& a, const Rat& b) {
  __int128 n = __int128(a.num) * b.den + __int128(b.num) * a.den;
  __int128 d = __int128(a.den) * b.den;
  return Rat(checked_ll(n, "rat add"), checked_ll(d, "rat add"));
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  // cross-reduce first to keep intermediates small
  long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
  long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
  __int128 n = __int128(a.num / g1) * (b.num / g2);
  __int128 d = __int128(a.den / g2) * (b.den / g1);
  return Rat(checked_ll(n, "rat mul"), checked_ll(d, "rat mul"));
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) fail(ErrorCode::MalformedExponent, "division by zero rational");
  return a * Rat(b.den, b.num);
}

bool operator<(const Rat& a, const Rat& b) {
  return __int128(a.num) * b.den < __int128(b.num) * a.den;
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) fail(ErrorCode::MalformedExponent, "empty exponent");
  auto slash = s.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &used);
      if (used != s.size()) fail(ErrorCode::MalformedExponent, s);
      return Rat(n);
    }
    long long n = std::stoll(s.substr(0, slash), &used);
    if (used != slash) fail(ErrorCode::MalformedExponent, s);
    long long d = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1) fail(ErrorCode::MalformedExponent, s);
    return Rat(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::MalformedExponent, s);
  }
}

std::string Rat::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << '/' << den;
  return os.str();
}

const Rat& ExtRat::rat() const {
  if (inf_) fail(ErrorCode::ArithmeticOverflow, "rat() on infinity");
  return v_;
}

double ExtRat::to_double() const {
  return inf_ ? std::numeric_limits<double>::infinity() : v_.to_double();
}

ExtRat ExtRat::parse(const std::string& s) {
  if (s == "inf") return infinity();
  return ExtRat(Rat::parse(s));
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.inf_ || b.inf_) return ExtRat::infinity();
  return ExtRat(a.v_ + b.v_);
}

ExtRat operator*(const ExtRat& a, const ExtRat& b) {
  if (a.inf_ || b.inf_) {
    if ((a.is_finite() && a.is_zero()) || (b.is_finite() && b.is_zero()))
      fail(ErrorCode::ArithmeticOverflow, "0 * infinity");
    return ExtRat::infinity();
  }
  return ExtRat(a.v_ * b.v_);
}

ExtRat sub_checked(const ExtRat& a, const ExtRat& b) {
  if (b.inf_) fail(ErrorCode::NegativeExponent, "subtracting infinity");
  if (a.inf_) return ExtRat::infinity();
  Rat r = a.v_ - b.v_;
  if (r.num < 0)
    fail(ErrorCode::NegativeExponent, a.str() + " - " + b.str());
  return ExtRat(r);
}

ExtRat operator/(const ExtRat& a, const ExtRat& b) {
  if (b.inf_ || b.is_zero())
    fail(ErrorCode::ArithmeticOverflow, "division by " + b.str());
  if (a.inf_) return ExtRat::infinity();
  return ExtRat(a.v_ / b.v_);
}

bool operator<(const ExtRat& a, const ExtRat& b) {
  if (a.inf_) return false;
  if (b.inf_) return true;
  return a.v_ < b.v_;
}

ProjPoint2::ProjPoint2(Complex a, Complex b, Complex c) : c_{a, b, c} {
  double m0 = std::abs(c_[0]), m1 = std::abs(c_[1]), m2 = std::abs(c_[2]);
  if (m0 == 0.0 && m1 == 0.0 && m2 == 0.0)
    fail(ErrorCode::MalformedExponent, "projective point needs a nonzero coordinate");
  int idx = 0;
  double best = m0;
  if (m1 > best) { best = m1; idx = 1; }
  if (m2 > best) { best = m2; idx = 2; }
  Complex piv = c_[idx];
  for (auto& z : c_) z /= piv;
  c_[idx] = Complex(1.0, 0.0);
}

double projpoint_distance(const ProjPoint2& p, const ProjPoint2& q) {
  Complex dot(0, 0);
  double np = 0, nq = 0;
  for (int i = 0; i < 3; ++i) {
    dot += p.c_[i] * std::conj(q.c_[i]);
    np += std::norm(p.c_[i]);
    nq += std::norm(q.c_[i]);
  }
  double cos2 = std::norm(dot) / (np * nq);
  if (cos2 > 1.0) cos2 = 1.0;
  return std::sqrt(1.0 - cos2);
}

std::string ProjPoint2::str() const {
  std::ostringstream os;
  os << "(" << c_[0].real() << (c_[0].imag() < 0 ? "-" : "+")
     << std::abs(c_[0].imag()) << "i : " << c_[1].real()
     << (c_[1].imag() < 0 ? "-" : "+") << std::abs(c_[1].imag()) << "i : "
     << c_[2].real() << (c_[2].imag() < 0 ? "-" : "+") << std::abs(c_[2].imag())
     << "i)";
  return os.str();
}

}  // namespace qo
