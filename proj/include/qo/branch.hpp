#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qo/qofield.hpp"

namespace qo {

// Which coordinate planes {x=0}, {y=0}, {z=0} belong to the divisor germ.
class DivisorConfig {
public:
  DivisorConfig() = default;
  static DivisorConfig parse(const std::string& letters);  // subset of "xyz"

  bool has_x() const { return x_; }
  bool has_y() const { return y_; }
  bool has_z() const { return z_; }
  DivisorConfig with_x(bool v) const { auto d = *this; d.x_ = v; return d; }
  DivisorConfig with_y(bool v) const { auto d = *this; d.y_ = v; return d; }
  DivisorConfig with_z(bool v) const { auto d = *this; d.z_ = v; return d; }
  DivisorConfig swapped_xy() const { auto d = *this; std::swap(d.x_, d.y_); return d; }
  DivisorConfig swapped_xz() const { auto d = *this; std::swap(d.x_, d.z_); return d; }
  bool empty() const { return !x_ && !y_ && !z_; }
  int count() const { return int(x_) + int(y_) + int(z_); }
  std::string str() const;  // "", "x", "xz", ...

  friend bool operator==(const DivisorConfig& a, const DivisorConfig& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }

private:
  bool x_ = false, y_ = false, z_ = false;
};

// A single monomial of the parametrizing series. The coefficient is either a
// formal unit tag (nonzero at the origin, value unknown) or a concrete
// nonzero complex number.
struct MonomialTerm {
  ExtRat ex;
  ExtRat ey;
  bool unit = true;       // formal unit when true
  Complex value{1.0, 0.0};  // concrete value when unit == false

  Complex numeric_value() const { return unit ? Complex(1.0, 0.0) : value; }
};

// (lambda, mu, a, b) of section-5 fame. (lambda, mu) is the lowest-degree
// monomial; (a, b) the lowest-degree monomial violating
// C(alpha, beta) := (alpha*beta = 0 or alpha, beta both integers),
// defined only when the leading monomial satisfies C.
struct CharQuadruple {
  ExtRat lambda = ExtRat::infinity();
  ExtRat mu = ExtRat::infinity();
  ExtRat a = ExtRat::infinity();
  ExtRat b = ExtRat::infinity();

  bool zero_series() const { return lambda.is_infinite(); }
  std::string str() const {
    return "(" + lambda.str() + ", " + mu.str() + ", " + a.str() + ", " + b.str() + ")";
  }
  friend bool operator==(const CharQuadruple& p, const CharQuadruple& q) {
    return p.lambda == q.lambda && p.mu == q.mu && p.a == q.a && p.b == q.b;
  }
  friend bool operator!=(const CharQuadruple& p, const CharQuadruple& q) { return !(p == q); }
};

// Tags for the coordinate changes of the section-5 toolkit.
enum class CoordChangeKind { T1, T2, T3, T4 };

struct CoordChange {
  CoordChangeKind kind;
  std::string detail;  // e.g. the stripped series for T4
};

// Truncated fractional-power parametrization z = zeta(x^(1/m), y^(1/m))
// together with the divisor configuration of the ambient germ.
//
// Terms are kept sorted by ascending total degree, ties broken by larger ey.
// The leading term under this order carries (lambda, mu).
class QOBranch {
public:
  QOBranch() = default;
  QOBranch(std::vector<MonomialTerm> terms, DivisorConfig divisor);

  const std::vector<MonomialTerm>& terms() const { return terms_; }
  const DivisorConfig& divisor() const { return divisor_; }
  long long m() const { return m_; }
  const std::vector<CoordChange>& history() const { return history_; }
  bool zero() const { return terms_.empty(); }
  bool all_units() const;
  bool y_free() const;
  bool x_free() const;

  QOBranch with_divisor(DivisorConfig d) const;
  void push_history(CoordChange c) { history_.push_back(std::move(c)); }

  std::string str() const;

private:
  std::vector<MonomialTerm> terms_;
  DivisorConfig divisor_;
  long long m_ = 1;
  std::vector<CoordChange> history_;
};

// Term order used throughout: total degree ascending, then ey descending.
bool term_order_less(const MonomialTerm& s, const MonomialTerm& t);

// C(alpha, beta) of the exponents definition.
bool satisfies_c(const ExtRat& ex, const ExtRat& ey);

CharQuadruple characteristic_quadruple(const QOBranch& b);
bool is_normal_form(const QOBranch& b);
bool is_normal_form(const CharQuadruple& q);
bool is_strong_normal_form(const QOBranch& b);

// True when every surviving exponent pair is integral, i.e. the branch is the
// graph of a holomorphic function (T4 could empty it when allowed).
bool is_smooth(const QOBranch& b);

struct CoordinateChangeRequest {
  CoordChangeKind kind;
  // T4 translation: subtract the full integer-exponent part when empty,
  // otherwise the serialized monomials to subtract (tests use the default).
  bool strip_integer_part = true;
};

QOBranch apply_t1(const QOBranch& b);
// T2 ((x,y,z) -> (z,y,x)): re-present with x as the graph variable. Requires
// the leading monomial to be a pure power of x with unit coefficient.
QOBranch apply_t2(const QOBranch& b);
// T3 ((x,y,z) -> (z,x,y)): re-present with y as the graph variable. Requires
// the leading monomial to be a pure power of y with unit coefficient.
QOBranch apply_t3(const QOBranch& b);
// T4: strip all monomials with integral exponent pairs. Errors when {z=0}
// belongs to the divisor germ (the translation would move that component).
QOBranch apply_t4(const QOBranch& b);

QOBranch apply_coordinate_change(const QOBranch& b, const CoordinateChangeRequest& r);

// T4 strip (when legal) followed by T1 when condition (10) fails. Idempotent.
QOBranch to_strong_normal_form(const QOBranch& b);

// JSON surface. Schema:
//   {"terms":[{"ex":"3/2","ey":"1/2","coeff":"unit" | [re, im]}, ...],
//    "divisor":"xz", "m_hint": 2}
QOBranch parse_branch(const std::string& json_text);
std::string branch_to_json(const QOBranch& b);

}  // namespace qo
