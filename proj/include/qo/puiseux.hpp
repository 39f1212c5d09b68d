#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qo/branch.hpp"
#include "qo/qofield.hpp"

namespace qo {

// Exponent pair of a series term. Signed: intermediate objects (partial
// derivatives, Laurent chart images) may carry negative exponents.
struct ExpPair {
  Rat ex, ey;
  friend bool operator<(const ExpPair& a, const ExpPair& b) {
    if (a.ex != b.ex) return a.ex < b.ex;
    return a.ey < b.ey;
  }
  friend bool operator==(const ExpPair& a, const ExpPair& b) {
    return a.ex == b.ex && a.ey == b.ey;
  }
};

// Monomial coordinate substitution generated by the blow-up charts:
// old x = X^a11 Y^a12, old y = X^a21 Y^a22, new graph value = z * X^s1 Y^s2
// (X, Y the new base coordinates).
struct ChartMap {
  long long a11 = 1, a12 = 0, a21 = 0, a22 = 1;
  Rat s1 = Rat(0), s2 = Rat(0);
  static ChartMap identity() { return {}; }
  static ChartMap sigma0_Ux() { return {1, 0, 1, 1, Rat(-1), Rat(0)}; }
  static ChartMap sigma0_Uy() { return {1, 1, 0, 1, Rat(0), Rat(-1)}; }
  static ChartMap sigmax_Vx() { return {1, 0, 0, 1, Rat(-1), Rat(0)}; }
  static ChartMap sigmay_Wy() { return {1, 0, 0, 1, Rat(0), Rat(-1)}; }
};

// Numeric truncated two-variable fractional power series. Exponents are
// exact rationals; coefficients are complex doubles. `cap` is the total
// degree up to which the support is complete (nullopt: the series is exact).
class PuiseuxSeries {
public:
  static constexpr double kDropTol = 1e-13;

  PuiseuxSeries() = default;
  static PuiseuxSeries zero() { return {}; }
  static PuiseuxSeries monomial(Complex c, Rat ex, Rat ey);
  static PuiseuxSeries constant(Complex c) { return monomial(c, Rat(0), Rat(0)); }
  // Units become the constant 1.
  static PuiseuxSeries from_branch(const QOBranch& b);

  const std::map<ExpPair, Complex>& terms() const { return terms_; }
  std::optional<Rat> cap() const { return cap_; }
  bool is_zero() const { return terms_.empty(); }
  bool exact() const { return !cap_.has_value(); }
  long long m() const;
  Rat order() const;           // min total degree; requires nonzero
  double max_coeff() const;
  bool y_free_closed() const { return y_free_; }
  bool nonneg_support() const;

  PuiseuxSeries truncated(Rat new_cap) const;
  PuiseuxSeries swapped_vars() const;  // x <-> y

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  PuiseuxSeries scaled(Complex c) const;
  PuiseuxSeries shifted(Rat dx, Rat dy) const;  // multiply by x^dx y^dy

  // s^r for a series with a dominant corner monomial (componentwise-minimal
  // exponent pair present with nonzero coefficient). Binomial expansion
  // truncated at `out_cap` total degree relative to the input support.
  PuiseuxSeries pow_rational(const Rat& r, const Rat& out_cap) const;

  PuiseuxSeries partial_x() const;
  PuiseuxSeries partial_y() const;

  // y -> y0 + y (re-expansion at an axis point); y0 != 0.
  PuiseuxSeries reexpand_y_at(Complex y0, const Rat& out_cap) const;
  PuiseuxSeries reexpand_x_at(Complex x0, const Rat& out_cap) const;

  friend class SeriesBuilder;

private:
  void add_term(const Rat& ex, const Rat& ey, Complex c);
  void cleanup();

  std::map<ExpPair, Complex> terms_;
  std::optional<Rat> cap_;
  bool y_free_ = true;
};

class SeriesBuilder {
public:
  void add(const Rat& ex, const Rat& ey, Complex c) { s_.add_term(ex, ey, c); }
  void set_cap(std::optional<Rat> cap) { s_.cap_ = std::move(cap); }
  void mark_y_dependent() { s_.y_free_ = false; }
  PuiseuxSeries take();

private:
  PuiseuxSeries s_;
};

// Value of the chosen m-th-root branch determination at (x, y).
// branch_choice twists every power by exp(2*pi*i*k*e).
Complex eval(const PuiseuxSeries& s, Complex x, Complex y, int branch_choice = 0);

// Proper-transform substitution along a monomial chart.
PuiseuxSeries substitute_chart(const PuiseuxSeries& s, const ChartMap& chart);

// Solve the second variable: given w = s(x, v) with dominant corner
// x^c v^d * unit (d > 0), return v as a series in (w, x) -- first slot w,
// second slot x. `out_cap` is the truncation margin above the leading total
// degree of the solution. Errors: NoDominantTerm, NewtonDiverged, NotAGraph
// (negative exponents in the result).
PuiseuxSeries revert_in_second(const PuiseuxSeries& s, const Rat& out_cap);
// Solve the first variable: returns x as a series in (w, y).
PuiseuxSeries revert_in_first(const PuiseuxSeries& s, const Rat& out_cap);

enum class SolveRole { FirstVariable, SecondVariable };
inline PuiseuxSeries revert(const PuiseuxSeries& s, SolveRole role, const Rat& out_cap) {
  return role == SolveRole::FirstVariable ? revert_in_first(s, out_cap)
                                          : revert_in_second(s, out_cap);
}

// Max coefficient mismatch of s(x, g(w, x)) against the identity monomial w,
// relative to the leading coefficient. Independent recomposition check for
// every reversion.
double recomposition_residual(const PuiseuxSeries& s, const PuiseuxSeries& g);
// Same for a first-variable solve x = g(w, y).
double recomposition_residual_first(const PuiseuxSeries& s, const PuiseuxSeries& g);

// Solve w = s(u*w, v*w): the sigma0 U_z chart. Requires min total degree < 1
// and a strictly dominant leading term. Returns w as a series in (u, v);
// `out_cap` is the truncation margin above the leading total degree.
PuiseuxSeries implicit_uz_solve(const PuiseuxSeries& s, const Rat& out_cap);

// Characteristic quadruple read off the numeric support. TruncationExhausted
// when the (a, b) scan is not decisive under the cap.
CharQuadruple leading_quadruple(const PuiseuxSeries& s);

// Termwise partials, spec surface.
std::pair<PuiseuxSeries, PuiseuxSeries> partials(const PuiseuxSeries& s);

// Univariate series in t obtained by composing along a curve.
struct RaySeries {
  std::vector<std::pair<Rat, Complex>> terms;  // sorted by exponent
  bool is_zero() const { return terms.empty(); }
  Rat min_exponent() const;
  Complex eval(double t) const;
  RaySeries shifted(const Rat& d) const;  // multiply by t^d
};

// (x, y) = (A t^alpha, B t^beta), alpha, beta > 0.
RaySeries compose_ray(const PuiseuxSeries& s, const Rat& alpha, const Rat& beta,
                      Complex A, Complex B);
// (x, y) = (A t^alpha, y0) with y0 constant.
RaySeries compose_ray_x(const PuiseuxSeries& s, const Rat& alpha, Complex A, Complex y0);
// (x, y) = (x0, B t^beta).
RaySeries compose_ray_y(const PuiseuxSeries& s, const Rat& beta, Complex B, Complex x0);

// Exact-exponent conversion back to a branch (coefficients stay concrete).
QOBranch series_to_branch(const PuiseuxSeries& s, const DivisorConfig& d);

}  // namespace qo
