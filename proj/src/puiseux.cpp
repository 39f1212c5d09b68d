#include "qo/puiseux.hpp"

#include <algorithm>
#include <cmath>

namespace qo {

namespace {

constexpr int kMaxIterations = 64;

std::optional<Rat> min_cap(const std::optional<Rat>& a, const std::optional<Rat>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? *a : *b;
}

double binom_coeff(const Rat& r, int k) {
  double acc = 1.0;
  double rd = r.to_double();
  for (int i = 0; i < k; ++i) acc *= (rd - i) / (i + 1);
  return acc;
}

bool binom_finite(const Rat& r, int k) {
  // binom(r, k) vanishes identically iff r is an integer in [0, k).
  return r.is_integer() && r.num >= 0 && r.num < k;
}

Complex principal_pow(Complex base, const Rat& e) {
  if (e.is_zero()) return Complex(1.0, 0.0);
  return std::pow(base, Complex(e.to_double(), 0.0));
}

}  // namespace

PuiseuxSeries PuiseuxSeries::monomial(Complex c, Rat ex, Rat ey) {
  PuiseuxSeries s;
  s.add_term(ex, ey, c);
  s.cleanup();
  return s;
}

PuiseuxSeries PuiseuxSeries::from_branch(const QOBranch& b) {
  PuiseuxSeries s;
  for (const auto& t : b.terms())
    s.add_term(t.ex.rat(), t.ey.rat(), t.numeric_value());
  s.cleanup();
  return s;
}

void PuiseuxSeries::add_term(const Rat& ex, const Rat& ey, Complex c) {
  auto [it, inserted] = terms_.try_emplace({ex, ey}, c);
  if (!inserted) it->second += c;
}

void PuiseuxSeries::cleanup() {
  double mx = 0.0;
  for (const auto& [e, c] : terms_) mx = std::max(mx, std::abs(c));
  for (auto it = terms_.begin(); it != terms_.end();) {
    bool beyond_cap = cap_ && (it->first.ex + it->first.ey) > *cap_;
    if (std::abs(it->second) <= kDropTol * mx || beyond_cap)
      it = terms_.erase(it);
    else
      ++it;
  }
  y_free_ = std::all_of(terms_.begin(), terms_.end(),
                        [](const auto& kv) { return kv.first.ey.is_zero(); }) &&
            (exact() || y_free_);
}

PuiseuxSeries SeriesBuilder::take() {
  s_.cleanup();
  return std::move(s_);
}

long long PuiseuxSeries::m() const {
  long long m = 1;
  for (const auto& [e, c] : terms_) m = lcm_ll(lcm_ll(m, e.ex.den), e.ey.den);
  return m;
}

Rat PuiseuxSeries::order() const {
  if (terms_.empty()) fail(ErrorCode::MalformedExponent, "order of zero series");
  bool first = true;
  Rat best;
  for (const auto& [e, c] : terms_) {
    Rat tot = e.ex + e.ey;
    if (first || tot < best) { best = tot; first = false; }
  }
  return best;
}

double PuiseuxSeries::max_coeff() const {
  double mx = 0.0;
  for (const auto& [e, c] : terms_) mx = std::max(mx, std::abs(c));
  return mx;
}

bool PuiseuxSeries::nonneg_support() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    return kv.first.ex.is_nonneg() && kv.first.ey.is_nonneg();
  });
}

PuiseuxSeries PuiseuxSeries::truncated(Rat new_cap) const {
  PuiseuxSeries s = *this;
  s.cap_ = min_cap(cap_, new_cap);
  s.cleanup();
  return s;
}

PuiseuxSeries PuiseuxSeries::swapped_vars() const {
  PuiseuxSeries s;
  for (const auto& [e, c] : terms_) s.add_term(e.ey, e.ex, c);
  s.cap_ = cap_;
  s.y_free_ = false;
  s.cleanup();
  if (s.exact())
    s.y_free_ = std::all_of(s.terms_.begin(), s.terms_.end(),
                            [](const auto& kv) { return kv.first.ey.is_zero(); });
  return s;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries s;
  for (const auto& [e, c] : a.terms_) s.add_term(e.ex, e.ey, c);
  for (const auto& [e, c] : b.terms_) s.add_term(e.ex, e.ey, c);
  s.cap_ = min_cap(a.cap_, b.cap_);
  s.y_free_ = a.y_free_ && b.y_free_;
  s.cleanup();
  return s;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a + b.scaled(Complex(-1.0, 0.0));
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries s;
  std::optional<Rat> cap;
  if (a.cap_ && !b.is_zero()) cap = min_cap(cap, *a.cap_ + b.order());
  if (b.cap_ && !a.is_zero()) cap = min_cap(cap, *b.cap_ + a.order());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Rat ex = ea.ex + eb.ex, ey = ea.ey + eb.ey;
      if (cap && (ex + ey) > *cap) continue;
      s.add_term(ex, ey, ca * cb);
    }
  s.cap_ = cap;
  s.y_free_ = a.y_free_ && b.y_free_;
  s.cleanup();
  return s;
}

PuiseuxSeries PuiseuxSeries::scaled(Complex c) const {
  PuiseuxSeries s;
  for (const auto& [e, co] : terms_) s.add_term(e.ex, e.ey, co * c);
  s.cap_ = cap_;
  s.y_free_ = y_free_;
  s.cleanup();
  return s;
}

PuiseuxSeries PuiseuxSeries::shifted(Rat dx, Rat dy) const {
  PuiseuxSeries s;
  for (const auto& [e, c] : terms_) s.add_term(e.ex + dx, e.ey + dy, c);
  if (cap_) s.cap_ = *cap_ + dx + dy;
  s.y_free_ = y_free_ && dy.is_zero();
  s.cleanup();
  return s;
}

PuiseuxSeries PuiseuxSeries::pow_rational(const Rat& r, const Rat& out_cap) const {
  if (terms_.empty()) {
    if (r.num <= 0) fail(ErrorCode::NoDominantTerm, "0^r with r <= 0");
    return zero();
  }
  if (r.is_zero()) return constant(Complex(1.0, 0.0));
  // Exact small integer powers keep exactness.
  if (r.is_integer() && r.num > 0 && r.num <= 64) {
    PuiseuxSeries acc = *this;
    for (long long i = 1; i < r.num; ++i) {
      acc = acc * (*this);
      if (acc.cap_) acc = acc.truncated(out_cap);
    }
    if (acc.cap_) acc = acc.truncated(out_cap);
    return acc;
  }
  // Dominant corner: the componentwise-minimal exponent pair must be present.
  Rat cx = terms_.begin()->first.ex, cy = terms_.begin()->first.ey;
  for (const auto& [e, c] : terms_) {
    if (e.ex < cx) cx = e.ex;
    if (e.ey < cy) cy = e.ey;
  }
  auto corner = terms_.find({cx, cy});
  if (corner == terms_.end())
    fail(ErrorCode::NoDominantTerm, "no dominant corner monomial for rational power");
  Complex c0 = corner->second;
  PuiseuxSeries t = shifted(-cx, -cy).scaled(Complex(1.0, 0.0) / c0);
  t.terms_.erase({Rat(0), Rat(0)});  // t = U - 1, ord > 0
  Rat shift_x = r * cx, shift_y = r * cy;
  Rat shift_total = shift_x + shift_y;
  Rat rel_cap = out_cap - shift_total;
  std::optional<Rat> trel;
  if (cap_) trel = *cap_ - (cx + cy);
  if (trel && *trel < rel_cap) rel_cap = *trel;

  PuiseuxSeries acc = constant(binom_coeff(r, 0));
  if (!t.is_zero()) {
    Rat g = t.order();
    if (!(Rat(0) < g)) fail(ErrorCode::NoDominantTerm, "unit cofactor has order 0 tail");
    PuiseuxSeries tk = constant(Complex(1.0, 0.0));
    for (int k = 1;; ++k) {
      if (binom_finite(r, k)) break;  // integer exponent: expansion terminates
      Rat kg = g;
      for (int i = 1; i < k; ++i) kg = kg + g;
      if (rel_cap < kg) break;
      tk = (tk * t).truncated(rel_cap);
      acc = acc + tk.scaled(binom_coeff(r, k));
      if (k > 4096) fail(ErrorCode::CapExhausted, "binomial expansion too long");
    }
  }
  bool exact_result = exact() && t.is_zero();  // pure monomial
  acc = acc.shifted(shift_x, shift_y).scaled(principal_pow(c0, r));
  if (!exact_result)
    acc = acc.truncated(out_cap);
  acc.y_free_ = y_free_;
  acc.cleanup();
  return acc;
}

PuiseuxSeries PuiseuxSeries::partial_x() const {
  PuiseuxSeries s;
  for (const auto& [e, c] : terms_) {
    if (e.ex.is_zero()) continue;
    s.add_term(e.ex - Rat(1), e.ey, c * Complex(e.ex.to_double(), 0.0));
  }
  if (cap_) s.cap_ = *cap_ - Rat(1);
  s.y_free_ = y_free_;
  s.cleanup();
  return s;
}

PuiseuxSeries PuiseuxSeries::partial_y() const {
  PuiseuxSeries s;
  for (const auto& [e, c] : terms_) {
    if (e.ey.is_zero()) continue;
    s.add_term(e.ex, e.ey - Rat(1), c * Complex(e.ey.to_double(), 0.0));
  }
  if (cap_) s.cap_ = *cap_ - Rat(1);
  s.y_free_ = y_free_;
  s.cleanup();
  return s;
}

std::pair<PuiseuxSeries, PuiseuxSeries> partials(const PuiseuxSeries& s) {
  return {s.partial_x(), s.partial_y()};
}

PuiseuxSeries PuiseuxSeries::reexpand_y_at(Complex y0, const Rat& out_cap) const {
  if (std::abs(y0) == 0.0)
    fail(ErrorCode::BadTranslation, "re-expansion point must be nonzero");
  PuiseuxSeries s;
  bool truncated_any = false;
  for (const auto& [e, c] : terms_) {
    if (e.ey.is_zero()) {
      s.add_term(e.ex, Rat(0), c);
      continue;
    }
    for (int j = 0;; ++j) {
      if (binom_finite(e.ey, j)) break;
      if (out_cap < e.ex + Rat(j)) { truncated_any = true; break; }
      Complex coeff = c * binom_coeff(e.ey, j) * principal_pow(y0, e.ey - Rat(j));
      s.add_term(e.ex, Rat(j), coeff);
      if (j > 4096) fail(ErrorCode::CapExhausted, "re-expansion too long");
    }
  }
  if (cap_ || truncated_any) s.cap_ = min_cap(cap_, out_cap);
  s.y_free_ = false;
  s.cleanup();
  return s;
}

PuiseuxSeries PuiseuxSeries::reexpand_x_at(Complex x0, const Rat& out_cap) const {
  return swapped_vars().reexpand_y_at(x0, out_cap).swapped_vars();
}

Complex eval(const PuiseuxSeries& s, Complex x, Complex y, int branch_choice) {
  if (s.cap()) {
    double r = std::max(std::abs(x), std::abs(y));
    if (r >= 1.0) fail(ErrorCode::TailTooLarge, "evaluation point outside unit disc");
    double tail = s.max_coeff() * std::pow(r, s.cap()->to_double()) / ((1 - r) * (1 - r));
    if (tail > 1e-9) fail(ErrorCode::TailTooLarge, "truncation tail above 1e-9");
  }
  auto powb = [&](Complex base, const Rat& e) -> Complex {
    if (e.is_zero()) return Complex(1.0, 0.0);
    if (std::abs(base) == 0.0) return Complex(0.0, 0.0);
    Complex lg = std::log(base);
    lg += Complex(0.0, 2.0 * M_PI * branch_choice);
    return std::exp(lg * Complex(e.to_double(), 0.0));
  };
  Complex acc(0.0, 0.0);
  for (const auto& [e, c] : s.terms()) acc += c * powb(x, e.ex) * powb(y, e.ey);
  return acc;
}

PuiseuxSeries substitute_chart(const PuiseuxSeries& s, const ChartMap& chart) {
  if (chart.a11 * chart.a22 - chart.a12 * chart.a21 == 0)
    fail(ErrorCode::NotLaurentMonomialChart, "chart matrix is singular");
  SeriesBuilder out;
  for (const auto& [e, c] : s.terms()) {
    Rat ex = Rat(chart.a11) * e.ex + Rat(chart.a21) * e.ey + chart.s1;
    Rat ey = Rat(chart.a12) * e.ex + Rat(chart.a22) * e.ey + chart.s2;
    out.add(ex, ey, c);
  }
  if (s.cap()) {
    // Missing input terms have total degree > cap; bound the minimal total
    // degree of their images.
    long long r1 = chart.a11 + chart.a12, r2 = chart.a21 + chart.a22;
    long long rmin = std::min(r1, r2);
    out.set_cap(Rat(rmin) * (*s.cap()) + chart.s1 + chart.s2);
  }
  if (!(s.y_free_closed() && chart.a12 == 0 && chart.s2 == Rat(0)))
    out.mark_y_dependent();
  return out.take();
}

namespace {

bool series_close(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  double scale = std::max(a.max_coeff(), b.max_coeff());
  if (scale == 0.0) return true;
  PuiseuxSeries d = a - b;
  return d.max_coeff() <= 1e-12 * scale;
}

// Compose s(x, v) at v = g (g in the (w, x)-plane: slot1 = w, slot2 = x).
PuiseuxSeries compose_second(const PuiseuxSeries& s, const PuiseuxSeries& g,
                             const Rat& out_cap) {
  PuiseuxSeries acc = PuiseuxSeries::zero();
  for (const auto& [e, c] : s.terms()) {
    PuiseuxSeries term;
    if (e.ey.is_zero())
      term = PuiseuxSeries::monomial(c, Rat(0), e.ex);
    else
      term = g.pow_rational(e.ey, out_cap).shifted(Rat(0), e.ex).scaled(c);
    acc = acc + term;
  }
  return acc.truncated(out_cap);
}

}  // namespace

PuiseuxSeries revert_in_second(const PuiseuxSeries& s, const Rat& out_cap) {
  if (s.is_zero()) fail(ErrorCode::NoDominantTerm, "cannot revert the zero series");
  Rat cx = s.terms().begin()->first.ex, dv = s.terms().begin()->first.ey;
  for (const auto& [e, c] : s.terms()) {
    if (e.ex < cx) cx = e.ex;
    if (e.ey < dv) dv = e.ey;
  }
  if (!(Rat(0) < dv))
    fail(ErrorCode::NoDominantTerm, "series does not genuinely depend on the solve variable");
  auto corner = s.terms().find({cx, dv});
  if (corner == s.terms().end())
    fail(ErrorCode::NoDominantTerm, "no dominant corner x^c v^d");
  Complex c0 = corner->second;
  // U = s / (c0 x^c v^d), unit with U(0,0) = 1.
  PuiseuxSeries u = s.shifted(-cx, -dv).scaled(Complex(1.0, 0.0) / c0);
  Rat inv_d = Rat(1) / dv;
  Rat lead_w = inv_d, lead_x = -(cx / dv);
  Rat eff_cap = lead_w + lead_x + out_cap;  // out_cap is a margin above the lead
  Complex lead_c = principal_pow(Complex(1.0, 0.0) / c0, inv_d);
  // v = c0^{-1/d} w^{1/d} x^{-c/d} * U(x, v)^{-1/d}; fixed point from the
  // pure monomial.
  PuiseuxSeries v = PuiseuxSeries::monomial(lead_c, lead_w, lead_x);
  bool u_trivial = u.terms().size() == 1;
  if (!u_trivial) {
    for (int it = 0;; ++it) {
      if (it >= kMaxIterations) fail(ErrorCode::NewtonDiverged, "reversion did not stabilize");
      PuiseuxSeries uv = compose_second(u, v, eff_cap);
      PuiseuxSeries next = uv.pow_rational(-inv_d, eff_cap)
                               .shifted(lead_w, lead_x)
                               .scaled(lead_c)
                               .truncated(eff_cap);
      if (series_close(next, v)) { v = next; break; }
      v = next;
    }
  }
  if (!v.nonneg_support())
    fail(ErrorCode::NotAGraph, "reverted series has negative exponents");
  return v;
}

PuiseuxSeries revert_in_first(const PuiseuxSeries& s, const Rat& out_cap) {
  return revert_in_second(s.swapped_vars(), out_cap);
}

double recomposition_residual(const PuiseuxSeries& s, const PuiseuxSeries& g) {
  Rat cap = g.cap() ? *g.cap() : Rat(16);
  PuiseuxSeries comp = compose_second(s, g, cap);
  comp = comp - PuiseuxSeries::monomial(Complex(1.0, 0.0), Rat(1), Rat(0));
  double lead = std::max(1.0, s.max_coeff());
  return comp.max_coeff() / lead;
}

double recomposition_residual_first(const PuiseuxSeries& s, const PuiseuxSeries& g) {
  return recomposition_residual(s.swapped_vars(), g);
}

PuiseuxSeries implicit_uz_solve(const PuiseuxSeries& s, const Rat& out_cap) {
  if (s.is_zero()) fail(ErrorCode::NoDominantTerm, "zero series in U_z chart");
  // Leading term by (total asc, ey desc); must be strictly dominant in total
  // degree with sigma = lambda + mu < 1.
  auto lead = s.terms().begin();
  bool first = true;
  for (auto it = s.terms().begin(); it != s.terms().end(); ++it) {
    Rat tot = it->first.ex + it->first.ey;
    Rat best = lead->first.ex + lead->first.ey;
    if (first) { lead = it; first = false; continue; }
    if (tot < best || (tot == best && lead->first.ey < it->first.ey)) lead = it;
  }
  Rat lambda = lead->first.ex, mu = lead->first.ey;
  Rat sigma = lambda + mu;
  if (!(sigma < Rat(1)))
    fail(ErrorCode::RuleGap, "U_z chart only applies when lambda+mu < 1");
  Rat om = Rat(1) - sigma;
  Rat A = lambda / om, B = mu / om;
  Complex cl = lead->second;
  struct Pert { Rat du, dv, dt; Complex c; };
  std::vector<Pert> pert;
  for (const auto& [e, c] : s.terms()) {
    if (e == lead->first) continue;
    Rat dt = e.ex + e.ey - sigma;
    if (!(Rat(0) < dt))
      fail(ErrorCode::NoDominantTerm, "tied total degrees in U_z chart");
    Rat du = (e.ex - lambda) + A * dt;
    Rat dv = (e.ey - mu) + B * dt;
    if (!du.is_nonneg() || !dv.is_nonneg())
      fail(ErrorCode::NoDominantTerm, "leading term not cone-dominant in U_z chart");
    pert.push_back({du, dv, dt, c / cl});
  }
  Rat inv_om = Rat(1) / om;
  Complex w0 = principal_pow(cl, inv_om);
  PuiseuxSeries W = PuiseuxSeries::constant(w0);
  if (!pert.empty()) {
    for (int it = 0;; ++it) {
      if (it >= kMaxIterations) fail(ErrorCode::NewtonDiverged, "U_z solve did not stabilize");
      // W = cl^{1/(1-sigma)} (1 + sum c_e u^du v^dv W^dt)^{1/(1-sigma)}
      PuiseuxSeries q = PuiseuxSeries::zero();
      for (const auto& p : pert)
        q = q + W.pow_rational(p.dt, out_cap).shifted(p.du, p.dv).scaled(p.c);
      PuiseuxSeries next =
          (PuiseuxSeries::constant(Complex(1.0, 0.0)) + q.truncated(out_cap))
              .pow_rational(inv_om, out_cap)
              .scaled(w0);
      next = next.truncated(out_cap);
      if (series_close(next, W)) { W = next; break; }
      W = next;
    }
  }
  PuiseuxSeries w = W.shifted(A, B);
  if (!w.nonneg_support()) fail(ErrorCode::NotAGraph, "U_z solve produced negative exponents");
  return w;
}

CharQuadruple leading_quadruple(const PuiseuxSeries& s) {
  CharQuadruple q;
  if (s.is_zero()) return q;
  if (!s.nonneg_support())
    fail(ErrorCode::NotAGraph, "series with negative exponents is not a branch");
  std::vector<MonomialTerm> terms;
  for (const auto& [e, c] : s.terms())
    terms.push_back({ExtRat(e.ex), ExtRat(e.ey), false, c});
  std::sort(terms.begin(), terms.end(), term_order_less);
  q.lambda = terms.front().ex;
  q.mu = terms.front().ey;
  if (!satisfies_c(terms.front().ex, terms.front().ey)) return q;
  for (const auto& t : terms) {
    if (!satisfies_c(t.ex, t.ey)) {
      q.a = t.ex;
      q.b = t.ey;
      return q;
    }
  }
  // No violating monomial seen. Decisive only when nothing can hide beyond
  // the cap.
  if (s.exact() || s.m() == 1 || s.y_free_closed()) return q;
  fail(ErrorCode::TruncationExhausted,
       "(a,b) scan exhausted the truncation cap without a verdict");
}

Rat RaySeries::min_exponent() const {
  if (terms.empty()) fail(ErrorCode::MalformedExponent, "min exponent of zero ray series");
  return terms.front().first;
}

Complex RaySeries::eval(double t) const {
  Complex acc(0.0, 0.0);
  for (const auto& [e, c] : terms) acc += c * std::pow(t, e.to_double());
  return acc;
}

RaySeries RaySeries::shifted(const Rat& d) const {
  RaySeries r = *this;
  for (auto& [e, c] : r.terms) e = e + d;
  return r;
}

namespace {

RaySeries collect_ray(std::map<Rat, Complex>&& m) {
  RaySeries r;
  double mx = 0.0;
  for (const auto& [e, c] : m) mx = std::max(mx, std::abs(c));
  for (const auto& [e, c] : m)
    if (std::abs(c) > PuiseuxSeries::kDropTol * mx) r.terms.push_back({e, c});
  return r;
}

}  // namespace

RaySeries compose_ray(const PuiseuxSeries& s, const Rat& alpha, const Rat& beta,
                      Complex A, Complex B) {
  std::map<Rat, Complex> m;
  for (const auto& [e, c] : s.terms()) {
    Rat g = alpha * e.ex + beta * e.ey;
    m[g] += c * principal_pow(A, e.ex) * principal_pow(B, e.ey);
  }
  return collect_ray(std::move(m));
}

RaySeries compose_ray_x(const PuiseuxSeries& s, const Rat& alpha, Complex A, Complex y0) {
  std::map<Rat, Complex> m;
  for (const auto& [e, c] : s.terms()) {
    Rat g = alpha * e.ex;
    m[g] += c * principal_pow(A, e.ex) * principal_pow(y0, e.ey);
  }
  return collect_ray(std::move(m));
}

RaySeries compose_ray_y(const PuiseuxSeries& s, const Rat& beta, Complex B, Complex x0) {
  std::map<Rat, Complex> m;
  for (const auto& [e, c] : s.terms()) {
    Rat g = beta * e.ey;
    m[g] += c * principal_pow(B, e.ey) * principal_pow(x0, e.ex);
  }
  return collect_ray(std::move(m));
}

QOBranch series_to_branch(const PuiseuxSeries& s, const DivisorConfig& d) {
  if (!s.nonneg_support())
    fail(ErrorCode::NotAGraph, "series with negative exponents is not a branch");
  std::vector<MonomialTerm> terms;
  for (const auto& [e, c] : s.terms())
    terms.push_back({ExtRat(e.ex), ExtRat(e.ey), false, c});
  return QOBranch(std::move(terms), d);
}

// --- T2 / T3, declared in branch.hpp -------------------------------------

namespace {
constexpr long long kWorkCapNum = 12;
}

QOBranch apply_t2(const QOBranch& b) {
  CharQuadruple q = characteristic_quadruple(b);
  if (b.zero() || !q.mu.is_zero())
    fail(ErrorCode::NotAGraph, "T2 requires a pure x-power leading monomial");
  PuiseuxSeries s = PuiseuxSeries::from_branch(b);
  PuiseuxSeries g = revert_in_first(s, Rat(kWorkCapNum));
  QOBranch out = series_to_branch(g, b.divisor().swapped_xz());
  for (const auto& h : b.history()) out.push_history(h);
  out.push_history({CoordChangeKind::T2, ""});
  return out;
}

QOBranch apply_t3(const QOBranch& b) {
  CharQuadruple q = characteristic_quadruple(b);
  if (b.zero() || !q.lambda.is_zero())
    fail(ErrorCode::NotAGraph, "T3 requires a pure y-power leading monomial");
  PuiseuxSeries s = PuiseuxSeries::from_branch(b);
  PuiseuxSeries g = revert_in_second(s, Rat(kWorkCapNum));
  DivisorConfig d;
  d = d.with_x(b.divisor().has_z()).with_y(b.divisor().has_x()).with_z(b.divisor().has_y());
  QOBranch out = series_to_branch(g, d);
  for (const auto& h : b.history()) out.push_history(h);
  out.push_history({CoordChangeKind::T3, ""});
  return out;
}

}  // namespace qo
