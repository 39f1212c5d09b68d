#include "qo/branch.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qo {

using nlohmann::ordered_json;

DivisorConfig DivisorConfig::parse(const std::string& letters) {
  DivisorConfig d;
  size_t i = 0;
  auto take = [&](char c, bool& flag) {
    if (i < letters.size() && letters[i] == c) { flag = true; ++i; }
  };
  take('x', d.x_);
  take('y', d.y_);
  take('z', d.z_);
  if (i != letters.size())
    fail(ErrorCode::ParseError, "divisor must be a subset of \"xyz\" in order: " + letters);
  return d;
}

std::string DivisorConfig::str() const {
  std::string s;
  if (x_) s += 'x';
  if (y_) s += 'y';
  if (z_) s += 'z';
  return s;
}

bool term_order_less(const MonomialTerm& s, const MonomialTerm& t) {
  ExtRat ds = s.ex + s.ey, dt = t.ex + t.ey;
  if (ds != dt) return ds < dt;
  if (s.ey != t.ey) return t.ey < s.ey;  // larger ey first
  return s.ex < t.ex;                    // unreachable for distinct supports
}

QOBranch::QOBranch(std::vector<MonomialTerm> terms, DivisorConfig divisor)
    : terms_(std::move(terms)), divisor_(divisor) {
  for (const auto& t : terms_) {
    if (t.ex.is_infinite() || t.ey.is_infinite())
      fail(ErrorCode::MalformedExponent, "infinite exponent in support");
    if (!t.unit && std::abs(t.value) == 0.0)
      fail(ErrorCode::ZeroCoefficient, "term with zero coefficient");
  }
  std::sort(terms_.begin(), terms_.end(), term_order_less);
  for (size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].ex == terms_[i - 1].ex && terms_[i].ey == terms_[i - 1].ey)
      fail(ErrorCode::DuplicateMonomial,
           "x^" + terms_[i].ex.str() + " y^" + terms_[i].ey.str());
  m_ = 1;
  for (const auto& t : terms_)
    m_ = lcm_ll(lcm_ll(m_, t.ex.denominator()), t.ey.denominator());
}

bool QOBranch::all_units() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const MonomialTerm& t) { return t.unit; });
}

bool QOBranch::y_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const MonomialTerm& t) { return t.ey.is_zero(); });
}

bool QOBranch::x_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const MonomialTerm& t) { return t.ex.is_zero(); });
}

QOBranch QOBranch::with_divisor(DivisorConfig d) const {
  QOBranch b = *this;
  b.divisor_ = d;
  return b;
}

std::string QOBranch::str() const {
  if (terms_.empty()) return "0 [" + divisor_.str() + "]";
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    if (terms_[i].unit)
      os << "u";
    else
      os << "(" << terms_[i].value.real() << (terms_[i].value.imag() < 0 ? "" : "+")
         << terms_[i].value.imag() << "i)";
    os << "·x^" << terms_[i].ex.str() << " y^" << terms_[i].ey.str();
  }
  os << " [" << divisor_.str() << "]";
  return os.str();
}

bool satisfies_c(const ExtRat& ex, const ExtRat& ey) {
  if (ex.is_zero() || ey.is_zero()) return true;
  return ex.is_integer() && ey.is_integer();
}

CharQuadruple characteristic_quadruple(const QOBranch& b) {
  CharQuadruple q;
  if (b.zero()) return q;
  const auto& lead = b.terms().front();
  q.lambda = lead.ex;
  q.mu = lead.ey;
  if (!satisfies_c(lead.ex, lead.ey)) return q;  // (a,b) undefined, stays infinite
  for (const auto& t : b.terms()) {
    if (!satisfies_c(t.ex, t.ey)) {
      q.a = t.ex;
      q.b = t.ey;
      break;
    }
  }
  return q;
}

bool is_normal_form(const CharQuadruple& q) {
  if (q.zero_series()) return true;
  if (q.mu < q.lambda) return true;
  return q.lambda == q.mu && q.b <= q.a;
}

bool is_normal_form(const QOBranch& b) {
  return is_normal_form(characteristic_quadruple(b));
}

bool is_strong_normal_form(const QOBranch& b) {
  for (const auto& t : b.terms())
    if (t.ex.is_integer() && t.ey.is_integer()) return false;
  return is_normal_form(b);
}

bool is_smooth(const QOBranch& b) {
  for (const auto& t : b.terms())
    if (!(t.ex.is_integer() && t.ey.is_integer())) return false;
  return true;
}

QOBranch apply_t1(const QOBranch& b) {
  std::vector<MonomialTerm> sw;
  sw.reserve(b.terms().size());
  for (const auto& t : b.terms()) sw.push_back({t.ey, t.ex, t.unit, t.value});
  QOBranch out(std::move(sw), b.divisor().swapped_xy());
  for (const auto& h : b.history()) out.push_history(h);
  out.push_history({CoordChangeKind::T1, ""});
  return out;
}

QOBranch apply_t4(const QOBranch& b) {
  bool has_integral = false;
  for (const auto& t : b.terms())
    if (t.ex.is_integer() && t.ey.is_integer()) { has_integral = true; break; }
  if (!has_integral) return b;
  if (b.divisor().has_z())
    fail(ErrorCode::BadTranslation,
         "translation would move the {z=0} divisor component");
  std::vector<MonomialTerm> kept;
  std::ostringstream stripped;
  for (const auto& t : b.terms()) {
    if (t.ex.is_integer() && t.ey.is_integer())
      stripped << " x^" << t.ex.str() << "y^" << t.ey.str();
    else
      kept.push_back(t);
  }
  QOBranch out(std::move(kept), b.divisor());
  for (const auto& h : b.history()) out.push_history(h);
  out.push_history({CoordChangeKind::T4, "strip" + stripped.str()});
  return out;
}

QOBranch apply_coordinate_change(const QOBranch& b, const CoordinateChangeRequest& r) {
  switch (r.kind) {
    case CoordChangeKind::T1: return apply_t1(b);
    case CoordChangeKind::T2: return apply_t2(b);
    case CoordChangeKind::T3: return apply_t3(b);
    case CoordChangeKind::T4: return apply_t4(b);
  }
  fail(ErrorCode::RuleGap, "unknown coordinate change");
}

QOBranch to_strong_normal_form(const QOBranch& b) {
  QOBranch cur = b;
  if (!cur.divisor().has_z()) cur = apply_t4(cur);
  if (!is_normal_form(cur)) cur = apply_t1(cur);
  return cur;
}

namespace {

ExtRat exponent_from_json(const ordered_json& j) {
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 0) fail(ErrorCode::MalformedExponent, std::to_string(v));
    return ExtRat(v);
  }
  if (j.is_string()) return ExtRat::parse(j.get<std::string>());
  fail(ErrorCode::MalformedExponent, j.dump());
}

}  // namespace

QOBranch parse_branch(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    fail(ErrorCode::ParseError, "branch JSON needs a \"terms\" array");
  std::vector<MonomialTerm> terms;
  for (const auto& tj : j["terms"]) {
    MonomialTerm t;
    if (!tj.contains("ex") || !tj.contains("ey"))
      fail(ErrorCode::ParseError, "term needs \"ex\" and \"ey\"");
    t.ex = exponent_from_json(tj["ex"]);
    t.ey = exponent_from_json(tj["ey"]);
    if (!tj.contains("coeff") || (tj["coeff"].is_string() && tj["coeff"] == "unit")) {
      t.unit = true;
    } else if (tj["coeff"].is_array() && tj["coeff"].size() == 2) {
      t.unit = false;
      t.value = Complex(tj["coeff"][0].get<double>(), tj["coeff"][1].get<double>());
      if (std::abs(t.value) == 0.0)
        fail(ErrorCode::ZeroCoefficient, "term coefficient [0,0]");
    } else if (tj["coeff"].is_number()) {
      t.unit = false;
      t.value = Complex(tj["coeff"].get<double>(), 0.0);
      if (std::abs(t.value) == 0.0) fail(ErrorCode::ZeroCoefficient, "term coefficient 0");
    } else {
      fail(ErrorCode::ParseError, "coeff must be \"unit\", a number, or [re, im]");
    }
    terms.push_back(t);
  }
  DivisorConfig d;
  if (j.contains("divisor")) d = DivisorConfig::parse(j["divisor"].get<std::string>());
  QOBranch b(std::move(terms), d);
  if (j.contains("m_hint")) {
    long long hint = j["m_hint"].get<long long>();
    if (hint <= 0 || hint % b.m() != 0)
      fail(ErrorCode::ParseError, "m_hint " + std::to_string(hint) +
                                      " incompatible with computed m=" + std::to_string(b.m()));
  }
  return b;
}

std::string branch_to_json(const QOBranch& b) {
  ordered_json j;
  j["terms"] = ordered_json::array();
  for (const auto& t : b.terms()) {
    ordered_json tj;
    tj["ex"] = t.ex.str();
    tj["ey"] = t.ey.str();
    if (t.unit)
      tj["coeff"] = "unit";
    else
      tj["coeff"] = ordered_json::array({t.value.real(), t.value.imag()});
    j["terms"].push_back(tj);
  }
  j["divisor"] = b.divisor().str();
  j["m_hint"] = b.m();
  return j.dump();
}

}  // namespace qo
