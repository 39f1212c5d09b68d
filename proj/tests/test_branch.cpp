#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "qo/branch.hpp"

using namespace qo;

namespace {

MonomialTerm u(long long xn, long long xd, long long yn, long long yd) {
  return {ExtRat(xn, xd), ExtRat(yn, yd), true, Complex(1, 0)};
}

QOBranch mk(std::vector<MonomialTerm> ts, const std::string& div = "") {
  return QOBranch(std::move(ts), DivisorConfig::parse(div));
}

// Independent definitional checker: recompute the quadruple by explicit
// scans with its own comparator, no reuse of the production ordering.
CharQuadruple brute_quadruple(const QOBranch& b, bool prefer_small_ey_on_tie = false) {
  CharQuadruple q;
  if (b.zero()) return q;
  auto less = [&](const MonomialTerm& s, const MonomialTerm& t) {
    ExtRat ds = s.ex + s.ey, dt = t.ex + t.ey;
    if (ds != dt) return ds < dt;
    if (prefer_small_ey_on_tie) return s.ey < t.ey;
    return t.ey < s.ey;
  };
  std::vector<MonomialTerm> ts = b.terms();
  auto lead = *std::min_element(ts.begin(), ts.end(), less);
  q.lambda = lead.ex;
  q.mu = lead.ey;
  auto c_ok = [](const MonomialTerm& t) {
    return t.ex.is_zero() || t.ey.is_zero() || (t.ex.is_integer() && t.ey.is_integer());
  };
  if (!c_ok(lead)) return q;
  std::vector<MonomialTerm> bad;
  for (const auto& t : ts)
    if (!c_ok(t)) bad.push_back(t);
  if (bad.empty()) return q;
  auto worst = *std::min_element(bad.begin(), bad.end(), less);
  q.a = worst.ex;
  q.b = worst.ey;
  return q;
}

}  // namespace

TEST_CASE("parse_branch accepts the worked surface") {
  // z = x^3 + x^3 y^(1/2), divisor {x=0} u {z=0}
  QOBranch b = parse_branch(
      R"({"terms":[{"ex":"3","ey":"0","coeff":[1,0]},{"ex":"3","ey":"1/2","coeff":[1,0]}],"divisor":"xz","m_hint":2})");
  CHECK(b.m() == 2);
  CHECK(b.terms().size() == 2);
  CHECK(b.divisor().str() == "xz");
  CHECK(characteristic_quadruple(b) ==
        CharQuadruple{ExtRat(3), ExtRat(0), ExtRat(3), ExtRat(1, 2)});
}

TEST_CASE("parse_branch computes m and validates") {
  QOBranch b = parse_branch(R"({"terms":[{"ex":"3/2","ey":"1/2","coeff":"unit"}]})");
  CHECK(b.m() == 2);
  CHECK_THROWS_WITH_AS(
      parse_branch(R"({"terms":[{"ex":"1","ey":"0","coeff":[1,0]},{"ex":"1","ey":"0","coeff":[2,0]}]})"),
      doctest::Contains("DuplicateMonomial"), Error);
  CHECK_THROWS_WITH_AS(parse_branch(R"({"terms":[{"ex":"1","ey":"0","coeff":[0,0]}]})"),
                       doctest::Contains("ZeroCoefficient"), Error);
  CHECK_THROWS_WITH_AS(parse_branch(R"({"terms":[{"ex":"1/0","ey":"0","coeff":"unit"}]})"),
                       doctest::Contains("MalformedExponent"), Error);
  CHECK_THROWS_AS(parse_branch("{not json"), Error);
}

TEST_CASE("branch json round trip") {
  QOBranch b = mk({u(3, 2, 1, 2), {ExtRat(3), ExtRat(0), false, Complex(0.5, -1)}}, "xz");
  QOBranch c = parse_branch(branch_to_json(b));
  CHECK(c.m() == b.m());
  CHECK(c.divisor() == b.divisor());
  REQUIRE(c.terms().size() == b.terms().size());
  for (size_t i = 0; i < c.terms().size(); ++i) {
    CHECK(c.terms()[i].ex == b.terms()[i].ex);
    CHECK(c.terms()[i].ey == b.terms()[i].ey);
    CHECK(c.terms()[i].unit == b.terms()[i].unit);
  }
}

TEST_CASE("characteristic quadruple examples") {
  CHECK(characteristic_quadruple(mk({u(3, 2, 1, 2)})) ==
        CharQuadruple{ExtRat(3, 2), ExtRat(1, 2), ExtRat::infinity(), ExtRat::infinity()});
  CHECK(characteristic_quadruple(mk({u(3, 1, 0, 1), u(3, 1, 1, 2)})) ==
        CharQuadruple{ExtRat(3), ExtRat(0), ExtRat(3), ExtRat(1, 2)});
  CHECK(characteristic_quadruple(mk({})) == CharQuadruple{});
}

TEST_CASE("quadruple matches the definitional checker on random supports") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> num(0, 9), den(1, 4);
  std::uniform_int_distribution<int> nterms(1, 5);
  for (int i = 0; i < 400; ++i) {
    std::vector<MonomialTerm> ts;
    int n = nterms(rng);
    for (int j = 0; j < n; ++j) ts.push_back(u(num(rng), den(rng), num(rng), den(rng)));
    std::sort(ts.begin(), ts.end(), term_order_less);
    ts.erase(std::unique(ts.begin(), ts.end(),
                         [](const MonomialTerm& a, const MonomialTerm& b) {
                           return a.ex == b.ex && a.ey == b.ey;
                         }),
             ts.end());
    QOBranch b = mk(ts);
    CHECK(characteristic_quadruple(b) == brute_quadruple(b));
  }
}

TEST_CASE("tie-break independence on tie-free supports") {
  // On supports without total-degree ties both tie-break orders agree.
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long long> num(0, 9), den(1, 4);
  int checked = 0;
  while (checked < 200) {
    std::vector<MonomialTerm> ts;
    for (int j = 0; j < 3; ++j) ts.push_back(u(num(rng), den(rng), num(rng), den(rng)));
    bool tie = false;
    for (size_t a = 0; a < ts.size(); ++a)
      for (size_t b = a + 1; b < ts.size(); ++b) {
        if (ts[a].ex == ts[b].ex && ts[a].ey == ts[b].ey) tie = true;
        if (ts[a].ex + ts[a].ey == ts[b].ex + ts[b].ey) tie = true;
      }
    if (tie) continue;
    QOBranch b = mk(ts);
    CHECK(brute_quadruple(b, false) == brute_quadruple(b, true));
    CHECK(characteristic_quadruple(b) == brute_quadruple(b, true));
    ++checked;
  }
}

TEST_CASE("normal form examples") {
  CHECK(is_normal_form(mk({u(3, 2, 1, 2)})));   // lambda > mu
  CHECK(!is_normal_form(mk({u(1, 2, 3, 2)})));  // lambda < mu
  CHECK(is_normal_form(mk({})));                // zeta = 0
}

TEST_CASE("strong normal form examples") {
  CHECK(is_strong_normal_form(mk({u(3, 2, 1, 2)})));
  CHECK(!is_strong_normal_form(mk({u(2, 1, 0, 1), u(3, 2, 0, 1)})));  // x^2 integral
  // lambda = mu tie: (10) requires a >= b
  QOBranch tie = mk({u(1, 2, 1, 1), u(1, 1, 1, 2)});
  CharQuadruple q = characteristic_quadruple(tie);
  CHECK(q.lambda == ExtRat(1, 2));
  CHECK(q.mu == ExtRat(1));  // larger ey picked first on the tie
  CHECK(!is_normal_form(tie));
}

TEST_CASE("T1 swaps exponents and divisor and is an involution") {
  QOBranch b = mk({u(1, 2, 3, 2)}, "xz");
  QOBranch s = apply_t1(b);
  CHECK(characteristic_quadruple(s).lambda == ExtRat(3, 2));
  CHECK(characteristic_quadruple(s).mu == ExtRat(1, 2));
  CHECK(s.divisor().str() == "yz");
  QOBranch ss = apply_t1(s);
  CHECK(characteristic_quadruple(ss) == characteristic_quadruple(b));
  CHECK(ss.divisor() == b.divisor());
}

TEST_CASE("T4 strips integral monomials") {
  QOBranch b = mk({u(2, 1, 0, 1), u(3, 2, 0, 1)});
  QOBranch s = apply_t4(b);
  CHECK(s.terms().size() == 1);
  CHECK(characteristic_quadruple(s).lambda == ExtRat(3, 2));
  // translation blocked when {z=0} is a divisor component
  QOBranch bz = mk({u(2, 1, 0, 1), u(3, 2, 0, 1)}, "z");
  CHECK_THROWS_WITH_AS(apply_t4(bz), doctest::Contains("BadTranslation"), Error);
}

TEST_CASE("to_strong_normal_form strips then swaps, and is idempotent") {
  QOBranch b = mk({u(2, 1, 0, 1), u(3, 2, 0, 1)});
  QOBranch s = to_strong_normal_form(b);
  CHECK(characteristic_quadruple(s) ==
        CharQuadruple{ExtRat(3, 2), ExtRat(0), ExtRat::infinity(), ExtRat::infinity()});
  QOBranch sw = to_strong_normal_form(mk({u(1, 2, 3, 2)}));
  CHECK(characteristic_quadruple(sw).lambda == ExtRat(3, 2));
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long long> num(0, 6), den(1, 4);
  for (int i = 0; i < 200; ++i) {
    std::vector<MonomialTerm> ts = {u(num(rng), den(rng), num(rng), den(rng)),
                                    u(num(rng), den(rng), num(rng), den(rng))};
    if (ts[0].ex == ts[1].ex && ts[0].ey == ts[1].ey) continue;
    QOBranch b2 = mk(ts);
    QOBranch s1 = to_strong_normal_form(b2);
    QOBranch s2 = to_strong_normal_form(s1);
    CHECK(characteristic_quadruple(s1) == characteristic_quadruple(s2));
    CHECK(is_normal_form(s1));
  }
}

TEST_CASE("is_smooth examples") {
  CHECK(is_smooth(mk({})));
  CHECK(!is_smooth(mk({u(3, 2, 0, 1)})));
  CHECK(is_smooth(mk({u(1, 1, 1, 1)})));  // z = xy
}

TEST_CASE("(a,b) pairs always fail C while the leading satisfies it") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long long> num(0, 9), den(1, 6);
  for (int i = 0; i < 300; ++i) {
    std::vector<MonomialTerm> ts = {u(num(rng), den(rng), num(rng), den(rng)),
                                    u(num(rng), den(rng), num(rng), den(rng)),
                                    u(num(rng), den(rng), num(rng), den(rng))};
    std::sort(ts.begin(), ts.end(), term_order_less);
    ts.erase(std::unique(ts.begin(), ts.end(),
                         [](const MonomialTerm& a, const MonomialTerm& b) {
                           return a.ex == b.ex && a.ey == b.ey;
                         }),
             ts.end());
    QOBranch b = mk(ts);
    CharQuadruple q = characteristic_quadruple(b);
    if (!q.a.is_infinite()) {
      CHECK(satisfies_c(q.lambda, q.mu));
      CHECK(!satisfies_c(q.a, q.b));
    }
  }
}
