#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ttk/numberfield.hpp"

using namespace ttk;

namespace {

NumberField golden2() { return NumberField::create({1, -3, 1}, Q(5, 2), Q(3)); }

// Root of a low-to-high integer polynomial by plain bisection in long double.
long double bisect_root(const std::vector<long>& p, long double lo, long double hi) {
  auto f = [&](long double x) {
    long double v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
  };
  bool neg_lo = f(lo) < 0;
  for (int i = 0; i < 200; ++i) {
    long double mid = (lo + hi) / 2;
    if ((f(mid) < 0) == neg_lo) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

long double value_at(const NFElement& a, long double x) {
  long double v = 0;
  const auto& c = a.coeffs();
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i].get_d();
  return v;
}

}  // namespace

TEST_CASE("field_create examples") {
  auto f = golden2();
  CHECK(f.degree() == 2);
  CHECK(std::abs(f.approx() - (3 + std::sqrt(5.0)) / 2) < 1e-12);

  auto r = NumberField::create({-1, 1}, Q(1, 2), Q(3, 2));
  CHECK(r.degree() == 1);
  CHECK(r.gen() == r.one());

  auto s = NumberField::create({-2, 0, 1}, Q(-2), Q(-1));
  CHECK(std::abs(s.approx() + std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("field_create errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("none");
  };
  CHECK(code_of([] { NumberField::create({1, -3, 2}, Q(0), Q(5)); }) == "NonMonic");
  CHECK(code_of([] { NumberField::create({1, -3, 1}, Q(0), Q(5)); }) == "NotIsolating");
  CHECK(code_of([] { NumberField::create({1, -3, 1}, Q(3), Q(4)); }) == "NotIsolating");
}

TEST_CASE("arithmetic examples") {
  auto f = golden2();
  auto l = f.gen();
  CHECK((l * l).coeffs() == std::vector<Q>{-1, 3});
  auto a = f.element({Q(7, 3), Q(-2)});
  CHECK(a + f.zero() == a);
  CHECK(f.one() / l == f.element({3, -1}));
  CHECK(l * (f.one() / l) == f.one());
  CHECK((a - a).is_zero());
  CHECK_THROWS_WITH_AS(a / f.zero(), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("sign examples") {
  auto f = golden2();
  CHECK(f.element({-2, 1}).sign() == 1);
  CHECK(f.element({0, 0}).sign() == 0);
  CHECK(f.element({-3, 1}).sign() == -1);
  // 377λ − 987 is about 1e-3 from zero
  CHECK(f.element({-987, 377}).sign() == -1);
  CHECK(f.element({-988, 377}).sign() == -1);
  CHECK(f.element({-986, 377}).sign() == 1);
}

TEST_CASE("sign matches a floating oracle and is multiplicative") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-40, 40);
  const std::vector<std::vector<long>> polys = {{1, -3, 1}, {-1, -1, 0, 1}, {1, -3, 1, -3, 1}, {-2, 0, 1}};
  const std::vector<std::pair<Q, Q>> iv = {{Q(5, 2), Q(3)}, {Q(1), Q(2)}, {Q(2), Q(4)}, {Q(1), Q(2)}};
  for (size_t k = 0; k < polys.size(); ++k) {
    std::vector<Z> mp;
    for (long c : polys[k]) mp.push_back(c);
    auto f = NumberField::create(mp, iv[k].first, iv[k].second);
    long double lam = bisect_root(polys[k], iv[k].first.get_d(), iv[k].second.get_d());
    int deg = f.degree();
    for (int it = 0; it < 100; ++it) {
      std::vector<Q> ca(deg), cb(deg);
      for (auto& x : ca) x = Q(d(rng), 1 + (d(rng) & 7));
      for (auto& x : cb) x = Q(d(rng), 1 + (d(rng) & 7));
      auto a = f.element(ca), b = f.element(cb);
      long double va = value_at(a, lam);
      if (std::fabs(va) > 1e-9) CHECK(a.sign() == (va > 0 ? 1 : -1));
      CHECK((a * b).sign() == a.sign() * b.sign());
      if (!a.is_zero()) {
        CHECK(a.sign() * (f.one() / a).sign() == 1);
        CHECK((a / a) == f.one());
      }
      CHECK(compare(a, b) == (a - b).sign());
    }
  }
}

TEST_CASE("pf_eigendata examples") {
  IntMatrix m(2, 2);
  m(0, 0) = 2, m(0, 1) = 1, m(1, 0) = 1, m(1, 1) = 1;
  auto pf = pf_eigendata(m);
  CHECK(pf.field.int_minpoly() == std::vector<Z>{1, -3, 1});
  CHECK(pf.field.approx() > 2.5);
  CHECK(pf.vec[0] == pf.field.one());
  CHECK(pf.vec[1] == pf.lambda - pf.field.from_rational(2));

  IntMatrix one(1, 1);
  one(0, 0) = 1;
  auto p1 = pf_eigendata(one);
  CHECK(p1.lambda == p1.field.one());
  CHECK(p1.vec.size() == 1);

  IntMatrix fib(2, 2);
  fib(0, 1) = 1, fib(1, 0) = 1, fib(1, 1) = 1;
  auto pg = pf_eigendata(fib);
  CHECK(pg.field.int_minpoly() == std::vector<Z>{-1, -1, 1});
  CHECK(pg.vec[1] == pg.lambda);

  IntMatrix perm(2, 2);
  perm(0, 1) = 1, perm(1, 0) = 1;
  CHECK_THROWS_WITH_AS(pf_eigendata(perm), doctest::Contains("NotPerronFrobenius"), Error);
}

TEST_CASE("pf_eigendata satisfies M v = lambda v on random primitive matrices") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(0, 3);
  int tested = 0;
  for (int it = 0; it < 200 && tested < 40; ++it) {
    int n = 2 + it % 4;
    IntMatrix m(n, n);
    for (auto& x : m.a) x = e(rng) == 0 ? 1 : 0;
    for (int i = 0; i < n; ++i) m(i, (i + 1) % n) = 1;
    m(0, 0) += 1;
    auto pf = pf_eigendata(m);
    ++tested;
    for (int i = 0; i < n; ++i) {
      NFElement s = pf.field.zero();
      for (int j = 0; j < n; ++j) s = s + pf.field.from_rational(Q(m(i, j))) * pf.vec[j];
      CHECK(s == pf.lambda * pf.vec[i]);
      CHECK(pf.vec[i].sign() == 1);
    }
    CHECK((pf.lambda - pf.field.one()).sign() >= 0);
  }
  CHECK(tested == 40);
}

TEST_CASE("declaration round trip") {
  auto f = golden2();
  auto g = NumberField::parse_declaration(f.declaration());
  CHECK(g.same(f));
  auto x = NFElement::parse(f, "(1/2, -3)");
  CHECK(x == f.element({Q(1, 2), -3}));
  CHECK(NFElement::parse(f, x.str()) == x);
}
