#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "ttk/bounds.hpp"
#include "util.hpp"

using namespace ttk;
using testutil::track;

namespace {

std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

IntMatrix mat(int n, std::initializer_list<long> v) {
  IntMatrix m(n, n);
  size_t i = 0;
  for (long x : v) m.a[i++] = x;
  return m;
}

Z ipow(Z b, int e) {
  Z r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Z max_row_sum(const IntMatrix& m) {
  Z best = 0;
  for (int i = 0; i < m.rows; ++i) {
    Z s = 0;
    for (int j = 0; j < m.cols; ++j) s += m(i, j);
    if (s > best) best = s;
  }
  return best;
}

NormalCurve curve(std::initializer_list<long> v) {
  NormalCurve g;
  for (long x : v) g.coords.push_back(x);
  return g;
}

}  // namespace

TEST_CASE("r_of_psi and power_positive_K") {
  CHECK(r_of_psi(mat(2, {2, 1, 1, 1})) == 3);
  CHECK(r_of_psi(IntMatrix::identity(3)) == 1);
  CHECK(r_of_psi(mat(2, {0, 5, 0, 0})) == 5);
  CHECK(power_positive_K(mat(2, {2, 1, 1, 1})) == 1);
  CHECK(power_positive_K(mat(2, {0, 1, 1, 1})) == 2);
  CHECK(code_of([] { power_positive_K(mat(2, {0, 1, 1, 0})); }) == "NotPrimitive");
}

TEST_CASE("power_positive_K respects the Wielandt bound on random primitive matrices") {
  std::mt19937 rng(9);
  for (int it = 0; it < 100; ++it) {
    int n = 2 + it % 5;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, (i + 1) % n) = 1;
    m(n - 1, 1 % n) += 1;
    if (it % 3 == 0) m(rng() % n, rng() % n) += 1;
    int K = power_positive_K(m);
    CHECK(K <= (n - 1) * (n - 1) + 1);
    CHECK(strictly_positive(matrix_power(m, K)));
    if (K > 1) CHECK_FALSE(strictly_positive(matrix_power(m, K - 1)));
  }
}

TEST_CASE("m_of_psi examples and oracle") {
  CHECK(m_of_psi(1, 1, 1) == 33);
  CHECK(m_of_psi(1, 3, 1) == 1057);
  CHECK(m_of_psi(2, 3, 0) == 0);
  auto F = [](const Z& r, const Z& x) -> Z { return (r + 1) * x + r * x * x * x; };
  for (int g = 0; g <= 2; ++g)
    for (int r = 1; r <= 4; ++r)
      for (int c = 0; c <= 5; ++c) {
        Z x = c;
        for (int i = 0; i < 2 * g; ++i) x = F(r, x);
        CHECK(m_of_psi(g, r, c) == x);
        CHECK(m_of_psi(g, r + 1, c) >= m_of_psi(g, r, c));
        CHECK(m_of_psi(g, r, c + 1) >= m_of_psi(g, r, c));
        CHECK(m_of_psi(g + 1, r, c) >= m_of_psi(g, r, c));
      }
}

TEST_CASE("dd_bound examples") {
  CHECK(dd_bound(1, 1, 1) == 2288);
  CHECK(dd_bound(2, 4, 10) == ipow(102, 4) * (ipow(20, 4) + ipow(28, 10)));
  for (int g = 0; g <= 2; ++g)
    for (int s = 1; s <= 4; ++s) {
      CHECK(dd_bound(g, s, 0) == ipow(20 * (g + s) - 18, s) * (ipow(0, 2 * g) + ipow(8, 2 * (g + s - 1))));
      for (int M = 0; M < 5; ++M) {
        if (g + s > 1) CHECK(dd_bound(g, s, M + 1) > dd_bound(g, s, M));
        else CHECK(dd_bound(g, s, M + 1) == dd_bound(g, s, M));
      }
    }
}

TEST_CASE("curve length and normal coordinates") {
  CHECK(curve_length(curve({2, 3, 2})) == 7);
  CHECK(curve_length(curve({0, 0, 0})) == 0);
  auto t = track("torus.track");
  auto d = dual_triangulation(t.track);
  check_normal(d, curve({1, 1, 2}));
  CHECK(code_of([&] { check_normal(d, curve({1, 1, 3})); }) == "IncompatibleCoordinates");
  CHECK(code_of([&] { check_normal(d, curve({1, 1, 1})); }) == "IncompatibleCoordinates");
}

TEST_CASE("push_curve") {
  auto p = push_curve(mat(2, {2, 1, 1, 1}), curve({1, 1}));
  CHECK(p.v == std::vector<Z>{3, 2});
  CHECK(p.len_bound == 5);
  CHECK(p.len_bound <= 3 * 2);
  auto id = push_curve(IntMatrix::identity(3), curve({2, 3, 1}));
  CHECK(id.v == std::vector<Z>{2, 3, 1});
  CHECK(id.len_bound == 6);
  auto z = push_curve(mat(2, {2, 1, 1, 1}), curve({0, 0}));
  CHECK(z.v == std::vector<Z>{0, 0});
  CHECK(z.len_bound == 0);
  CHECK(z.int_bound == 0);
}

TEST_CASE("push_curve growth bounds on random inputs") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> e(0, 4), c(0, 9);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + it % 6;
    IntMatrix m(n, n);
    for (auto& x : m.a) x = e(rng);
    NormalCurve g;
    for (int i = 0; i < n; ++i) g.coords.push_back(c(rng));
    auto p = push_curve(m, g);
    Z r = r_of_psi(m), len = curve_length(g);
    CHECK(p.len_bound <= r * len);
    CHECK(p.int_bound <= r * len * len);
  }
}

TEST_CASE("cycle bounds on fixtures") {
  for (const char* name : testutil::kTrackFixtures) {
    CAPTURE(name);
    auto p = track(name);
    auto c = find_agol_cycle(p.track, *p.measure, 200);
    auto b = compute_bounds(c);
    int K = power_positive_K(c.cycle_matrix);
    CHECK(b.K == K);
    CHECK(b.r == r_of_psi(c.cycle_matrix));
    CHECK(b.c_prime == c_prime(c.start));
    CHECK(b.M_psi == m_of_psi(b.g, b.r, b.c + b.c_prime));
    CHECK(b.dd_bound == dd_bound(b.g, b.s, b.M_psi));
    CHECK(b.c >= 2 * max_row_sum(matrix_power(c.cycle_matrix, K)) + 1);
    auto q = parse_bound_report(b.str());
    CHECK(q.str() == b.str());
    auto exts = diagonal_extensions(c.start);
    for (const auto& ext : exts) {
      auto ei = extension_incidence(c, ext, K);
      int l = c.start.num_branches();
      CHECK(ei.N.rows == l + int(ext.diags.size()));
      IntMatrix MK = matrix_power(c.cycle_matrix, K);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) CHECK(ei.N(i, j) == MK(i, j));
      for (int i = l; i < ei.N.rows; ++i) {
        Z rs = 0;
        for (int j = 0; j < ei.N.cols; ++j) rs += ei.N(i, j);
        CHECK(rs >= 1);
      }
    }
    if (exts.size() == 1 && exts[0].diags.empty()) {
      CHECK(b.c == 2 * max_row_sum(matrix_power(c.cycle_matrix, K)) + 1);
      CHECK(b.c_prime == 0);
    }
  }
}

TEST_CASE("torus bounds") {
  auto p = track("torus.track");
  auto c = find_agol_cycle(p.track, *p.measure, 100);
  auto b = compute_bounds(c);
  CHECK(b.g == 1);
  CHECK(b.r == 3);
  CHECK(b.c_prime == 0);
  CHECK(b.M_psi > 0);
  CHECK(b.dd_bound > b.M_psi);
}

TEST_CASE("extension errors and diagonals") {
  auto p = track("genus2_hexagon.track");
  auto c = find_agol_cycle(p.track, *p.measure, 200);
  DiagonalExtension partial;
  partial.diags.push_back(diagonal_extensions(c.start)[0].diags[0]);
  CHECK(code_of([&] { extension_incidence(c, partial, 1); }) == "NotAnExtension");
  int best = 0;
  auto rd = regions(c.start);
  for (int r = 0; r < int(rd.regions.size()); ++r) {
    int k = rd.regions[r].cusp_count();
    for (int i = 0; i < k; ++i)
      for (int j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        int len = diagonal_length(c.start, Diagonal{r, i, j});
        CHECK(len >= 1);
        best = std::max(best, len);
      }
  }
  CHECK(c_prime(c.start) == best);
}

TEST_CASE("bound report parsing") {
  auto p = track("torus.track");
  auto b = compute_bounds(find_agol_cycle(p.track, *p.measure, 100));
  std::string text = b.str();
  auto bad = text;
  auto pos = bad.find("dd_bound");
  bad.replace(pos, std::string::npos, "dd_bound  7\n");
  CHECK(code_of([&] { parse_bound_report(bad); }) != "none");
  CHECK(code_of([] { parse_bound_report("g 1\n"); }) != "none");
}
