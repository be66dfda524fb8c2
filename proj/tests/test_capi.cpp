#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ttk.h"

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TTK_FIXTURES) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string take(char* s) {
  std::string r = s ? s : "";
  ttk_string_free(s);
  return r;
}

ttk_track* parse_ok(const std::string& name) {
  ttk_track* t = nullptr;
  REQUIRE(ttk_track_parse(fixture(name).c_str(), &t) == TTK_OK);
  REQUIRE(t != nullptr);
  return t;
}

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::string(ttk_version()) == "0.1.0");
  ttk_track* t = nullptr;
  CHECK(ttk_track_parse(fixture("malformed.track").c_str(), &t) == TTK_ERR_INPUT);
  CHECK(t == nullptr);
  CHECK(std::string(ttk_last_error_code()) == "ParseError");
  CHECK(std::string(ttk_last_error()).find("ParseError") != std::string::npos);
  CHECK(ttk_track_parse(nullptr, &t) == TTK_ERR_INPUT);
}

TEST_CASE("error state is per thread") {
  ttk_track* t = nullptr;
  REQUIRE(ttk_track_parse(fixture("malformed.track").c_str(), &t) == TTK_ERR_INPUT);
  std::string other;
  std::thread th([&] { other = ttk_last_error_code(); });
  th.join();
  CHECK(other.empty());
  CHECK(std::string(ttk_last_error_code()) == "ParseError");
}

TEST_CASE("track round trip, validation and splits") {
  ttk_track* t = parse_ok("torus.track");
  char* text = nullptr;
  REQUIRE(ttk_track_write(t, &text) == TTK_OK);
  std::string w = take(text);
  ttk_track* t2 = nullptr;
  REQUIRE(ttk_track_parse(w.c_str(), &t2) == TTK_OK);
  char* text2 = nullptr;
  REQUIRE(ttk_track_write(t2, &text2) == TTK_OK);
  CHECK(take(text2) == w);

  int ok = 0;
  char* rep = nullptr;
  REQUIRE(ttk_track_validate(t, &ok, &rep) == TTK_OK);
  CHECK(ok == 1);
  CHECK_FALSE(take(rep).empty());

  ttk_track* s = nullptr;
  char* ev = nullptr;
  REQUIRE(ttk_track_split(t, "z", &s, &ev) == TTK_OK);
  std::string e = take(ev);
  CHECK(e.rfind("z:", 0) == 0);
  ttk_track_free(s);
  CHECK(ttk_track_split(t, "nope", &s, &ev) == TTK_ERR_INPUT);
  CHECK(ttk_track_split(t, "x", &s, &ev) == TTK_ERR_DOMAIN);
  CHECK(std::string(ttk_last_error_code()) == "NotLargeBranch");

  char* evs = nullptr;
  REQUIRE(ttk_track_maximal_split(t, &s, &evs) == TTK_OK);
  CHECK_FALSE(take(evs).empty());
  ttk_track_free(s);

  ttk_track* bare = parse_ok("torus_nomeasure.track");
  CHECK(ttk_track_split(bare, "z", &s, &ev) == TTK_ERR_INPUT);
  ttk_track* nf = parse_ok("nonfilling.track");
  REQUIRE(ttk_track_validate(nf, &ok, &rep) == TTK_OK);
  CHECK(ok == 0);
  ttk_string_free(rep);
  ttk_track_free(nf);
  ttk_track_free(bare);
  ttk_track_free(t2);
  ttk_track_free(t);
  ttk_track_free(nullptr);
}

TEST_CASE("cycles, bounds and factorization") {
  ttk_track* t = parse_ok("torus.track");
  ttk_cycle* c = nullptr;
  REQUIRE(ttk_cycle_find(t, 100, &c) == TTK_OK);
  int n = -1, m = -1;
  REQUIRE(ttk_cycle_shape(c, &n, &m) == TTK_OK);
  CHECK(n >= 0);
  CHECK(m >= 1);
  char* text = nullptr;
  REQUIRE(ttk_cycle_write(c, &text) == TTK_OK);
  std::string ct = take(text);
  CHECK(ct == fixture("torus.cycle"));
  ttk_cycle* c2 = nullptr;
  REQUIRE(ttk_cycle_parse(ct.c_str(), &c2) == TTK_OK);

  char* rep = nullptr;
  REQUIRE(ttk_cycle_bounds(c2, 0, &rep) == TTK_OK);
  std::string r = take(rep);
  CHECK(r.find("dd_bound") != std::string::npos);
  REQUIRE(ttk_cycle_bounds(c2, 1, &rep) == TTK_OK);
  std::string js = take(rep);
  CHECK(js.front() == '{');

  char *seq = nullptr, *h1 = nullptr;
  REQUIRE(ttk_cycle_factorize(c2, nullptr, &seq, &h1) == TTK_OK);
  CHECK(take(seq).find("closing") != std::string::npos);
  std::string h = take(h1);
  CHECK(h.find("trace 3") != std::string::npos);
  CHECK(h.find("det 1") != std::string::npos);
  CHECK(ttk_cycle_factorize(c2, "sigma u v\n", &seq, &h1) == TTK_ERR_DOMAIN);
  CHECK(std::string(ttk_last_error_code()) == "InvalidMark");
  CHECK(ttk_cycle_factorize(c2, "sigma w\n", &seq, &h1) == TTK_ERR_INPUT);

  ttk_cycle* bad = nullptr;
  CHECK(ttk_cycle_parse(fixture("corrupt.cycle").c_str(), &bad) == TTK_ERR_INPUT);
  CHECK(ttk_cycle_find(t, 0, &bad) == TTK_ERR_DOMAIN);
  CHECK(std::string(ttk_last_error_code()) == "NoCycleWithinBudget");
  ttk_track* bare = parse_ok("torus_nomeasure.track");
  CHECK(ttk_cycle_find(bare, 100, &bad) == TTK_ERR_INPUT);
  ttk_track_free(bare);
  ttk_cycle_free(c2);
  ttk_cycle_free(c);
  ttk_cycle_free(nullptr);
  ttk_track_free(t);
}

TEST_CASE("heegaard") {
  ttk_track* t = parse_ok("genus2_hexagon.track");
  char* out = nullptr;
  REQUIRE(ttk_heegaard(t, fixture("genus2_m2.basis").c_str(), nullptr, nullptr, 0, &out) == TTK_OK);
  std::string o = take(out);
  CHECK(o.find("generators 2663652") != std::string::npos);
  CHECK(o.find("bound pass") != std::string::npos);
  CHECK(ttk_heegaard(t, "curve b0=1 b1=1 b2=1 b4=1\ncurve b0=1 b1=1 b2=1 b4=1\n", nullptr, nullptr, 0, &out) ==
        TTK_ERR_DOMAIN);
  CHECK(std::string(ttk_last_error_code()) == "ParallelCurves");
  CHECK(ttk_heegaard(t, "curve b0=x\n", nullptr, nullptr, 0, &out) == TTK_ERR_INPUT);
  ttk_track* torus = parse_ok("torus.track");
  CHECK(ttk_heegaard(torus, "curve x=1 y=1 z=2\n", nullptr, nullptr, 0, &out) == TTK_ERR_DOMAIN);
  CHECK(std::string(ttk_last_error_code()) == "PuncturedSurface");
  ttk_track_free(torus);
  ttk_track_free(t);
}

TEST_CASE("complex support") {
  ttk_complex* c = nullptr;
  REQUIRE(ttk_complex_parse(fixture("s2s1.cx").c_str(), &c) == TTK_OK);
  int dim = -1;
  char* rep = nullptr;
  REQUIRE(ttk_complex_support(c, 6, TTK_SUPPORT_BOTH, &dim, &rep) == TTK_OK);
  CHECK(dim == 0);
  CHECK_FALSE(take(rep).empty());
  REQUIRE(ttk_complex_support(c, 6, TTK_SUPPORT_TANGENT, &dim, &rep) == TTK_OK);
  ttk_string_free(rep);
  CHECK(dim == 0);
  ttk_complex_free(c);
  ttk_complex* z = nullptr;
  REQUIRE(ttk_complex_parse(fixture("zero_rank2.cx").c_str(), &z) == TTK_OK);
  REQUIRE(ttk_complex_support(z, 6, TTK_SUPPORT_POINTS, &dim, &rep) == TTK_OK);
  ttk_string_free(rep);
  CHECK(dim == 2);
  ttk_complex_free(z);
  ttk_complex* bad = nullptr;
  CHECK(ttk_complex_parse(fixture("not_differential.cx").c_str(), &bad) == TTK_ERR_INPUT);
  CHECK(std::string(ttk_last_error_code()) == "NotADifferential");
  CHECK(ttk_complex_parse("ring vars = x\nrank 2\nd[0][1] = 1 +\n", &bad) == TTK_ERR_INPUT);
  ttk_complex_free(nullptr);
}
