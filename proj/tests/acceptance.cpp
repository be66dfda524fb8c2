// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "ttk/heegaard.hpp"
#include "ttk/support.hpp"
#include "util.hpp"

using namespace ttk;
using testutil::carried;
using testutil::fixture;
using testutil::switch_ok;
using testutil::track;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<int> branches_if(const TrainTrack& t, bool (TrainTrack::*pred)(int) const) {
  std::vector<int> r;
  for (int b = 0; b < t.num_branches(); ++b)
    if ((t.*pred)(b)) r.push_back(b);
  return r;
}

bool same_measured(const TrainTrack& a, const Measure& ma, const TrainTrack& b, const Measure& mb) {
  auto ca = canonical_form(a), cb = canonical_form(b);
  if (ca.code != cb.code) return false;
  const auto& La = ca.labelings[0];
  for (const auto& Lb : cb.labelings) {
    bool ok = true;
    for (int i = 0; i < a.num_branches() && ok; ++i)
      for (int j = 0; j < b.num_branches() && ok; ++j)
        if (La.br[i] == Lb.br[j] && ma.w[i] != mb.w[j]) ok = false;
    if (ok) return true;
  }
  return false;
}

bool tolerated(const Error& e) { return e.code() == "ClosedLoop" || e.code() == "PunctureLost"; }

void criterion1(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto p = track("torus.track");
  auto c = find_agol_cycle(p.track, *p.measure, 200);
  double secs = seconds_since(t0);
  o.require(c.lambda_field.int_minpoly() == std::vector<Z>{1, -3, 1}, "lambda minimal polynomial");
  const auto& F = c.lambda.field();
  auto inv = F.one() / c.lambda;
  for (int b = 0; b < c.end.num_branches(); ++b)
    o.require(c.end_measure.w[b] == inv * c.start_measure.w[c.iso_br[b]], "end measure = start measure / lambda");
  int n = c.cycle_matrix.rows;
  for (int i = 0; i < n; ++i) {
    NFElement s = F.zero();
    for (int j = 0; j < n; ++j) s = s + F.from_rational(Q(c.cycle_matrix(i, j))) * c.start_measure.w[j];
    o.require(s == c.lambda * c.start_measure.w[i], "M v = lambda v");
  }
  o.require(carried(c.period_matrix, c.start_measure, c.end_measure), "period matrix carries the measures");
  std::string cmd = std::string("\"") + TTK_CLI + "\" --fixtures-dir \"" + TTK_FIXTURES + "\" cycle torus.track >/dev/null 2>&1";
  auto t1 = std::chrono::steady_clock::now();
  o.require(std::system(cmd.c_str()) == 0, "cycle command exit status");
  double cli = seconds_since(t1);
  o.require(secs < 5 && cli < 5, "runtime under 5 s");
  o.detail << "n=" << c.n << " m=" << c.m << " lambda=" << c.lambda.approx() << " library " << secs << " s, command " << cli
           << " s";
}

void criterion2(Outcome& o) {
  for (const char* name : testutil::kTrackFixtures) {
    auto p = track(name);
    o.require(p.track.genus <= 2, "genus at most 2");
    auto c = find_agol_cycle(p.track, *p.measure, 200);
    int n = c.cycle_matrix.rows;
    int K = power_positive_K(c.cycle_matrix);
    o.require(K <= (n - 1) * (n - 1) + 1, std::string(name) + " K within the Wielandt bound");
    o.require(strictly_positive(matrix_power(c.cycle_matrix, K)), std::string(name) + " M^K positive");
    o.detail << name << ": dim " << n << " K " << K << "; ";
  }
}

void criterion3(Outcome& o) {
  IntMatrix m(2, 2);
  m(0, 0) = 2, m(0, 1) = 1, m(1, 0) = 1, m(1, 1) = 1;
  o.require(r_of_psi(m) == 3, "r_of_psi [[2,1],[1,1]] = 3");
  o.require(m_of_psi(1, 3, 1) == 1057, "M(psi) g=1 r=3 c=1 is 1057");
  o.require(m_of_psi(1, 1, 1) == 33, "M(psi) g=1 r=1 c=1 is 33");
  o.require(dd_bound(1, 1, 1) == 2288, "dd_bound g=1 s=1 M=1 is 2288");
  Z big = 1;
  for (int i = 0; i < 4; ++i) big *= 102;
  Z a = 1, b = 1;
  for (int i = 0; i < 4; ++i) a *= 20;
  for (int i = 0; i < 10; ++i) b *= 28;
  o.require(dd_bound(2, 4, 10) == big * (a + b), "dd_bound g=2 s=4 M=10");
  o.detail << "M(psi)=" << m_of_psi(1, 3, 1) << " dd_bound=" << dd_bound(1, 1, 1);
}

void criterion4(Outcome& o) {
  std::mt19937 rng(1234);
  int pairs = 0, splits = 0, folds = 0, shifts = 0, maxes = 0, composed = 0;
  for (int it = 0; it < 200000 && pairs < 1000; ++it) {
    auto t = testutil::random_track(rng, 2 * (1 + it % 3) + 2);
    if (!t) continue;
    auto m = testutil::random_measure(rng, *t);
    if (!m) continue;
    ++pairs;
    o.require(switch_ok(*t, *m), "input switch conditions");
    for (int b : branches_if(*t, &TrainTrack::is_large_branch)) {
      MoveResult r;
      try {
        r = split(*t, *m, b);
      } catch (const Error& e) {
        o.require(tolerated(e), e.what());
        continue;
      }
      ++splits;
      o.require(switch_ok(r.track, *r.measure), "split keeps switch conditions");
      o.require(carried(r.elem, *m, *r.measure), "split incidence");
      if (r.event.kase != SplitCase::Central) {
        auto f = fold(r.track, *r.measure, SplitEvent{r.branch_map[b], r.event.kase});
        o.require(same_measured(f.track, f.measure, *t, *m), "fold after split is the identity");
        ++folds;
      }
    }
    for (int b : branches_if(*t, &TrainTrack::is_mixed_branch)) {
      if (t->locate()[b][0].sw == t->locate()[b][1].sw) continue;
      auto r = shift(*t, *m, b);
      ++shifts;
      o.require(switch_ok(r.track, *r.measure), "shift keeps switch conditions");
      o.require(carried(r.elem, *m, *r.measure), "shift incidence");
    }
    MaximalSplit ms;
    try {
      ms = maximal_split(*t, *m);
    } catch (const Error& e) {
      o.require(tolerated(e), e.what());
      continue;
    }
    ++maxes;
    o.require(switch_ok(ms.track, ms.measure), "maximal split keeps switch conditions");
    o.require(carried(ms.elem, *m, ms.measure), "maximal split incidence");
    if (ms.track.num_branches() != t->num_branches() || branches_if(ms.track, &TrainTrack::is_large_branch).empty())
      continue;
    try {
      auto ms2 = maximal_split(ms.track, ms.measure);
      auto comp = incidence_compose(CarryingMatrix{ms.elem, 1, 0}, CarryingMatrix{ms2.elem, 2, 1});
      o.require(comp.m == ms.elem * ms2.elem, "composition is the matrix product");
      o.require(carried(comp.m, *m, ms2.measure), "composed incidence carries");
      ++composed;
    } catch (const Error& e) {
      o.require(tolerated(e), e.what());
    }
  }
  o.require(pairs == 1000, "1000 random pairs");
  o.detail << pairs << " pairs, " << splits << " splits, " << folds << " folds, " << shifts << " shifts, " << maxes
           << " maximal splits, " << composed << " compositions";
}

void criterion5(Outcome& o) {
  int checked = 0, central = 0;
  for (const char* name : testutil::kTrackFixtures) {
    auto p = track(name);
    auto c = find_agol_cycle(p.track, *p.measure, 200);
    TrainTrack tr = c.input;
    for (int k = 0; k < c.n + c.m; ++k)
      for (const auto& ev : c.events[k]) {
        auto next = split_combinatorial(tr, ev.branch, ev.kase).track;
        if (ev.kase == SplitCase::Central) {
          ++central;
        } else {
          o.require(isomorphic(dual_triangulation(next), whitehead_flip(dual_triangulation(tr), ev.branch)),
                    std::string(name) + " split is a Whitehead move");
          ++checked;
        }
        tr = next;
      }
  }
  o.require(checked > 0, "some splits checked");
  o.detail << checked << " splits checked, " << central << " central splits (no Whitehead counterpart)";
}

void criterion6(Outcome& o) {
  for (const char* name : testutil::kTrackFixtures) {
    auto p = track(name);
    auto c = find_agol_cycle(p.track, *p.measure, 200);
    auto rd = regions(c.start);
    for (int w = 0; w < c.start.num_switches(); ++w) {
      auto m = default_mark(c.start);
      m.star[rd.cusp_region[w][0]] = w;
      auto seq = factorize(c, m);
      o.require(seq.start.structurally_equal(special_arc_diagram(c.start, m)), std::string(name) + " start diagram");
      auto h = h1_action(seq);
      Z det = determinant(h.capped);
      o.require(det == 1 || det == -1, std::string(name) + " capped action invertible");
      if (std::string(name) == "torus.track")
        o.require(trace(h.capped) == 3 && det == 1, "torus trace 3 and determinant 1");
      auto m0 = pull_back_mark(c, m);
      auto there = boundary_adjustment(m, m0, c.start);
      auto back = boundary_adjustment(there.end, m0, m, c.start);
      ArcslideSequence loop;
      loop.start = there.start;
      loop.slides = there.slides;
      loop.slides.insert(loop.slides.end(), back.slides.begin(), back.slides.end());
      loop.end = back.end;
      loop.closing = back.closing;
      o.require(h1_action(loop).capped == IntMatrix::identity(2 * c.start.genus), "boundary adjustment loop is the identity");
    }
  }
  auto p = track("torus.track");
  auto h = h1_action(factorize(find_agol_cycle(p.track, *p.measure, 200), default_mark(p.track)));
  o.detail << "torus capped trace " << trace(h.capped) << " det " << determinant(h.capped);
}

void criterion7(Outcome& o) {
  auto p = track("genus2_hexagon.track");
  auto c = find_agol_cycle(p.track, *p.measure, 200);
  auto br = compute_bounds(c);
  for (const char* b : {"genus2_m1.basis", "genus2_m2.basis"}) {
    auto t0 = std::chrono::steady_clock::now();
    auto d = build_diagram(p.track, parse_basis(fixture(b), p.track));
    o.require(d.alpha_arcs == 2 * (d.g + d.s - 1), std::string(b) + " alpha arcs");
    o.require(d.beta_a1 + d.beta_a2 == 2 * (d.g + d.s - d.m - 1), std::string(b) + " beta arcs");
    auto gs = count_generators(d, false);
    Z brute = brute_force_generators(d);
    o.require(brute == gs.count, std::string(b) + " brute force oracle");
    auto tc = attach_tube_cutting(d, gs);
    if (Z(d.length) <= br.M_psi) o.require(tc.count <= dd_bound(d.g, d.s, br.M_psi), std::string(b) + " below dd_bound");
    double secs = seconds_since(t0);
    o.require(secs < 60, std::string(b) + " runtime");
    o.detail << b << ": m=" << d.m << " generators " << gs.count << " (candidates " << gs.candidates << ") tube-cut "
             << tc.count << " length " << d.length << ", " << secs << " s; ";
  }
  // every small single curve gives a built diagram with the right counts
  int built = 0;
  for (int mask = 1; mask < 19683; ++mask) {
    NormalCurve g;
    int x = mask;
    for (int i = 0; i < 9; ++i, x /= 3) g.coords.push_back(x % 3);
    BorderedSuturedDiagram d;
    try {
      d = build_diagram(p.track, {g});
    } catch (const Error&) {
      continue;
    }
    ++built;
    o.require(d.alpha_arcs == 2 * (d.g + d.s - 1) && d.beta_a1 + d.beta_a2 == 2 * (d.g + d.s - d.m - 1),
              "arc counts on a single-curve diagram");
    auto gs = count_generators(d, false);
    auto tc = attach_tube_cutting(d, gs);
    if (Z(d.length) <= br.M_psi) o.require(tc.count <= dd_bound(d.g, d.s, br.M_psi), "single-curve diagram below dd_bound");
  }
  o.detail << built << " single-curve diagrams checked";
}

void criterion8(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto s = parse_complex(fixture("s2s1.cx"));
  auto r = support(s, 5, SupportMethod::Both);
  o.require(r.dim_tangent == 0 && r.dim_points == 0, "S2xS1 model has dimension 0 by both methods");
  std::string text = write_complex(s);
  TwistedComplex pw = s;
  const char names[] = {'x', 'y', 'z'};
  for (int k = 1; k <= 3; ++k) {
    if (k > 1) {
      std::string t = text;
      for (auto& ch : t)
        if (ch == 'x') ch = names[k - 1];
      pw = tensor_complex(pw, parse_complex(t));
    }
    auto rk = support(pw, 5, SupportMethod::Both);
    o.require(rk.dim == 0 && rk.dim_points == 0, std::to_string(k) + "-fold tensor power has dimension 0");
  }
  auto z1 = support(parse_complex(fixture("zero_rank1.cx")), 5, SupportMethod::Both);
  o.require(z1.dim == 2, "zero rank-1 complex has dimension n");
  int flagged = 0;
  for (const char* n : {"s2s1.cx", "s2s1_square.cx", "zero_rank2.cx", "squared.cx", "zero_rank1.cx"}) {
    auto c = parse_complex(fixture(n));
    auto rc = support(c, 5, SupportMethod::Both);
    if (rc.dim_tangent && rc.dim_points && *rc.dim_tangent != *rc.dim_points) {
      o.require(rc.degenerate, std::string(n) + " disagreement carries the degeneracy flag");
      ++flagged;
    }
    if (!rc.degenerate && rc.dim_tangent && rc.dim_points)
      o.require(*rc.dim_tangent == *rc.dim_points, std::string(n) + " methods agree");
  }
  double secs = seconds_since(t0);
  o.require(secs < 30, "runtime under 30 s");
  o.detail << flagged << " flagged disagreements, " << secs << " s";
}

void criterion9(Outcome& o) {
  std::mt19937 rng(10);
  int checks = 0;
  for (const char* n : {"s2s1.cx", "s2s1_square.cx", "zero_rank2.cx", "squared.cx", "zero_rank1.cx"}) {
    auto c = parse_complex(fixture(n));
    int dim = support(c, 5, SupportMethod::Both).dim;
    auto st = stabilize(c);
    o.require(support(st, 5, SupportMethod::Both).dim == dim, std::string(n) + " stabilization");
    o.require(support(stabilize(st), 5, SupportMethod::Both).dim == dim, std::string(n) + " double stabilization");
    for (int it = 0; it < 5; ++it) {
      std::vector<std::vector<int>> P(c.N, std::vector<int>(c.N, 0));
      for (int i = 0; i < c.N; ++i) P[i][i] = 1;
      // random elementary row additions keep P invertible
      for (int k = 0; k < 3 * c.N && c.N > 1; ++k) {
        int i = int(rng() % c.N), j = int(rng() % c.N);
        if (i == j) continue;
        for (int col = 0; col < c.N; ++col) P[i][col] ^= P[j][col];
      }
      o.require(support(change_basis(c, P), 5, SupportMethod::Both).dim == dim, std::string(n) + " change of basis");
      ++checks;
    }
  }
  o.detail << checks << " basis changes";
}

void criterion10(Outcome& o) {
  auto classify = [](const char* n) { auto p = track(n); return validate(p.track, p.measure); };
  auto ng = classify("nongeneric.track");
  o.require(!ng.generic && !ng.ok(), "non-generic");
  auto nf = classify("nonfilling.track");
  o.require(!nf.filling && !nf.ok(), "non-filling");
  auto nr = classify("nonrecurrent.track");
  o.require(nr.generic && nr.filling && !nr.recurrent && !nr.ok(), "non-recurrent");
  auto bs = classify("bad_switch.track");
  o.require(!bs.switch_conditions && !bs.ok(), "switch condition violated");
  for (const char* n : testutil::kTrackFixtures) o.require(classify(n).ok(), std::string(n) + " accepted");
  o.detail << "4 negative fixtures rejected, 3 positive fixtures accepted";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"agol cycle on the torus", criterion1},
      {"perron-frobenius primitivity", criterion2},
      {"bound formulas", criterion3},
      {"splitting algebra", criterion4},
      {"dual triangulation whitehead moves", criterion5},
      {"arcslide factorization", criterion6},
      {"heegaard counts", criterion7},
      {"support dimension", criterion8},
      {"stabilization and change of basis", criterion9},
      {"validity gates", criterion10},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail.str() << "\n";
  }
  return failed == 0 ? 0 : 1;
}
