#include "ttk/arcdiagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ttk {

namespace {

int point_id(const BranchEnd& b) { return 2 * b.branch + b.end; }

void set_match(ArcDiagram& d, int x, int y) {
  int need = std::max(x, y) + 1;
  if (int(d.match.size()) < need) d.match.resize(static_cast<size_t>(need), -1);
  d.match[x] = y;
  d.match[y] = x;
}

}  // namespace

int ArcDiagram::num_points() const {
  int n = 0;
  for (const auto& iv : intervals) n += int(iv.size());
  return n;
}

bool ArcDiagram::contains(int p) const { return p >= 0 && p < int(match.size()) && match[p] >= 0; }

std::pair<int, int> ArcDiagram::position(int p) const {
  for (int i = 0; i < int(intervals.size()); ++i)
    for (int k = 0; k < int(intervals[i].size()); ++k)
      if (intervals[i][k] == p) return {i, k};
  domain_error("NoSuchPoint", "point " + std::to_string(p) + " is not on the diagram");
}

int ArcDiagram::global_index(int p) const {
  int base = 0;
  for (const auto& iv : intervals) {
    for (int k = 0; k < int(iv.size()); ++k)
      if (iv[k] == p) return base + k;
    base += int(iv.size());
  }
  domain_error("NoSuchPoint", "point " + std::to_string(p) + " is not on the diagram");
}

bool ArcDiagram::structurally_equal(const ArcDiagram& o) const {
  if (intervals.size() != o.intervals.size()) return false;
  for (size_t i = 0; i < intervals.size(); ++i)
    if (intervals[i].size() != o.intervals[i].size()) return false;
  for (size_t i = 0; i < intervals.size(); ++i)
    for (size_t k = 0; k < intervals[i].size(); ++k)
      if (global_index(match[intervals[i][k]]) != o.global_index(o.match[o.intervals[i][k]])) return false;
  return true;
}

std::string ArcDiagram::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < intervals.size(); ++i) {
    os << "interval " << i << ":";
    for (int p : intervals[i]) os << " " << p;
    os << "\n";
  }
  os << "matching:";
  for (int p = 0; p < int(match.size()); ++p)
    if (match[p] > p) os << " " << p << "-" << match[p];
  os << "\n";
  return os.str();
}

ArcDiagram arc_diagram_from_track(const TrainTrack& t) {
  if (!t.generic() || !is_filling(t)) domain_error("NotFilling", "arc diagrams need a generic filling track");
  ArcDiagram d;
  for (int w = 0; w < t.num_switches(); ++w)
    d.intervals.push_back({point_id(t.small_right(w)), point_id(t.large(w)), point_id(t.small_left(w))});
  for (int b = 0; b < t.num_branches(); ++b) set_match(d, 2 * b, 2 * b + 1);
  return d;
}

bool valid_mark(const TrainTrack& t, const SpecialMark& m) {
  if (!t.generic()) return false;
  auto rd = regions(t);
  if (m.star.size() != rd.regions.size()) return false;
  for (size_t r = 0; r < m.star.size(); ++r) {
    int w = m.star[r];
    if (w < 0 || w >= t.num_switches() || rd.cusp_region[w][0] != int(r)) return false;
  }
  return true;
}

SpecialMark default_mark(const TrainTrack& t) {
  auto rd = regions(t);
  SpecialMark m;
  m.star.assign(rd.regions.size(), -1);
  for (int w = t.num_switches() - 1; w >= 0; --w)
    for (int r : rd.cusp_region[w]) m.star[r] = w;
  return m;
}

SpecialMark parse_mark(const std::string& text, const TrainTrack& t) {
  std::vector<std::string> names;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] != "sigma") input_error("ParseError", "expected 'sigma <switch> ...'");
    names.insert(names.end(), tok.begin() + 1, tok.end());
  }
  if (names.empty()) return default_mark(t);
  auto rd = regions(t);
  SpecialMark m;
  m.star.assign(rd.regions.size(), -1);
  for (const auto& n : names) {
    auto it = std::find(t.switch_names.begin(), t.switch_names.end(), n);
    if (it == t.switch_names.end()) input_error("ParseError", "unknown switch " + n);
    int w = int(it - t.switch_names.begin());
    int r = rd.cusp_region[w][0];
    if (m.star[r] >= 0) domain_error("InvalidMark", "two marked switches in one region");
    m.star[r] = w;
  }
  if (!valid_mark(t, m)) domain_error("InvalidMark", "mark must star exactly one cusp in every region");
  return m;
}

std::string write_mark(const SpecialMark& m, const TrainTrack& t) {
  std::string s = "sigma";
  for (int w : m.star) s += " " + t.switch_names[w];
  return s + "\n";
}

ArcDiagram special_arc_diagram(const TrainTrack& t, const SpecialMark& m) {
  if (!valid_mark(t, m)) domain_error("InvalidMark", "mark must star exactly one cusp in every region");
  ArcDiagram d = arc_diagram_from_track(t);
  std::set<int> starred(m.star.begin(), m.star.end());
  int l = t.num_branches();
  for (int w = 0; w < t.num_switches(); ++w) {
    if (starred.count(w)) continue;
    int lo = 2 * l + 2 * w, hi = lo + 1;
    d.intervals[w].insert(d.intervals[w].begin(), lo);
    d.intervals[w].push_back(hi);
    set_match(d, lo, hi);
  }
  return d;
}

namespace {

struct BoundaryWalk {
  std::vector<int> s_plus;                    // S₊ arcs met by each component
  std::vector<std::vector<std::pair<int, int>>> jumps;  // (point, partner) traversals per component
};

BoundaryWalk walk_boundary(const ArcDiagram& d) {
  BoundaryWalk bw;
  std::vector<std::vector<char>> seen;
  for (const auto& iv : d.intervals) seen.emplace_back(iv.size() + 1, 0);
  for (int i0 = 0; i0 < int(d.intervals.size()); ++i0)
    for (int g0 = 0; g0 <= int(d.intervals[i0].size()); ++g0) {
      if (seen[i0][g0]) continue;
      int i = i0, g = g0, plus = 0;
      std::vector<std::pair<int, int>> jumps;
      while (!seen[i][g]) {
        seen[i][g] = 1;
        if (g == int(d.intervals[i].size())) {
          ++plus;
          g = 0;
          continue;
        }
        int x = d.intervals[i][g];
        auto [j, k] = d.position(d.match[x]);
        jumps.emplace_back(x, d.match[x]);
        i = j;
        g = k + 1;
      }
      bw.s_plus.push_back(plus);
      bw.jumps.push_back(std::move(jumps));
    }
  return bw;
}

}  // namespace

std::vector<int> boundary_s_plus_counts(const ArcDiagram& d) { return walk_boundary(d).s_plus; }

bool is_special(const ArcDiagram& d) {
  for (int c : boundary_s_plus_counts(d))
    if (c != 1) return false;
  return true;
}

ArcDiagram arcslide(const ArcDiagram& d, int slid, int over) {
  if (!d.contains(slid) || !d.contains(over) || slid == over) domain_error("NotAdjacent", "unknown points");
  auto [i, k] = d.position(slid);
  auto [i2, k2] = d.position(over);
  if (i != i2 || std::abs(k - k2) != 1) domain_error("NotAdjacent", "points are not adjacent on one interval");
  if (d.match[over] == slid) domain_error("NotAdjacent", "cannot slide a point over its own partner");
  bool below = k < k2;
  ArcDiagram r = d;
  r.intervals[i].erase(r.intervals[i].begin() + k);
  auto [j, km] = r.position(r.match[over]);
  r.intervals[j].insert(r.intervals[j].begin() + (below ? km + 1 : km), slid);
  return r;
}

std::pair<Arcslide, Arcslide> split_to_arcslides(const TrainTrack& t, const SplitEvent& ev) {
  if (ev.kase == SplitCase::Central) domain_error("CentralSplit", "central splits have no arcslide pair");
  if (!t.is_large_branch(ev.branch)) domain_error("NotLargeBranch", "split event does not name a large branch");
  auto loc = t.locate();
  int u = loc[ev.branch][0].sw, v = loc[ev.branch][1].sw;
  int eu = 2 * ev.branch, ev1 = 2 * ev.branch + 1;
  if (ev.kase == SplitCase::Left)
    return {Arcslide{point_id(t.small_right(u)), eu}, Arcslide{point_id(t.small_right(v)), ev1}};
  return {Arcslide{point_id(t.small_left(u)), eu}, Arcslide{point_id(t.small_left(v)), ev1}};
}

SpecialMark sigma_transport(const TrainTrack& before, const SplitEvent& ev, const SpecialMark& m) {
  if (ev.kase == SplitCase::Central) domain_error("CentralSplit", "central splits do not transport marks");
  if (!valid_mark(before, m)) domain_error("InvalidMark", "mark is not valid on the track");
  TrainTrack after = split_combinatorial(before, ev.branch, ev.kase).track;
  auto rd = regions(after);
  SpecialMark r;
  r.star.assign(rd.regions.size(), -1);
  for (int w : m.star) {
    int reg = rd.cusp_region[w][0];
    if (r.star[reg] >= 0) internal_error("transported mark stars a region twice");
    r.star[reg] = w;
  }
  if (!valid_mark(after, r)) internal_error("transported mark is not valid");
  return r;
}

ArcslideSequence boundary_adjustment(const SpecialMark& s1, const SpecialMark& s2, const TrainTrack& t) {
  if (!valid_mark(t, s1)) domain_error("InvalidMark", "mark is not valid on the track");
  return boundary_adjustment(special_arc_diagram(t, s1), s1, s2, t);
}

ArcslideSequence boundary_adjustment(const ArcDiagram& start, const SpecialMark& s1, const SpecialMark& s2,
                                     const TrainTrack& t) {
  if (!valid_mark(t, s1) || !valid_mark(t, s2)) domain_error("InvalidMark", "mark is not valid on the track");
  if (!start.structurally_equal(special_arc_diagram(t, s1))) domain_error("InvalidMark", "diagram does not match the mark");
  ArcslideSequence seq;
  seq.start = start;
  ArcDiagram cur = seq.start;
  SpecialMark mark = s1;
  int guard_max = 4 * cur.num_points() * cur.num_points() + 16;
  for (size_t r = 0; r < s1.star.size(); ++r) {
    if (s1.star[r] == s2.star[r]) continue;
    int q = s2.star[r];
    const std::vector<int>& iq = cur.intervals[q];
    int x0 = iq.front(), x1 = iq.back();
    if (x0 < 2 * t.num_branches() || x1 < 2 * t.num_branches()) internal_error("expected handle points at the ends of the interval");
    int guard = 0;
    for (;;) {
      auto [i, k] = cur.position(x1);
      if (k == 0) break;
      int y = cur.intervals[i][k - 1];
      seq.slides.push_back(Arcslide{x1, y});
      cur = arcslide(cur, x1, y);
      if (++guard > guard_max) internal_error("boundary adjustment does not terminate");
    }
    for (;;) {
      auto [i, k] = cur.position(x0);
      if (k + 1 == int(cur.intervals[i].size())) break;
      int y = cur.intervals[i][k + 1];
      seq.slides.push_back(Arcslide{x0, y});
      cur = arcslide(cur, x0, y);
      if (++guard > guard_max) internal_error("boundary adjustment does not terminate");
    }
    mark.star[r] = q;
    if (!cur.structurally_equal(special_arc_diagram(t, mark)))
      internal_error("boundary adjustment did not reach the target mark");
  }
  seq.end = cur;
  seq.closing.resize(cur.intervals.size());
  for (size_t i = 0; i < seq.closing.size(); ++i) seq.closing[i] = int(i);
  return seq;
}

SpecialMark pull_back_mark(const AgolCycle& c, const SpecialMark& m) {
  const TrainTrack& t = c.start;
  if (!valid_mark(t, m)) domain_error("InvalidMark", "mark is not valid on the track");
  std::set<int> starred(m.star.begin(), m.star.end());
  auto rd = regions(t);
  SpecialMark r;
  r.star.assign(rd.regions.size(), -1);
  for (int w = 0; w < t.num_switches(); ++w)
    if (starred.count(c.iso_sw[w])) r.star[rd.cusp_region[w][0]] = w;
  if (!valid_mark(t, r)) internal_error("pulled back mark is not valid");
  return r;
}

ArcslideSequence factorize(const AgolCycle& c, const SpecialMark& m) {
  const TrainTrack& t = c.start;
  SpecialMark m0 = pull_back_mark(c, m);
  ArcslideSequence seq = boundary_adjustment(m, m0, t);
  ArcDiagram cur = seq.end;
  TrainTrack tr = t;
  SpecialMark mk = m0;
  for (int k = c.n; k < c.n + c.m; ++k)
    for (const auto& ev : c.events[k]) {
      auto [a, b] = split_to_arcslides(tr, ev);
      cur = arcslide(cur, a.slid, a.over);
      cur = arcslide(cur, b.slid, b.over);
      seq.slides.push_back(a);
      seq.slides.push_back(b);
      mk = sigma_transport(tr, ev, mk);
      tr = split_combinatorial(tr, ev.branch, ev.kase).track;
      if (!cur.structurally_equal(special_arc_diagram(tr, mk)))
        internal_error("arcslide pair does not realize the split");
    }
  seq.end = cur;
  // close up through the cycle isomorphism
  ArcDiagram relabeled;
  relabeled.intervals.resize(cur.intervals.size());
  relabeled.match = cur.match;
  for (size_t w = 0; w < cur.intervals.size(); ++w) relabeled.intervals[c.iso_sw[w]] = cur.intervals[w];
  if (!relabeled.structurally_equal(seq.start)) domain_error("NotALoop", "factorization does not close up");
  seq.closing = c.iso_sw;
  return seq;
}

std::string ArcslideSequence::str() const {
  std::ostringstream os;
  os << "start\n" << start.str();
  ArcDiagram cur = start;
  for (const auto& s : slides) {
    auto [i, k] = cur.position(s.slid);
    auto [i2, k2] = cur.position(s.over);
    os << "slide " << i << " " << k << " " << k2 << " " << (k < k2 ? "up" : "down") << "\n";
    cur = arcslide(cur, s.slid, s.over);
    (void)i2;
  }
  os << "end\n" << end.str();
  if (!closing.empty()) {
    os << "closing";
    for (int x : closing) os << " " << x;
    os << "\n";
  }
  return os.str();
}

namespace {

struct Handles {
  std::vector<std::pair<int, int>> h;  // (low, high) by global position
  std::map<int, int> of;                // point -> handle index
  int sign(int from, int to) const {    // +1 when from -> to runs low to high
    const auto& p = h[of.at(from)];
    return p.first == from && p.second == to ? 1 : -1;
  }
};

Handles handles(const ArcDiagram& d) {
  Handles H;
  for (const auto& iv : d.intervals)
    for (int p : iv)
      if (!H.of.count(p)) {
        int q = d.match[p];
        H.of[p] = H.of[q] = int(H.h.size());
        H.h.emplace_back(p, q);
      }
  return H;
}

IntMatrix slide_matrix(const ArcDiagram& before, const ArcDiagram& after, const Arcslide& s) {
  Handles hb = handles(before), ha = handles(after);
  int n = int(hb.h.size());
  IntMatrix S(n, n);
  int a = s.over, ap = s.slid;
  for (int j = 0; j < n; ++j) {
    auto [lo, hi] = ha.h[j];
    if (lo == ap || hi == ap) {
      int partner = after.match[ap];
      int s_out = ha.sign(ap, partner);
      S(hb.of.at(a), j) += s_out * hb.sign(before.match[a], a);
      S(hb.of.at(ap), j) += s_out * hb.sign(ap, partner);
    } else {
      S(hb.of.at(lo), j) = hb.sign(lo, hi);
    }
  }
  return S;
}

IntMatrix boundary_map(const ArcDiagram& d, const Handles& H) {
  IntMatrix B(int(d.intervals.size()), int(H.h.size()));
  for (int j = 0; j < int(H.h.size()); ++j) {
    B(d.position(H.h[j].second).first, j) += 1;
    B(d.position(H.h[j].first).first, j) -= 1;
  }
  return B;
}

}  // namespace

H1Action h1_action(const ArcslideSequence& seq) {
  if (seq.closing.size() != seq.start.intervals.size()) domain_error("NotALoop", "sequence has no closing identification");
  ArcDiagram cur = seq.start;
  int n = cur.num_handles();
  IntMatrix A = IntMatrix::identity(n);
  for (const auto& s : seq.slides) {
    ArcDiagram nx = arcslide(cur, s.slid, s.over);
    A = A * slide_matrix(cur, nx, s);
    cur = std::move(nx);
  }
  if (!(cur.intervals == seq.end.intervals)) domain_error("NotALoop", "slides do not reach the recorded end");
  ArcDiagram rel;
  rel.intervals.resize(cur.intervals.size());
  rel.match = cur.match;
  for (size_t w = 0; w < cur.intervals.size(); ++w) rel.intervals[seq.closing[w]] = cur.intervals[w];
  if (!rel.structurally_equal(seq.start)) domain_error("NotALoop", "end diagram differs from the start");
  Handles hs = handles(seq.start), he = handles(cur);
  // start point at (i, k) corresponds to end point rel.intervals[i][k]
  auto to_end = [&](int p) {
    auto [i, k] = seq.start.position(p);
    return rel.intervals[i][k];
  };
  IntMatrix Phi(n, n);
  for (int j = 0; j < n; ++j) {
    int lo = to_end(hs.h[j].first), hi = to_end(hs.h[j].second);
    Phi(he.of.at(lo), j) = he.sign(lo, hi);
  }
  H1Action out;
  out.full = A * Phi;
  // capped action on ker ∂ / boundary classes
  IntMatrix bd = boundary_map(seq.start, hs);
  SmithForm s1 = smith_normal_form(bd);
  int kd = n - s1.rank;
  BoundaryWalk bw = walk_boundary(seq.start);
  IntMatrix Y(kd, int(bw.jumps.size()));
  for (size_t c = 0; c < bw.jumps.size(); ++c) {
    std::vector<Z> x(static_cast<size_t>(n), Z(0));
    for (auto [p, q] : bw.jumps[c]) x[hs.of.at(p)] += hs.sign(p, q);
    std::vector<Z> y = s1.Vinv * x;
    for (int i = 0; i < s1.rank; ++i)
      if (y[i] != 0) internal_error("boundary class is not a cycle");
    for (int i = 0; i < kd; ++i) Y(i, int(c)) = y[s1.rank + i];
  }
  SmithForm s2 = smith_normal_form(Y);
  for (int i = 0; i < s2.rank; ++i)
    if (s2.D(i, i) != 1) internal_error("capped homology has torsion");
  int g2 = kd - s2.rank;
  out.capped = IntMatrix(g2, g2);
  for (int j = 0; j < g2; ++j) {
    std::vector<Z> y(static_cast<size_t>(kd), Z(0));
    for (int i = 0; i < kd; ++i) y[i] = s2.Uinv(i, s2.rank + j);
    std::vector<Z> x(static_cast<size_t>(n), Z(0));
    for (int i = 0; i < kd; ++i)
      for (int r = 0; r < n; ++r) x[r] += s1.V(r, s1.rank + i) * y[i];
    std::vector<Z> fx = out.full * x;
    std::vector<Z> yy = s1.Vinv * fx;
    for (int i = 0; i < s1.rank; ++i)
      if (yy[i] != 0) internal_error("action does not preserve cycles");
    std::vector<Z> ky(yy.begin() + s1.rank, yy.end());
    std::vector<Z> z = s2.U * ky;
    for (int i = 0; i < g2; ++i) out.capped(i, j) = z[s2.rank + i];
  }
  return out;
}

}  // namespace ttk
