#include "ttk/heegaard.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace ttk {

namespace {

const int kSlotOfSide[3] = {0, 2, 1};

int prev3(int k) { return (k + 2) % 3; }
int next3(int k) { return (k + 1) % 3; }

long to_long(const Z& z) {
  if (!z.fits_slong_p()) domain_error("BudgetExceeded", "normal coordinate too large");
  return z.get_si();
}

/// Arcs of a normal multicurve resolved in each triangle, with connected components.
struct Resolution {
  const DualTriangulation* d = nullptr;
  std::vector<long> x;
  std::vector<std::array<long, 3>> c;
  std::vector<std::array<long, 3>> offset;  // first arc id of each corner
  long num_arcs = 0;
  std::vector<std::array<std::pair<int, int>, 2>> occ;  // edge -> (triangle, side) twice
  std::vector<int> comp;                                // arc -> component
  int ncomp = 0;

  long arc(int t, int k, long j) const { return offset[t][k] + j; }
  long side_len(int t, int k) const { return x[d->tri[t][k]]; }
  /// Arc through point i on side k of triangle t, counted from the start corner of the side.
  long arc_at(int t, int k, long i) const {
    long cs = c[t][prev3(k)];
    if (i < cs) return arc(t, prev3(k), i);
    return arc(t, k, side_len(t, k) - 1 - i);
  }
  std::pair<int, int> other(int t, int k) const {
    int e = d->tri[t][k];
    const auto& o = occ[e];
    if (o[0].first == t && o[0].second == k) return o[1];
    return o[0];
  }
};

Resolution resolve(const DualTriangulation& d, const std::vector<long>& x) {
  Resolution r;
  r.d = &d;
  r.x = x;
  int T = int(d.tri.size());
  r.occ.assign(d.num_edges, {std::pair{-1, -1}, std::pair{-1, -1}});
  std::vector<int> seen(d.num_edges, 0);
  for (int t = 0; t < T; ++t)
    for (int k = 0; k < 3; ++k) {
      int e = d.tri[t][k];
      if (seen[e] >= 2) internal_error("edge on more than two sides");
      r.occ[e][seen[e]++] = {t, k};
    }
  for (int e = 0; e < d.num_edges; ++e)
    if (seen[e] != 2) domain_error("PuncturedSurface", "triangulation has a boundary edge");
  r.c.resize(T);
  r.offset.resize(T);
  for (int t = 0; t < T; ++t)
    for (int k = 0; k < 3; ++k) {
      long a = x[d.tri[t][k]], b = x[d.tri[t][next3(k)]], o = x[d.tri[t][prev3(k)]];
      r.c[t][k] = (a + b - o) / 2;
      r.offset[t][k] = r.num_arcs;
      r.num_arcs += r.c[t][k];
    }
  std::vector<long> parent(r.num_arcs);
  std::iota(parent.begin(), parent.end(), 0L);
  std::function<long(long)> find = [&](long a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int e = 0; e < d.num_edges; ++e) {
    auto [t0, k0] = r.occ[e][0];
    auto [t1, k1] = r.occ[e][1];
    for (long i = 0; i < x[e]; ++i) {
      long a = find(r.arc_at(t0, k0, i)), b = find(r.arc_at(t1, k1, x[e] - 1 - i));
      if (a != b) parent[a] = b;
    }
  }
  std::map<long, int> ids;
  r.comp.resize(r.num_arcs);
  for (long a = 0; a < r.num_arcs; ++a) {
    long root = find(a);
    auto it = ids.find(root);
    if (it == ids.end()) it = ids.emplace(root, int(ids.size())).first;
    r.comp[a] = it->second;
  }
  r.ncomp = int(ids.size());
  return r;
}

std::vector<std::vector<long>> component_coords(const Resolution& r) {
  std::vector<std::vector<long>> cc(r.ncomp, std::vector<long>(r.d->num_edges, 0));
  for (int e = 0; e < r.d->num_edges; ++e) {
    auto [t, k] = r.occ[e][0];
    for (long i = 0; i < r.x[e]; ++i) ++cc[r.comp[r.arc_at(t, k, i)]][e];
  }
  return cc;
}

/// Components of the surface cut along the multicurve: Euler characteristic and switch count.
struct Side {
  long euler = 0;
  int switches = 0;
};

std::vector<Side> cut_components(const Resolution& r) {
  const DualTriangulation& d = *r.d;
  int T = int(d.tri.size());
  long P = r.num_arcs + T;
  auto piece_at_gap = [&](int t, int k, long g) -> long {
    long cs = r.c[t][prev3(k)];
    if (g == cs) return r.num_arcs + t;
    if (g < cs) return r.arc(t, prev3(k), g);
    return r.arc(t, k, r.side_len(t, k) - g);
  };
  std::vector<long> parent(P);
  std::iota(parent.begin(), parent.end(), 0L);
  auto find = [&](long a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](long a, long b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };
  for (int e = 0; e < d.num_edges; ++e) {
    auto [t0, k0] = r.occ[e][0];
    auto [t1, k1] = r.occ[e][1];
    for (long g = 0; g <= r.x[e]; ++g) unite(piece_at_gap(t0, k0, g), piece_at_gap(t1, k1, r.x[e] - g));
  }
  std::vector<long> vertex_piece(d.num_vertices, -1);
  for (int t = 0; t < T; ++t)
    for (int k = 0; k < 3; ++k) {
      long p = r.c[t][k] > 0 ? r.arc(t, k, 0) : r.num_arcs + t;
      int v = d.corner_vertex[t][k];
      if (vertex_piece[v] < 0)
        vertex_piece[v] = p;
      else
        unite(vertex_piece[v], p);
    }
  std::map<long, int> ids;
  std::vector<Side> out;
  auto id_of = [&](long p) {
    long root = find(p);
    auto it = ids.find(root);
    if (it == ids.end()) {
      it = ids.emplace(root, int(out.size())).first;
      out.push_back({});
    }
    return it->second;
  };
  for (long p = 0; p < P; ++p) {
    int i = id_of(p);
    out[i].euler += 1;
    if (p >= r.num_arcs) ++out[i].switches;
  }
  for (int v = 0; v < d.num_vertices; ++v) out[id_of(vertex_piece[v])].euler += 1;
  for (int e = 0; e < d.num_edges; ++e) {
    auto [t0, k0] = r.occ[e][0];
    for (long g = 0; g <= r.x[e]; ++g) out[id_of(piece_at_gap(t0, k0, g))].euler -= 1;
  }
  return out;
}

/// Leg of branch b: end 0 leaves its triangle through the central gap, end 1 crosses arcs in
/// the far triangle. Fields in the far triangle's side orientation.
struct Leg {
  int near_t, near_k, far_t, far_k;
  long p, central;
};

Leg leg_of(const TrainTrack& t, const Resolution& r, int b) {
  Leg g{-1, -1, -1, -1, 0, 0};
  for (int w = 0; w < t.num_switches(); ++w)
    for (int k = 0; k < 3; ++k) {
      BranchEnd be = t.sw[w][kSlotOfSide[k]];
      if (be.branch != b) continue;
      if (be.end == 0) {
        g.near_t = w;
        g.near_k = k;
      } else {
        g.far_t = w;
        g.far_k = k;
      }
    }
  g.p = r.x[b] - r.c[g.near_t][prev3(g.near_k)];
  g.central = r.c[g.far_t][prev3(g.far_k)];
  return g;
}

/// Arcs crossed by the far part of the leg, and the rectangles it crosses from arc to arc.
void leg_crossings(const Resolution& r, const Leg& g, std::vector<long>& arcs, std::vector<long>& pieces) {
  int t = g.far_t, k = g.far_k;
  if (g.p < g.central) {
    int cor = prev3(k);
    for (long j = g.p; j < g.central; ++j) arcs.push_back(r.arc(t, cor, j));
    for (long j = g.p + 1; j < g.central; ++j) pieces.push_back(r.arc(t, cor, j));
  } else if (g.p > g.central) {
    long j0 = r.side_len(t, k) - g.p, ck = r.c[t][k];
    for (long j = j0; j < ck; ++j) arcs.push_back(r.arc(t, k, j));
    for (long j = j0 + 1; j < ck; ++j) pieces.push_back(r.arc(t, k, j));
  }
}

void require_closed_generic(const TrainTrack& t) {
  if (!t.generic()) domain_error("NotGeneric", "heegaard construction needs a generic track");
  if (t.punctures != 0) domain_error("PuncturedSurface", "heegaard construction needs a closed surface");
}

}  // namespace

NormalBasis normalize_basis(const TrainTrack& t, const std::vector<NormalCurve>& curves) {
  require_closed_generic(t);
  if (curves.empty()) domain_error("EmptyBasis", "basis must be nonempty");
  NormalBasis nb;
  nb.track = t;
  nb.tri = dual_triangulation(t);
  nb.curves = curves;
  int l = t.num_branches();
  std::vector<std::vector<long>> xs;
  for (const auto& g : curves) {
    check_normal(nb.tri, g);
    if (curve_length(g) == 0) domain_error("EmptyCurve", "curve has zero length");
    std::vector<long> x(l);
    for (int e = 0; e < l; ++e) x[e] = to_long(g.coords[e]);
    auto r = resolve(nb.tri, x);
    if (r.ncomp != 1) domain_error("DisconnectedCurve", "basis curve has " + std::to_string(r.ncomp) + " components");
    for (const auto& side : cut_components(r))
      if (side.euler == 1) domain_error("InessentialCurve", "basis curve bounds a disk");
    for (const auto& y : xs)
      if (y == x) domain_error("ParallelCurves", "two basis curves have equal coordinates");
    xs.push_back(x);
  }
  nb.total.assign(l, 0);
  for (const auto& x : xs)
    for (int e = 0; e < l; ++e) nb.total[e] += x[e];
  NormalCurve sum;
  for (long v : nb.total) sum.coords.push_back(Z(v));
  check_normal(nb.tri, sum);
  auto r = resolve(nb.tri, nb.total);
  auto cc = component_coords(r);
  std::vector<int> curve_of(r.ncomp, -1);
  std::vector<int> used(xs.size(), 0);
  for (int i = 0; i < r.ncomp; ++i)
    for (size_t j = 0; j < xs.size(); ++j)
      if (!used[j] && cc[i] == xs[j]) {
        used[j] = 1;
        curve_of[i] = int(j);
        break;
      }
  if (r.ncomp != int(xs.size()) || std::count(curve_of.begin(), curve_of.end(), -1) > 0)
    domain_error("NotDisjoint", "basis curves intersect");
  for (const auto& side : cut_components(r))
    if (side.euler == 0) domain_error("ParallelCurves", "two basis curves cobound an annulus");
  nb.corner = r.c;
  nb.tau_crossings.assign(xs.size(), std::vector<long>(l, 0));
  for (int b = 0; b < l; ++b) {
    Leg g = leg_of(t, r, b);
    std::vector<long> arcs, pieces;
    leg_crossings(r, g, arcs, pieces);
    for (long a : arcs) ++nb.tau_crossings[curve_of[r.comp[a]]][b];
  }
  for (long v : nb.total) nb.length += v;
  for (const auto& row : nb.tau_crossings)
    for (long v : row) nb.tau_total += v;
  if (nb.tau_total > 2 * nb.length) internal_error("track crossings exceed twice the length");
  return nb;
}

int ReducedGraph::live_edges() const {
  int n = 0;
  for (const auto& e : edges) n += !e.removed;
  return n;
}

namespace {

int he_vertex(const ReducedGraph& g, int h) { return h & 1 ? g.edges[h / 2].v1 : g.edges[h / 2].v0; }
int he_side(const ReducedGraph& g, int h) { return h & 1 ? g.edges[h / 2].side1 : g.edges[h / 2].side0; }

struct Rotation {
  std::vector<std::array<int, 3>> at;  // [switch][side] -> live half-edge or -1
};

Rotation rotation(const ReducedGraph& g) {
  Rotation r;
  r.at.assign(g.num_vertices, {-1, -1, -1});
  for (int i = 0; i < int(g.edges.size()); ++i) {
    if (g.edges[i].removed) continue;
    r.at[g.edges[i].v0][g.edges[i].side0] = 2 * i;
    r.at[g.edges[i].v1][g.edges[i].side1] = 2 * i + 1;
  }
  return r;
}

int ccw_next(const ReducedGraph& g, const Rotation& rot, int h) {
  int w = he_vertex(g, h), s = he_side(g, h);
  for (int d = 1; d <= 3; ++d) {
    int o = rot.at[w][(s + d) % 3];
    if (o >= 0) return o;
  }
  internal_error("half-edge missing from rotation");
}

/// Evidence for the region on the right of half-edge h, up to and including the corner at its end.
int right_side_bits(const ReducedGraph& g, const Rotation& rot, const NormalBasis& b, int h) {
  const auto& e = g.edges[h / 2];
  int bits = 0;
  int n = int(e.pieces.size());
  for (int i = 0; i < n; ++i) {
    const PieceRef& p = e.pieces[h & 1 ? n - 1 - i : i];
    int dir = h & 1 ? -p.dir : p.dir;
    if (dir > 0 && p.level == 0)
      bits |= 1;
    else
      bits |= 2;
  }
  int tw = h ^ 1, nx = ccw_next(g, rot, tw);
  int w = he_vertex(g, tw), a = he_side(g, tw), c = he_side(g, nx);
  int span = nx == tw ? 3 : (c - a + 3) % 3;
  for (int d = 0; d < span; ++d) bits |= b.corner[w][(a + d) % 3] == 0 ? 1 : 2;
  return bits;
}

}  // namespace

std::vector<GraphFace> trace_faces(const ReducedGraph& g, const NormalBasis& b) {
  Rotation rot = rotation(g);
  int H = 2 * int(g.edges.size());
  std::vector<int> done(H, 0);
  std::vector<GraphFace> faces;
  for (int h0 = 0; h0 < H; ++h0) {
    if (g.edges[h0 / 2].removed || done[h0]) continue;
    GraphFace f;
    int h = h0;
    do {
      done[h] = 1;
      f.walk.push_back(h);
      f.corners.push_back(he_vertex(g, h));
      f.type |= right_side_bits(g, rot, b, h);
      h = ccw_next(g, rot, h ^ 1);
    } while (h != h0);
    faces.push_back(std::move(f));
  }
  return faces;
}

ReducedGraph dual_graph(const NormalBasis& b) {
  const TrainTrack& t = b.track;
  auto r = resolve(b.tri, b.total);
  int s = t.num_switches();
  ReducedGraph g;
  g.num_vertices = s;
  std::vector<std::array<int, 3>> he(s, {-1, -1, -1});
  std::vector<int> piece_seen(r.num_arcs, 0);
  long guard = 0;
  for (long v : b.total) guard += v;
  guard += 4;
  for (int w = 0; w < s; ++w)
    for (int k0 = 0; k0 < 3; ++k0) {
      if (he[w][k0] >= 0) continue;
      GraphEdge e;
      e.v0 = w;
      e.side0 = k0;
      int tt = w, k = k0;
      long gap = r.c[w][prev3(k0)];
      for (long step = 0;; ++step) {
        if (step > guard) internal_error("chain does not terminate");
        auto [t2, k2] = r.other(tt, k);
        long g2 = r.side_len(t2, k2) - gap, cen = r.c[t2][prev3(k2)];
        if (g2 == cen) {
          e.v1 = t2;
          e.side1 = k2;
          break;
        }
        PieceRef p;
        p.tri = t2;
        if (g2 < cen) {
          p.corner = prev3(k2);
          p.level = int(g2);
          p.dir = -1;
          tt = t2;
          k = p.corner;
          gap = r.side_len(t2, k) - g2;
        } else {
          p.corner = k2;
          p.level = int(r.side_len(t2, k2) - g2);
          p.dir = 1;
          tt = t2;
          k = next3(k2);
          gap = p.level;
        }
        piece_seen[r.arc(p.tri, p.corner, p.level)] = 1;
        e.pieces.push_back(p);
      }
      int id = int(g.edges.size());
      he[w][k0] = 2 * id;
      if (he[e.v1][e.side1] >= 0 && !(e.v1 == w && e.side1 == k0)) internal_error("chain ends collide");
      he[e.v1][e.side1] = 2 * id + 1;
      g.edges.push_back(std::move(e));
    }
  for (long a = 0; a < r.num_arcs; ++a)
    if (!piece_seen[a])
      domain_error("ComponentWithoutSwitch", "a component of the surface cut along the basis contains no switch");

  int m = int(b.curves.size());
  int euler = 2 - 2 * t.genus + 2 * m;
  auto audit = [&](const std::vector<GraphFace>& faces, const char* when) {
    if (s - g.live_edges() + int(faces.size()) != euler)
      internal_error(std::string("region audit failed ") + when);
  };
  g.faces = trace_faces(g, b);
  g.initial_faces = int(g.faces.size());
  for (const auto& f : g.faces)
    if (f.type != 1 && f.type != 2) internal_error("region touches both a vertex and the basis");
  audit(g.faces, "before reduction");

  std::vector<int> he_bits(2 * g.edges.size(), 0);
  for (const auto& f : g.faces)
    for (int h : f.walk) he_bits[h] = f.type;

  auto degree = [&](int w) {
    int d = 0;
    for (const auto& e : g.edges)
      if (!e.removed) d += (e.v0 == w) + (e.v1 == w);
    return d;
  };
  auto face_of = [&](const std::vector<GraphFace>& faces) {
    std::vector<int> fo(2 * g.edges.size(), -1);
    for (int i = 0; i < int(faces.size()); ++i)
      for (int h : faces[i].walk) fo[h] = i;
    return fo;
  };
  auto try_remove = [&](const std::vector<GraphFace>& faces, int fi, const char* what) {
    auto fo = face_of(faces);
    for (int h : faces[fi].walk) {
      int ei = h / 2;
      if (fo[h ^ 1] == fi) continue;
      const auto& e = g.edges[ei];
      int dv0 = degree(e.v0), dv1 = degree(e.v1);
      if (e.v0 == e.v1 ? dv0 <= 2 : (dv0 <= 1 || dv1 <= 1)) continue;
      int merged = faces[fi].type | faces[fo[h ^ 1]].type;
      for (int x : faces[fi].walk) he_bits[x] = merged;
      for (int x : faces[fo[h ^ 1]].walk) he_bits[x] = merged;
      g.edges[ei].removed = true;
      g.log.push_back(std::string(what) + ": removed edge " + std::to_string(ei));
      return true;
    }
    return false;
  };
  for (;;) {
    auto faces = trace_faces(g, b);
    for (auto& f : faces) {
      f.type = 0;
      for (int h : f.walk) f.type |= he_bits[h];
    }
    bool changed = false;
    auto pass = [&](auto pred, const char* what) {
      for (int i = 0; i < int(faces.size()) && !changed; ++i)
        if (pred(faces[i])) changed = try_remove(faces, i, what);
    };
    pass([](const GraphFace& f) { return f.sides() == 2 && f.type == 1; }, "vertex bigon");
    if (!changed) pass([](const GraphFace& f) { return f.sides() == 1 && f.type == 2; }, "monogon");
    if (!changed) pass([](const GraphFace& f) { return f.sides() == 2; }, "bigon");
    if (!changed) pass([](const GraphFace& f) { return f.sides() == 1; }, "monogon");
    if (changed) continue;
    for (const auto& f : faces)
      if (f.sides() < 3) {
        std::ostringstream os;
        os << "a region with fewer than three sides cannot be removed; regions";
        for (const auto& h : faces) {
          os << " [";
          for (size_t i = 0; i < h.walk.size(); ++i) os << (i ? " " : "") << h.corners[i] << ":" << h.walk[i];
          os << " t" << h.type << "]";
        }
        domain_error("IrreducibleRegion", os.str());
      }
    audit(faces, "after reduction");
    g.faces = std::move(faces);
    break;
  }
  return g;
}

std::vector<int> sigma_prime(const ReducedGraph& g) {
  int F = int(g.faces.size());
  std::vector<int> match_v(g.num_vertices, -1), match_f(F, -1);
  std::vector<std::vector<int>> adj(F);
  for (int f = 0; f < F; ++f) {
    std::set<int> vs(g.faces[f].corners.begin(), g.faces[f].corners.end());
    adj[f].assign(vs.begin(), vs.end());
  }
  std::vector<int> seen;
  std::function<bool(int)> augment = [&](int f) {
    for (int v : adj[f]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_v[v] < 0 || augment(match_v[v])) {
        match_v[v] = f;
        match_f[f] = v;
        return true;
      }
    }
    return false;
  };
  for (int f = 0; f < F; ++f) {
    seen.assign(g.num_vertices, 0);
    if (!augment(f)) domain_error("HallViolation", "no system of distinct boundary vertices for region " + std::to_string(f));
  }
  return match_f;
}

BorderedSuturedDiagram build_diagram(const NormalBasis& b, const SpecialMark& sigma, const ReducedGraph& g,
                                     const std::vector<int>& sp) {
  const TrainTrack& t = b.track;
  if (b.curves.empty()) domain_error("EmptyBasis", "basis must be nonempty");
  if (!valid_mark(t, sigma)) domain_error("InvalidMark", "mark does not pick one switch per region");
  if (sp.size() != g.faces.size()) domain_error("DimensionMismatch", "σ′ does not cover the regions");
  auto r = resolve(b.tri, b.total);
  int s = t.num_switches(), l = t.num_branches(), m = int(b.curves.size());
  BorderedSuturedDiagram d;
  d.g = t.genus;
  d.s = s;
  d.l = l;
  d.m = m;
  d.length = b.length;

  std::vector<int> in_sigma(s, 0), in_image(s, 0);
  for (int w : sigma.star) in_sigma[w] = 1;
  for (int w : sp) in_image[w] = 1;
  std::vector<int> a2(s, -1), b2(s, -1), b1(g.edges.size(), -1);
  for (int e = 0; e < l; ++e) d.alpha_names.push_back("a1:" + t.branch_names[e]);
  for (int w = 0; w < s; ++w)
    if (!in_sigma[w]) {
      a2[w] = int(d.alpha_names.size());
      d.alpha_names.push_back("a2:" + t.switch_names[w]);
    }
  for (int i = 0; i < m; ++i) d.beta_names.push_back("c:" + std::to_string(i));
  for (int i = 0; i < int(g.edges.size()); ++i)
    if (!g.edges[i].removed) {
      b1[i] = int(d.beta_names.size());
      d.beta_names.push_back("b1:" + std::to_string(i));
    }
  for (int w = 0; w < s; ++w)
    if (!in_image[w]) {
      b2[w] = int(d.beta_names.size());
      d.beta_names.push_back("b2:" + t.switch_names[w]);
    }
  d.alpha_arcs = int(d.alpha_names.size());
  d.beta_circles = m;
  d.alpha_a1 = l;
  d.alpha_a2 = d.alpha_arcs - l;
  d.beta_a1 = g.live_edges();
  d.beta_a2 = int(d.beta_names.size()) - m - d.beta_a1;
  IntMatrix M(d.alpha_arcs, int(d.beta_names.size()));

  for (int i = 0; i < m; ++i)
    for (int e = 0; e < l; ++e) M(e, i) += b.tau_crossings[i][e];

  std::vector<int> chain_of_piece(r.num_arcs, -1);
  for (int i = 0; i < int(g.edges.size()); ++i)
    for (const auto& p : g.edges[i].pieces) chain_of_piece[r.arc(p.tri, p.corner, p.level)] = i;
  std::vector<Leg> legs;
  for (int e = 0; e < l; ++e) {
    legs.push_back(leg_of(t, r, e));
    std::vector<long> arcs, pieces;
    leg_crossings(r, legs[e], arcs, pieces);
    for (long p : pieces) {
      int c = chain_of_piece[p];
      if (c < 0) internal_error("rectangle without a chain");
      if (b1[c] >= 0) M(e, b1[c]) += 1;
    }
  }

  // Near each boundary circle, slide the chain ends into the cusp sector.
  Rotation rot = rotation(g);
  std::vector<int> face_of(2 * g.edges.size(), -1);
  for (int f = 0; f < int(g.faces.size()); ++f)
    for (int h : g.faces[f].walk) face_of[h] = f;
  std::vector<int> face_to_vertex_face(s, -1);
  for (int f = 0; f < int(sp.size()); ++f) face_to_vertex_face[sp[f]] = f;
  for (int w = 0; w < s; ++w) {
    struct Item {
      int leg = -1;    // branch
      int chain = -1;  // half-edge
      int side = 0;
      bool cusp = false;
    };
    std::vector<Item> items;
    for (int k : {2, 0, 1}) {
      BranchEnd be = t.sw[w][kSlotOfSide[k]];
      const Leg& lg = legs[be.branch];
      bool leg_first = be.end == 0 ? lg.p < lg.central : lg.p <= lg.central;
      Item leg{be.branch, -1, k, false}, ch{-1, rot.at[w][k], k, false};
      if (leg_first) {
        items.push_back(leg);
        if (ch.chain >= 0) items.push_back(ch);
      } else {
        if (ch.chain >= 0) items.push_back(ch);
        items.push_back(leg);
      }
    }
    items.push_back(Item{-1, -1, -1, true});
    int n = int(items.size()), icusp = n - 1;
    std::vector<int> chain_pos;
    for (int i = 0; i < n; ++i)
      if (items[i].chain >= 0) chain_pos.push_back(i);
    if (chain_pos.empty()) internal_error("isolated vertex in reduced graph");
    // Cost of sliding every chain end to the cusp without crossing the gap after item x.
    auto slide = [&](int x, std::vector<std::pair<int, int>>* out) {
      int cost = 0;
      for (int i : chain_pos) {
        bool ccw_ok = true;
        for (int q = i; q < icusp; ++q)
          if (q == x) ccw_ok = false;
        std::vector<int> passed;
        if (ccw_ok) {
          for (int q = i + 1; q < icusp; ++q) passed.push_back(q);
        } else {
          for (int q = i - 1; q >= 0; --q) passed.push_back(q);
        }
        for (int q : passed)
          if (items[q].leg >= 0) {
            ++cost;
            if (out) out->push_back({items[q].leg, items[i].chain});
          }
      }
      return cost;
    };
    int target = face_to_vertex_face[w];
    int best = -1, best_cost = 0;
    for (size_t ci = 0; ci < chain_pos.size(); ++ci) {
      int a = chain_pos[ci], bnext = chain_pos[(ci + 1) % chain_pos.size()];
      int f = face_of[items[a].chain ^ 1];
      if (target >= 0 && f != target) continue;
      int span = (bnext - a + n) % n;
      if (span == 0) span = n;
      for (int d2 = 0; d2 < span; ++d2) {
        int x = (a + d2) % n;
        int cost = slide(x, nullptr);
        if (best < 0 || cost < best_cost) {
          best = x;
          best_cost = cost;
        }
      }
    }
    if (best < 0) internal_error("σ′ region does not meet its vertex");
    std::vector<std::pair<int, int>> hits;
    slide(best, &hits);
    for (auto [leg, h] : hits) M(leg, b1[h / 2]) += 1;
    if (!in_sigma[w])
      for (int i : chain_pos) M(a2[w], b1[items[i].chain / 2]) += 1;
    if (b2[w] >= 0) {
      for (int k = 0; k < 3; ++k) M(t.sw[w][k].branch, b2[w]) += 1;
      if (!in_sigma[w]) M(a2[w], b2[w]) += 2;
    }
  }
  d.intersections = M;
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < d.alpha_arcs; ++a) d.beta_c_alpha_total += M(a, i).get_si();

  int ga = 2 * (d.g + s - 1), gb = 2 * (d.g + s - m - 1);
  if (d.alpha_arcs != ga) internal_error("α-arc count " + std::to_string(d.alpha_arcs) + " differs from 2(g+s−1)");
  if (d.beta_a1 + d.beta_a2 != gb) internal_error("β-arc count differs from 2(g+s−m−1)");
  if (d.beta_c_alpha_total > 2 * d.length) internal_error("basis crossings exceed twice the length");
  return d;
}

BorderedSuturedDiagram build_diagram(const TrainTrack& t, const std::vector<NormalCurve>& curves) {
  auto nb = normalize_basis(t, curves);
  auto g = dual_graph(nb);
  auto sp = sigma_prime(g);
  return build_diagram(nb, default_mark(t), g, sp);
}

std::string BorderedSuturedDiagram::str() const {
  std::ostringstream os;
  os << "diagram g=" << g << " s=" << s << " l=" << l << " m=" << m << "\n";
  os << "boundary circles " << s << " sutures 2 each\n";
  os << "alpha arcs " << alpha_arcs << " (" << alpha_a1 << " from the track, " << alpha_a2 << " extra)\n";
  os << "beta circles " << beta_circles << "\n";
  os << "beta arcs " << beta_a1 + beta_a2 << " (" << beta_a1 << " from the graph, " << beta_a2 << " extra)\n";
  os << "alpha";
  for (const auto& n : alpha_names) os << " " << n;
  os << "\nbeta";
  for (const auto& n : beta_names) os << " " << n;
  os << "\nintersections " << intersections.rows << " " << intersections.cols << "\n";
  for (int i = 0; i < intersections.rows; ++i) {
    os << "row";
    for (int j = 0; j < intersections.cols; ++j) os << " " << intersections(i, j);
    os << "\n";
  }
  return os.str();
}

GeneratorSet count_generators(const BorderedSuturedDiagram& d, bool enumerate) {
  const IntMatrix& M = d.intersections;
  int A = M.rows, B = M.cols;
  if (A > 62) domain_error("BudgetExceeded", "too many α objects for the subset recursion");
  GeneratorSet gs;
  std::unordered_map<unsigned long long, Z> dp{{0ULL, Z(1)}};
  for (int j = 0; j < B; ++j) {
    std::unordered_map<unsigned long long, Z> nx;
    bool circle = j < d.beta_circles;
    for (const auto& [mask, cnt] : dp) {
      if (!circle) nx[mask] += cnt;
      for (int a = 0; a < A; ++a)
        if (!(mask >> a & 1ULL) && M(a, j) != 0) nx[mask | (1ULL << a)] += cnt * M(a, j);
    }
    dp = std::move(nx);
  }
  gs.count = 0;
  gs.by_size.assign(A + 1, Z(0));
  for (const auto& [mask, cnt] : dp) {
    gs.count += cnt;
    gs.by_size[__builtin_popcountll(mask)] += cnt;
  }
  gs.candidates = 1;
  for (int j = 0; j < B; ++j) {
    Z opts = j < d.beta_circles ? 0 : 1;
    for (int a = 0; a < A; ++a) opts += M(a, j);
    gs.candidates *= opts;
  }
  if (enumerate) {
    if (gs.count > 1000000) domain_error("BudgetExceeded", "more than 10^6 generators to enumerate");
    // point id: running index over (α, β, k) in row-major order
    std::vector<std::vector<long>> base(A, std::vector<long>(B, 0));
    long next = 0;
    for (int a = 0; a < A; ++a)
      for (int j = 0; j < B; ++j) {
        base[a][j] = next;
        next += M(a, j).get_si();
      }
    std::vector<int> cur(B, -1);
    std::vector<char> used(A, 0);
    std::function<void(int)> rec = [&](int j) {
      if (j == B) {
        gs.generators.push_back(cur);
        return;
      }
      if (j >= d.beta_circles) {
        cur[j] = -1;
        rec(j + 1);
      }
      for (int a = 0; a < A; ++a) {
        if (used[a]) continue;
        long c = M(a, j).get_si();
        for (long k = 0; k < c; ++k) {
          used[a] = 1;
          cur[j] = int(base[a][j] + k);
          rec(j + 1);
          used[a] = 0;
        }
      }
      cur[j] = -1;
    };
    rec(0);
  }
  return gs;
}

Z brute_force_generators(const BorderedSuturedDiagram& d) {
  const IntMatrix& M = d.intersections;
  int A = M.rows, B = M.cols;
  // explicit points (α, β); walk every partial matching point by point
  std::vector<std::vector<int>> pts(B);
  for (int j = 0; j < B; ++j)
    for (int a = 0; a < A; ++a)
      for (long k = 0; k < M(a, j).get_si(); ++k) pts[j].push_back(a);
  const long budget = 100000000;
  long nodes = 0;
  std::vector<char> used(A, 0);
  Z count = 0;
  std::function<void(int)> rec = [&](int j) {
    if (++nodes > budget) domain_error("BudgetExceeded", "more than 10^8 partial matchings");
    if (j == B) {
      ++count;
      return;
    }
    if (j >= d.beta_circles) rec(j + 1);
    for (int a : pts[j])
      if (!used[a]) {
        used[a] = 1;
        rec(j + 1);
        used[a] = 0;
      }
  };
  rec(0);
  return count;
}

TubeCut attach_tube_cutting(const BorderedSuturedDiagram& d, const GeneratorSet& gens) {
  TubeCut tc;
  tc.count = 0;
  for (int k = 0; k < int(gens.by_size.size()); ++k) {
    if (gens.by_size[k] == 0) continue;
    int u = k - d.beta_circles;
    if (u < 0) internal_error("generator misses a β-circle");
    Z per = TC_FIRST_KIND + TC_ALPHA_CIRCLE_HITS * TC_BETA1_HITS * u, f;
    mpz_pow_ui(f.get_mpz_t(), per.get_mpz_t(), d.s);
    tc.count += gens.by_size[k] * f;
  }
  Z base = 20 * (d.g + d.s - d.m) - 18;
  mpz_pow_ui(tc.factor_bound.get_mpz_t(), base.get_mpz_t(), d.s);
  return tc;
}

BoundCheck verify_bound(const BorderedSuturedDiagram& d, const TubeCut& tc, const BoundReport& r) {
  BoundCheck bc;
  bc.count = tc.count;
  bc.bound = dd_bound(d.g, d.s, r.M_psi);
  bc.length = d.length;
  bc.M_psi = r.M_psi;
  bool length_ok = Z(d.length) <= r.M_psi;
  bool count_ok = tc.count <= bc.bound;
  bc.pass = length_ok && count_ok;
  if (!bc.pass) {
    std::ostringstream os;
    if (!length_ok) os << "basis length " << d.length << " exceeds M(psi) = " << r.M_psi << "; ";
    if (!count_ok) os << "generator count " << tc.count << " exceeds bound " << bc.bound;
    bc.witness = os.str();
  }
  return bc;
}

std::vector<NormalCurve> parse_basis(const std::string& text, const TrainTrack& t) {
  std::map<std::string, int> idx;
  for (int i = 0; i < t.num_branches(); ++i) idx[t.branch_names[i]] = i;
  std::vector<NormalCurve> out;
  std::istringstream is(text);
  std::string line;
  int ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] != "curve") input_error("ParseError", "line " + std::to_string(ln) + ": expected 'curve'");
    NormalCurve c;
    c.coords.assign(t.num_branches(), Z(0));
    for (size_t i = 1; i < toks.size(); ++i) {
      auto eq = toks[i].find('=');
      if (eq == std::string::npos) input_error("ParseError", "line " + std::to_string(ln) + ": expected branch=value");
      auto it = idx.find(toks[i].substr(0, eq));
      if (it == idx.end()) input_error("ParseError", "line " + std::to_string(ln) + ": unknown branch");
      try {
        c.coords[it->second] = Z(toks[i].substr(eq + 1));
      } catch (const std::invalid_argument&) {
        input_error("ParseError", "line " + std::to_string(ln) + ": bad coordinate");
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ttk
