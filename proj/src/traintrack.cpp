#include "ttk/traintrack.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "ttk/lp.hpp"

namespace ttk {

bool TrainTrack::generic() const {
  return std::all_of(sw.begin(), sw.end(), [](const auto& s) { return s.size() == 3; });
}

std::vector<std::array<Dart, 2>> TrainTrack::locate() const {
  std::vector<std::array<Dart, 2>> loc(static_cast<size_t>(num_branches()));
  for (int w = 0; w < num_switches(); ++w)
    for (int k = 0; k < int(sw[w].size()); ++k) loc[sw[w][k].branch][sw[w][k].end] = Dart{w, k};
  return loc;
}

bool TrainTrack::is_large_branch(int b) const {
  auto loc = locate();
  return loc[b][0].slot == 0 && loc[b][1].slot == 0;
}

bool TrainTrack::is_mixed_branch(int b) const {
  auto loc = locate();
  return (loc[b][0].slot == 0) != (loc[b][1].slot == 0);
}

int TrainTrack::ccw(int w, int slot) const {
  int k = int(sw[w].size()) - 1;
  if (slot == 0) return k;
  return slot - 1;
}

Dart TrainTrack::other_end(const Dart& d) const {
  BranchEnd be = sw[d.sw][d.slot];
  for (int w = 0; w < num_switches(); ++w)
    for (int k = 0; k < int(sw[w].size()); ++k)
      if (sw[w][k].branch == be.branch && sw[w][k].end != be.end) return Dart{w, k};
  internal_error("branch end without partner");
}

int RegionData::region_of_cusp(const CuspRef& c) const { return cusp_region[c.sw][c.idx]; }

RegionData regions(const TrainTrack& t) {
  auto loc = t.locate();
  RegionData rd;
  int s = t.num_switches();
  rd.region_of_dart.resize(static_cast<size_t>(s));
  rd.cusp_region.resize(static_cast<size_t>(s));
  rd.cusp_index.resize(static_cast<size_t>(s));
  for (int w = 0; w < s; ++w) {
    rd.region_of_dart[w].assign(t.sw[w].size(), -1);
    int nc = std::max(0, int(t.sw[w].size()) - 2);
    rd.cusp_region[w].assign(size_t(nc), -1);
    rd.cusp_index[w].assign(size_t(nc), -1);
  }
  for (int w0 = 0; w0 < s; ++w0)
    for (int k0 = 0; k0 < int(t.sw[w0].size()); ++k0) {
      if (rd.region_of_dart[w0][k0] >= 0) continue;
      Region r;
      int rid = int(rd.regions.size());
      Dart d{w0, k0};
      do {
        rd.region_of_dart[d.sw][d.slot] = rid;
        r.boundary.push_back(d);
        BranchEnd be = t.sw[d.sw][d.slot];
        Dart e = loc[be.branch][1 - be.end];
        if (e.slot >= 2) {
          CuspRef c{e.sw, e.slot - 2};
          rd.cusp_region[c.sw][c.idx] = rid;
          rd.cusp_index[c.sw][c.idx] = int(r.cusps.size());
          r.cusps.push_back(c);
          r.cusp_after.push_back(int(r.boundary.size()) - 1);
        }
        d = Dart{e.sw, t.ccw(e.sw, e.slot)};
      } while (!(d == Dart{w0, k0}));
      if (r.cusps.empty()) {
        r.edges.push_back(r.boundary);
      } else {
        int n = int(r.boundary.size());
        for (size_t i = 0; i < r.cusps.size(); ++i) {
          int from = (r.cusp_after[(i + r.cusps.size() - 1) % r.cusps.size()] + 1) % n;
          int to = r.cusp_after[i];
          std::vector<Dart> edge;
          for (int j = from;; j = (j + 1) % n) {
            edge.push_back(r.boundary[j]);
            if (j == to) break;
          }
          r.edges.push_back(std::move(edge));
        }
      }
      rd.regions.push_back(std::move(r));
    }
  for (const auto& c : t.puncture_cusps)
    if (c.sw >= 0 && c.sw < s && c.idx >= 0 && c.idx < int(rd.cusp_region[c.sw].size()))
      rd.regions[rd.cusp_region[c.sw][c.idx]].punctured = true;
  return rd;
}

bool connected(const TrainTrack& t) {
  int s = t.num_switches();
  if (s == 0) return false;
  std::vector<int> parent(static_cast<size_t>(s));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto loc = t.locate();
  for (const auto& l : loc) parent[find(l[0].sw)] = find(l[1].sw);
  for (int w = 0; w < s; ++w)
    if (find(w) != find(0)) return false;
  return true;
}

int computed_genus(const TrainTrack& t, int num_regions) {
  int chi = t.num_switches() - t.num_branches() + num_regions;
  return (2 - chi) / 2;
}

namespace {

struct FillingCheck {
  bool ok = true;
  int genus = 0;
  std::vector<std::string> notes;
};

FillingCheck check_filling(const TrainTrack& t, const RegionData& rd) {
  FillingCheck f;
  if (!connected(t)) {
    f.ok = false;
    f.notes.push_back("track is not connected");
  }
  int chi = t.num_switches() - t.num_branches() + int(rd.regions.size());
  f.genus = (2 - chi) / 2;
  if (chi % 2 != 0 || f.genus != t.genus) {
    f.ok = false;
    f.notes.push_back("computed genus " + std::to_string(f.genus) + " differs from declared genus " +
                      std::to_string(t.genus));
  }
  for (const auto& c : t.puncture_cusps)
    if (c.sw < 0 || c.sw >= t.num_switches() || c.idx < 0 || c.idx >= int(rd.cusp_region[c.sw].size())) {
      f.ok = false;
      f.notes.push_back("puncture references a missing cusp");
      return f;
    }
  std::vector<int> pcount(rd.regions.size(), 0);
  for (const auto& c : t.puncture_cusps) ++pcount[rd.cusp_region[c.sw][c.idx]];
  int punctured = 0;
  for (size_t i = 0; i < rd.regions.size(); ++i) {
    int k = rd.regions[i].cusp_count();
    if (pcount[i] > 1) {
      f.ok = false;
      f.notes.push_back("region " + std::to_string(i) + " carries more than one puncture");
    }
    if (pcount[i] > 0) ++punctured;
    bool good = pcount[i] > 0 ? k >= 1 : k >= 3;
    if (!good) {
      f.ok = false;
      f.notes.push_back("region " + std::to_string(i) + " has " + std::to_string(k) + " cusps" +
                        (pcount[i] ? " (punctured)" : ""));
    }
  }
  if (punctured != t.punctures) {
    f.ok = false;
    f.notes.push_back("found " + std::to_string(punctured) + " punctured regions, declared " +
                      std::to_string(t.punctures));
  }
  return f;
}

}  // namespace

bool is_filling(const TrainTrack& t) { return check_filling(t, regions(t)).ok; }

bool switch_conditions_hold(const TrainTrack& t, const Measure& m) {
  if (int(m.w.size()) != t.num_branches()) domain_error("DimensionMismatch", "measure size differs from branch count");
  for (const auto& x : m.w)
    if (!x.field().same(m.field)) domain_error("FieldMismatch", "measure entries from different fields");
  for (const auto& s : t.sw) {
    NFElement sum = m.field.zero();
    for (size_t k = 1; k < s.size(); ++k) sum = sum + m.w[s[k].branch];
    if (sum != m.w[s[0].branch]) return false;
  }
  return true;
}

bool check_measure(const TrainTrack& t, const Measure& m) {
  if (!switch_conditions_hold(t, m)) return false;
  for (const auto& x : m.w)
    if (x.sign() < 0) return false;
  return true;
}

std::optional<std::vector<Q>> positive_rational_measure(const TrainTrack& t) {
  int l = t.num_branches(), s = t.num_switches();
  int nv = 2 * l + 1;  // mu, slack, t
  std::vector<std::vector<Q>> A;
  std::vector<Q> b;
  for (int w = 0; w < s; ++w) {
    std::vector<Q> row(static_cast<size_t>(nv));
    row[t.sw[w][0].branch] += 1;
    for (size_t k = 1; k < t.sw[w].size(); ++k) row[t.sw[w][k].branch] -= 1;
    A.push_back(row);
    b.push_back(0);
  }
  std::vector<Q> sum(static_cast<size_t>(nv));
  for (int i = 0; i < l; ++i) sum[i] = 1;
  A.push_back(sum);
  b.push_back(1);
  for (int i = 0; i < l; ++i) {
    std::vector<Q> row(static_cast<size_t>(nv));
    row[i] = 1;
    row[l + i] = -1;
    row[2 * l] = -1;
    A.push_back(row);
    b.push_back(0);
  }
  std::vector<Q> c(static_cast<size_t>(nv));
  c[2 * l] = 1;
  auto res = lp_maximize(A, b, c);
  if (!res || res->value <= 0) return std::nullopt;
  return std::vector<Q>(res->x.begin(), res->x.begin() + l);
}

ValidationReport validate(const TrainTrack& t, const std::optional<Measure>& m) {
  ValidationReport r;
  r.s = t.num_switches();
  r.l = t.num_branches();
  r.generic = t.generic();
  if (!r.generic) r.notes.push_back("some switch is not trivalent");
  r.connected = connected(t);
  auto rd = regions(t);
  r.kappa = int(rd.regions.size());
  auto fc = check_filling(t, rd);
  r.filling = fc.ok;
  r.genus = fc.genus;
  for (auto& n : fc.notes) r.notes.push_back(n);
  if (m) {
    r.has_measure = true;
    r.switch_conditions = switch_conditions_hold(t, *m);
    if (!r.switch_conditions) r.notes.push_back("measure violates a switch condition");
    for (int b = 0; b < r.l; ++b)
      if (m->w[b].sign() <= 0) {
        r.positive = false;
        r.notes.push_back("weight of branch " + t.branch_names[b] + " is not positive");
      }
  }
  r.recurrent = positive_rational_measure(t).has_value();
  if (!r.recurrent) r.notes.push_back("no positive measure satisfies the switch conditions");
  return r;
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  auto flag = [&](const char* k, bool v) { os << k << " = " << (v ? "true" : "false") << "\n"; };
  flag("generic", generic);
  flag("connected", connected);
  flag("filling", filling);
  if (has_measure) {
    flag("switch_conditions", switch_conditions);
    flag("positive", positive);
  } else {
    os << "switch_conditions = n/a\npositive = n/a\n";
  }
  flag("recurrent", recurrent);
  os << "genus = " << genus << "\ns = " << s << "\nl = " << l << "\nkappa = " << kappa << "\n";
  for (const auto& n : notes) os << "# " << n << "\n";
  os << "ok = " << (ok() ? "true" : "false") << "\n";
  return os.str();
}

// ---- parsing ----

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  input_error("ParseError", "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

}  // namespace

ParsedTrack parse_track(const std::string& text) {
  ParsedTrack out;
  TrainTrack& t = out.track;
  std::map<std::string, int> bidx, sidx;
  bool have_surface = false;
  std::optional<NumberField> field;
  std::vector<std::optional<NFElement>> weights;
  std::vector<std::pair<int, std::string>> measure_lines, puncture_lines;
  std::vector<std::array<int, 2>> used;  // per branch end: count
  std::istringstream is(text);
  std::string raw;
  int ln = 0;
  struct PendingSwitch {
    int line;
    std::string name;
    std::vector<std::pair<std::string, std::string>> kv;
    std::vector<int> cols;
  };
  std::vector<PendingSwitch> pending;
  while (std::getline(is, raw)) {
    ++ln;
    std::string line = raw.substr(0, raw.find('#'));
    std::string s = trim(line);
    if (s.empty()) continue;
    int col = int(line.find_first_not_of(" \t")) + 1;
    auto words = split_ws(s);
    const std::string& kw = words[0];
    if (kw == "surface") {
      if (have_surface) parse_fail(ln, col, "duplicate surface header");
      have_surface = true;
      bool g = false, p = false;
      for (size_t i = 1; i < words.size(); ++i) {
        auto eq = words[i].find('=');
        if (eq == std::string::npos) parse_fail(ln, col, "expected key=value in surface header");
        std::string k = words[i].substr(0, eq), v = words[i].substr(eq + 1);
        Q q;
        try {
          q = parse_rational(v);
        } catch (const Error&) {
          parse_fail(ln, col, "bad integer '" + v + "'");
        }
        if (q.get_den() != 1 || q < 0) parse_fail(ln, col, "bad integer '" + v + "'");
        if (k == "genus") {
          t.genus = int(q.get_num().get_si());
          g = true;
        } else if (k == "punctures") {
          t.punctures = int(q.get_num().get_si());
          p = true;
        } else {
          parse_fail(ln, col, "unknown surface key '" + k + "'");
        }
      }
      if (!g || !p) parse_fail(ln, col, "surface header needs genus= and punctures=");
    } else if (kw == "branch") {
      if (words.size() != 2) parse_fail(ln, col, "expected 'branch <name>'");
      if (bidx.count(words[1])) parse_fail(ln, col, "duplicate branch '" + words[1] + "'");
      bidx[words[1]] = t.num_branches();
      t.branch_names.push_back(words[1]);
    } else if (kw == "switch") {
      size_t colon = s.find(':');
      if (colon == std::string::npos) parse_fail(ln, col, "expected 'switch <name>: ...'");
      PendingSwitch ps;
      ps.line = ln;
      ps.name = trim(s.substr(6, colon - 6));
      if (ps.name.empty() || ps.name.find(' ') != std::string::npos) parse_fail(ln, col, "bad switch name");
      if (sidx.count(ps.name)) parse_fail(ln, col, "duplicate switch '" + ps.name + "'");
      sidx[ps.name] = int(pending.size());
      size_t pos = colon + 1;
      for (const auto& w : split_ws(s.substr(colon + 1))) {
        size_t at = s.find(w, pos);
        pos = at + w.size();
        auto eq = w.find('=');
        if (eq == std::string::npos) parse_fail(ln, col + int(at), "expected slot=branch.end");
        ps.kv.emplace_back(w.substr(0, eq), w.substr(eq + 1));
        ps.cols.push_back(col + int(at));
      }
      pending.push_back(std::move(ps));
    } else if (kw == "field") {
      if (field) parse_fail(ln, col, "duplicate field line");
      try {
        field = NumberField::parse_declaration(s);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Input) parse_fail(ln, col, e.what());
        throw;
      }
    } else if (kw == "measure") {
      measure_lines.emplace_back(ln, s);
    } else if (kw == "puncture") {
      puncture_lines.emplace_back(ln, s);
    } else {
      parse_fail(ln, col, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_surface) parse_fail(1, 1, "missing surface header");
  used.assign(t.branch_names.size(), {0, 0});
  for (const auto& ps : pending) {
    std::vector<BranchEnd> slots(1);
    bool large = false, left = false, right = false;
    std::vector<BranchEnd> mids;
    BranchEnd l_end, r_end;
    for (size_t i = 0; i < ps.kv.size(); ++i) {
      const auto& [k, v] = ps.kv[i];
      auto dot = v.rfind('.');
      if (dot == std::string::npos) parse_fail(ps.line, ps.cols[i], "expected <branch>.<0|1>");
      std::string bn = v.substr(0, dot), en = v.substr(dot + 1);
      if (!bidx.count(bn)) parse_fail(ps.line, ps.cols[i], "unknown branch '" + bn + "'");
      if (en != "0" && en != "1") parse_fail(ps.line, ps.cols[i], "branch end must be 0 or 1");
      BranchEnd be{bidx[bn], en == "1" ? 1 : 0};
      if (++used[be.branch][be.end] > 1)
        input_error("SlotReuse", "line " + std::to_string(ps.line) + ": branch end " + v + " used twice");
      if (k == "large") {
        if (large) parse_fail(ps.line, ps.cols[i], "duplicate large slot");
        large = true;
        slots[0] = be;
      } else if (k == "small_left") {
        if (left) parse_fail(ps.line, ps.cols[i], "duplicate small_left slot");
        left = true;
        l_end = be;
      } else if (k == "small_right") {
        if (right) parse_fail(ps.line, ps.cols[i], "duplicate small_right slot");
        right = true;
        r_end = be;
      } else if (k == "small_mid") {
        mids.push_back(be);
      } else {
        parse_fail(ps.line, ps.cols[i], "unknown slot '" + k + "'");
      }
    }
    if (!large || !left || !right) parse_fail(ps.line, 1, "switch needs large, small_left and small_right");
    slots.push_back(l_end);
    for (auto& m : mids) slots.push_back(m);
    slots.push_back(r_end);
    t.sw.push_back(std::move(slots));
    t.switch_names.push_back(ps.name);
  }
  for (size_t b = 0; b < used.size(); ++b)
    for (int e = 0; e < 2; ++e)
      if (used[b][e] == 0)
        input_error("DanglingBranchEnd", "branch end " + t.branch_names[b] + "." + std::to_string(e) +
                                             " is not attached to any switch");
  if (t.num_branches() == 0) parse_fail(1, 1, "no branches");
  for (const auto& [pl, s] : puncture_lines) {
    const std::string prefix = "puncture in region containing cusp";
    if (s.rfind(prefix, 0) != 0) parse_fail(pl, 1, "expected 'puncture in region containing cusp <switch>'");
    std::string name = trim(s.substr(prefix.size()));
    int idx = 0;
    auto dot = name.rfind('.');
    if (dot != std::string::npos && !sidx.count(name)) {
      Q q = parse_rational(name.substr(dot + 1));
      idx = int(q.get_num().get_si());
      name = name.substr(0, dot);
    }
    if (!sidx.count(name)) parse_fail(pl, 1, "unknown switch '" + name + "'");
    t.puncture_cusps.push_back(CuspRef{sidx[name], idx});
  }
  if (!measure_lines.empty()) {
    NumberField F = field ? *field : NumberField::rationals();
    weights.assign(t.branch_names.size(), std::nullopt);
    for (const auto& [ml, s] : measure_lines) {
      auto eq = s.find('=');
      if (eq == std::string::npos) parse_fail(ml, 1, "expected 'measure <branch> = <element>'");
      std::string bn = trim(s.substr(7, eq - 7));
      if (!bidx.count(bn)) parse_fail(ml, 1, "unknown branch '" + bn + "'");
      std::string lit = trim(s.substr(eq + 1));
      if (!lit.empty() && lit.front() != '(') lit = "(" + lit + ")";
      if (weights[bidx[bn]]) parse_fail(ml, 1, "duplicate measure for '" + bn + "'");
      try {
        weights[bidx[bn]] = NFElement::parse(F, lit);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Input) parse_fail(ml, int(eq) + 2, e.what());
        throw;
      }
    }
    Measure m;
    m.field = F;
    for (size_t b = 0; b < weights.size(); ++b) {
      if (!weights[b]) parse_fail(ln, 1, "measure missing for branch '" + t.branch_names[b] + "'");
      m.w.push_back(*weights[b]);
    }
    out.measure = std::move(m);
  } else if (field) {
    // a field without weights is allowed and ignored
  }
  return out;
}

std::string write_track(const TrainTrack& t, const std::optional<Measure>& m) {
  std::ostringstream os;
  os << "surface genus=" << t.genus << " punctures=" << t.punctures << "\n";
  for (const auto& b : t.branch_names) os << "branch " << b << "\n";
  auto be = [&](const BranchEnd& x) { return t.branch_names[x.branch] + "." + std::to_string(x.end); };
  for (int w = 0; w < t.num_switches(); ++w) {
    const auto& s = t.sw[w];
    os << "switch " << t.switch_names[w] << ": large=" << be(s[0]) << " small_left=" << be(s[1]);
    for (size_t k = 2; k + 1 < s.size(); ++k) os << " small_mid=" << be(s[k]);
    os << " small_right=" << be(s.back()) << "\n";
  }
  for (const auto& c : t.puncture_cusps) {
    os << "puncture in region containing cusp " << t.switch_names[c.sw];
    if (c.idx) os << "." << c.idx;
    os << "\n";
  }
  if (m) {
    os << m->field.declaration() << "\n";
    for (int b = 0; b < t.num_branches(); ++b) os << "measure " << t.branch_names[b] << " = " << m->w[b].str() << "\n";
  }
  return os.str();
}

// ---- dual triangulation ----

DualTriangulation dual_triangulation(const TrainTrack& t) {
  if (!t.generic() || !is_filling(t)) domain_error("NotFilling", "dual triangulation needs a generic filling track");
  auto rd = regions(t);
  DualTriangulation d;
  d.num_vertices = int(rd.regions.size());
  d.num_edges = t.num_branches();
  const int order[3] = {0, 2, 1};
  for (int w = 0; w < t.num_switches(); ++w) {
    std::array<int, 3> tri{}, cv{};
    for (int k = 0; k < 3; ++k) {
      tri[k] = t.sw[w][order[k]].branch;
      cv[k] = rd.region_of_dart[w][order[(k + 1) % 3]];
    }
    d.tri.push_back(tri);
    d.corner_vertex.push_back(cv);
  }
  return d;
}

DualTriangulation whitehead_flip(const DualTriangulation& d, int e) {
  int t1 = -1, p1 = -1, t2 = -1, p2 = -1;
  for (int i = 0; i < int(d.tri.size()); ++i)
    for (int k = 0; k < 3; ++k)
      if (d.tri[i][k] == e) {
        if (t1 < 0) {
          t1 = i;
          p1 = k;
        } else {
          t2 = i;
          p2 = k;
        }
      }
  if (t1 < 0 || t2 < 0 || t1 == t2) domain_error("NotFlippable", "edge is not shared by two distinct triangles");
  auto rot = [&](int ti, int p, std::array<int, 3>& tr, std::array<int, 3>& cv) {
    for (int k = 0; k < 3; ++k) {
      tr[k] = d.tri[ti][(p + k) % 3];
      cv[k] = d.corner_vertex[ti][(p + k) % 3];
    }
  };
  std::array<int, 3> a, ca, b, cb;
  rot(t1, p1, a, ca);
  rot(t2, p2, b, cb);
  // a = (e, x1, y1) corners (V0, V1, V2); b = (e, x2, y2) corners (V2, V3, V0)
  int x1 = a[1], y1 = a[2], x2 = b[1], y2 = b[2];
  int V0 = ca[0], V1 = ca[1], V2 = ca[2], V3 = cb[1];
  DualTriangulation r = d;
  r.tri[t1] = {e, y1, x2};
  r.corner_vertex[t1] = {V1, V2, V3};
  r.tri[t2] = {e, y2, x1};
  r.corner_vertex[t2] = {V3, V0, V1};
  return r;
}

namespace {

std::vector<int> tri_code(const DualTriangulation& d, int t0, int r0) {
  int nt = int(d.tri.size());
  std::vector<std::vector<std::pair<int, int>>> occ(static_cast<size_t>(d.num_edges));
  for (int i = 0; i < nt; ++i)
    for (int k = 0; k < 3; ++k) occ[d.tri[i][k]].emplace_back(i, k);
  std::vector<int> tlab(size_t(nt), -1), trot(size_t(nt), 0), elab(size_t(d.num_edges), -1);
  std::vector<int> order{t0};
  tlab[t0] = 0;
  trot[t0] = r0;
  std::vector<int> code;
  int ne = 0;
  for (size_t q = 0; q < order.size(); ++q) {
    int ti = order[q];
    for (int k = 0; k < 3; ++k) {
      int pos = (trot[ti] + k) % 3;
      int e = d.tri[ti][pos];
      if (elab[e] < 0) elab[e] = ne++;
      code.push_back(elab[e]);
      for (auto [oj, ok] : occ[e]) {
        if (oj == ti && ok == pos) continue;
        if (tlab[oj] < 0) {
          tlab[oj] = int(order.size());
          trot[oj] = ok;
          order.push_back(oj);
        }
        code.push_back(tlab[oj]);
        code.push_back((ok - trot[oj] + 3) % 3);
      }
    }
  }
  if (int(order.size()) != nt) code.push_back(-1);
  return code;
}

}  // namespace

bool isomorphic(const DualTriangulation& a, const DualTriangulation& b) {
  if (a.tri.size() != b.tri.size() || a.num_edges != b.num_edges || a.num_vertices != b.num_vertices) return false;
  if (a.tri.empty()) return true;
  auto ca = tri_code(a, 0, 0);
  for (int i = 0; i < int(b.tri.size()); ++i)
    for (int r = 0; r < 3; ++r)
      if (tri_code(b, i, r) == ca) return true;
  return false;
}

// ---- diagonal extensions ----

namespace {

void polygon_triangulations(int a, int b, std::vector<std::vector<std::pair<int, int>>>& out) {
  if (b - a < 2) {
    out.push_back({});
    return;
  }
  for (int c = a + 1; c < b; ++c) {
    std::vector<std::vector<std::pair<int, int>>> left, right;
    polygon_triangulations(a, c, left);
    polygon_triangulations(c, b, right);
    for (const auto& L : left)
      for (const auto& R : right) {
        std::vector<std::pair<int, int>> v;
        if (c - a >= 2) v.emplace_back(a, c);
        if (b - c >= 2) v.emplace_back(c, b);
        v.insert(v.end(), L.begin(), L.end());
        v.insert(v.end(), R.begin(), R.end());
        std::sort(v.begin(), v.end());
        out.push_back(std::move(v));
      }
  }
}

Z catalan(int n) {
  Z c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

std::vector<DiagonalExtension> diagonal_extensions(const TrainTrack& t) {
  auto rd = regions(t);
  std::vector<DiagonalExtension> result{DiagonalExtension{}};
  for (int r = 0; r < int(rd.regions.size()); ++r) {
    int k = rd.regions[r].cusp_count();
    if (k < 4) continue;
    std::vector<std::vector<std::pair<int, int>>> tris;
    polygon_triangulations(0, k - 1, tris);
    std::vector<DiagonalExtension> next;
    for (const auto& base : result)
      for (const auto& tr : tris) {
        DiagonalExtension e = base;
        for (auto [i, j] : tr) e.diags.push_back(Diagonal{r, i, j});
        next.push_back(std::move(e));
      }
    result = std::move(next);
  }
  return result;
}

Z extension_count(const TrainTrack& t) {
  Z c = 1;
  for (const auto& r : regions(t).regions)
    if (r.cusp_count() >= 3) c *= catalan(r.cusp_count() - 2);
  return c;
}

bool is_maximal_extension(const TrainTrack& t, const DiagonalExtension& e) {
  auto rd = regions(t);
  std::vector<std::vector<Diagonal>> per(rd.regions.size());
  for (const auto& d : e.diags) {
    if (d.region < 0 || d.region >= int(rd.regions.size())) return false;
    int k = rd.regions[d.region].cusp_count();
    if (!(0 <= d.i && d.i < d.j && d.j < k)) return false;
    if (d.j - d.i < 2 || (d.i == 0 && d.j == k - 1)) return false;
    per[d.region].push_back(d);
  }
  for (size_t r = 0; r < per.size(); ++r) {
    int k = rd.regions[r].cusp_count();
    if (int(per[r].size()) != std::max(0, k - 3)) return false;
    for (size_t a = 0; a < per[r].size(); ++a)
      for (size_t b = a + 1; b < per[r].size(); ++b) {
        const auto &x = per[r][a], &y = per[r][b];
        if (x.i == y.i && x.j == y.j) return false;
        bool cross = (x.i < y.i && y.i < x.j && x.j < y.j) || (y.i < x.i && x.i < y.j && y.j < x.j);
        if (cross) return false;
      }
  }
  return true;
}

// ---- canonical form ----

namespace {

std::vector<int> track_code(const TrainTrack& t, const std::vector<std::array<Dart, 2>>& loc, const RegionData& rd,
                            int w0, Labeling& L) {
  int s = t.num_switches(), l = t.num_branches();
  L.sw.assign(size_t(s), -1);
  L.br.assign(size_t(l), -1);
  L.first_end.assign(size_t(l), 0);
  std::vector<int> order{w0};
  L.sw[w0] = 0;
  std::vector<int> code;
  int nb = 0;
  for (size_t q = 0; q < order.size(); ++q) {
    int w = order[q];
    code.push_back(int(t.sw[w].size()));
    for (int k = 0; k < int(t.sw[w].size()); ++k) {
      BranchEnd be = t.sw[w][k];
      Dart o = loc[be.branch][1 - be.end];
      if (L.br[be.branch] < 0) {
        L.br[be.branch] = nb++;
        L.first_end[be.branch] = be.end;
      }
      if (L.sw[o.sw] < 0) {
        L.sw[o.sw] = int(order.size());
        order.push_back(o.sw);
      }
      code.push_back(L.br[be.branch]);
      code.push_back(be.end == L.first_end[be.branch] ? 0 : 1);
      code.push_back(L.sw[o.sw]);
      code.push_back(o.slot);
    }
  }
  if (int(order.size()) != s) code.push_back(-1);
  std::vector<std::pair<int, int>> punct;
  for (size_t r = 0; r < rd.regions.size(); ++r) {
    if (!rd.regions[r].punctured) continue;
    std::pair<int, int> best{1 << 30, 0};
    for (const auto& c : rd.regions[r].cusps) best = std::min(best, std::make_pair(L.sw[c.sw], c.idx));
    punct.push_back(best);
  }
  std::sort(punct.begin(), punct.end());
  code.push_back(int(punct.size()));
  for (auto [a, b] : punct) {
    code.push_back(a);
    code.push_back(b);
  }
  return code;
}

}  // namespace

CanonicalForm canonical_form(const TrainTrack& t) {
  auto loc = t.locate();
  auto rd = regions(t);
  CanonicalForm cf;
  for (int w = 0; w < t.num_switches(); ++w) {
    Labeling L;
    auto code = track_code(t, loc, rd, w, L);
    if (cf.labelings.empty() || code < cf.code) {
      cf.code = std::move(code);
      cf.labelings = {std::move(L)};
    } else if (code == cf.code) {
      cf.labelings.push_back(std::move(L));
    }
  }
  return cf;
}

TrainTrack relabel(const TrainTrack& t, const Labeling& L) {
  TrainTrack r;
  r.genus = t.genus;
  r.punctures = t.punctures;
  r.branch_names.resize(t.branch_names.size());
  r.switch_names.resize(t.switch_names.size());
  r.sw.resize(t.sw.size());
  for (int b = 0; b < t.num_branches(); ++b) r.branch_names[L.br[b]] = t.branch_names[b];
  for (int w = 0; w < t.num_switches(); ++w) {
    r.switch_names[L.sw[w]] = t.switch_names[w];
    for (const auto& be : t.sw[w])
      r.sw[L.sw[w]].push_back(BranchEnd{L.br[be.branch], be.end == L.first_end[be.branch] ? 0 : 1});
  }
  for (const auto& c : t.puncture_cusps) r.puncture_cusps.push_back(CuspRef{L.sw[c.sw], c.idx});
  return r;
}

}  // namespace ttk
