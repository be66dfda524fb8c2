#include "ttk/splitting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ttk {

const char* case_name(SplitCase c) {
  switch (c) {
    case SplitCase::Left: return "Left";
    case SplitCase::Right: return "Right";
    default: return "Central";
  }
}

CarryingMatrix incidence_compose(const CarryingMatrix& a, const CarryingMatrix& b) {
  if (a.m.cols != b.m.rows) domain_error("ChainMismatch", "carrying matrices have incompatible shapes");
  if (a.source >= 0 && b.target >= 0 && a.source != b.target)
    domain_error("ChainMismatch", "source of the first carrying is not the target of the second");
  CarryingMatrix r;
  r.m = a.m * b.m;
  r.source = b.source;
  r.target = a.target;
  return r;
}

namespace {

struct LargeSite {
  int e, u, v;
  BranchEnd a, b, c, d, e0, e1;
};

LargeSite large_site(const TrainTrack& t, int branch) {
  if (branch < 0 || branch >= t.num_branches()) domain_error("NotLargeBranch", "no such branch");
  if (!t.generic()) domain_error("NotGeneric", "moves need a generic track");
  auto loc = t.locate();
  if (loc[branch][0].slot != 0 || loc[branch][1].slot != 0)
    domain_error("NotLargeBranch", "branch " + t.branch_names[branch] + " is not large");
  LargeSite s;
  s.e = branch;
  s.u = loc[branch][0].sw;
  s.v = loc[branch][1].sw;
  s.a = t.small_right(s.u);
  s.b = t.small_left(s.u);
  s.c = t.small_left(s.v);
  s.d = t.small_right(s.v);
  s.e0 = BranchEnd{branch, 0};
  s.e1 = BranchEnd{branch, 1};
  return s;
}

MoveResult identity_move(const TrainTrack& t) {
  MoveResult r;
  r.track = t;
  r.elem = IntMatrix::identity(t.num_branches());
  r.branch_map.resize(static_cast<size_t>(t.num_branches()));
  std::iota(r.branch_map.begin(), r.branch_map.end(), 0);
  r.switch_map.resize(static_cast<size_t>(t.num_switches()));
  std::iota(r.switch_map.begin(), r.switch_map.end(), 0);
  return r;
}

MoveResult central_split(const TrainTrack& t, const LargeSite& S) {
  int l = t.num_branches(), s = t.num_switches();
  auto loc = t.locate();
  // glue ends: a~c and b~d across the removed large branch
  std::map<std::pair<int, int>, BranchEnd> glue;
  auto key = [](BranchEnd x) { return std::make_pair(x.branch, x.end); };
  glue[key(S.a)] = S.c;
  glue[key(S.c)] = S.a;
  glue[key(S.b)] = S.d;
  glue[key(S.d)] = S.b;
  std::vector<int> chain_of(static_cast<size_t>(l), -1);
  struct Chain {
    std::vector<int> branches;
    BranchEnd start, finish;  // surviving ends (branch, end) at the two extremities
    int crossings = 0;
  };
  std::vector<Chain> chains;
  for (int b0 = 0; b0 < l; ++b0) {
    if (b0 == S.e || chain_of[b0] >= 0) continue;
    // walk backwards from end 0 to find an extremity
    BranchEnd cur{b0, 0};
    int guard = 0;
    while (glue.count(key(cur))) {
      BranchEnd nx = glue[key(cur)];
      cur = BranchEnd{nx.branch, 1 - nx.end};
      if (++guard > 2 * l) domain_error("ClosedLoop", "central split closes a branch into a loop");
    }
    Chain ch;
    ch.start = cur;
    BranchEnd at = cur;
    for (;;) {
      chain_of[at.branch] = int(chains.size());
      ch.branches.push_back(at.branch);
      BranchEnd far{at.branch, 1 - at.end};
      auto it = glue.find(key(far));
      if (it == glue.end()) {
        ch.finish = far;
        break;
      }
      ++ch.crossings;
      at = it->second;
    }
    chains.push_back(std::move(ch));
  }
  for (int b = 0; b < l; ++b)
    if (b != S.e && chain_of[b] < 0) domain_error("ClosedLoop", "central split closes a branch into a loop");
  // order chains by their smallest old branch id
  std::vector<int> order(chains.size());
  std::iota(order.begin(), order.end(), 0);
  auto minb = [&](int c) { return *std::min_element(chains[c].branches.begin(), chains[c].branches.end()); };
  std::sort(order.begin(), order.end(), [&](int x, int y) { return minb(x) < minb(y); });
  std::vector<int> new_id(chains.size());
  for (size_t i = 0; i < order.size(); ++i) new_id[order[i]] = int(i);
  MoveResult r;
  int nl = int(chains.size());
  r.branch_map.assign(static_cast<size_t>(l), -1);
  r.track.genus = t.genus;
  r.track.punctures = t.punctures;
  r.track.branch_names.resize(static_cast<size_t>(nl));
  r.elem = IntMatrix(l, nl);
  for (size_t c = 0; c < chains.size(); ++c) {
    int id = new_id[c];
    r.track.branch_names[id] = t.branch_names[minb(int(c))];
    for (int b : chains[c].branches) r.elem(b, id) += 1;
    r.elem(S.e, id) += chains[c].crossings;
    if (chains[c].branches.size() == 1) r.branch_map[chains[c].branches[0]] = id;
  }
  // new branch ends: chain start -> end 0, chain finish -> end 1
  std::map<std::pair<int, int>, BranchEnd> endmap;
  for (size_t c = 0; c < chains.size(); ++c) {
    endmap[key(chains[c].start)] = BranchEnd{new_id[c], 0};
    endmap[key(chains[c].finish)] = BranchEnd{new_id[c], 1};
  }
  r.switch_map.assign(static_cast<size_t>(s), -1);
  for (int w = 0; w < s; ++w) {
    if (w == S.u || w == S.v) continue;
    r.switch_map[w] = r.track.num_switches();
    r.track.switch_names.push_back(t.switch_names[w]);
    std::vector<BranchEnd> slots;
    for (const auto& x : t.sw[w]) slots.push_back(endmap.at(key(x)));
    r.track.sw.push_back(std::move(slots));
  }
  auto rd = regions(t);
  for (const auto& pc : t.puncture_cusps) {
    if (pc.sw != S.u && pc.sw != S.v) {
      r.track.puncture_cusps.push_back(CuspRef{r.switch_map[pc.sw], pc.idx});
      continue;
    }
    std::vector<int> cand_regions{rd.cusp_region[S.u][0], rd.cusp_region[S.v][0]};
    bool placed = false;
    for (int reg : cand_regions) {
      for (const auto& c : rd.regions[reg].cusps)
        if (c.sw != S.u && c.sw != S.v) {
          r.track.puncture_cusps.push_back(CuspRef{r.switch_map[c.sw], c.idx});
          placed = true;
          break;
        }
      if (placed) break;
    }
    if (!placed) domain_error("PunctureLost", "central split leaves a puncture without a cusp");
  }
  r.event = SplitEvent{S.e, SplitCase::Central};
  (void)loc;
  return r;
}

}  // namespace

MoveResult split_combinatorial(const TrainTrack& t, int branch, SplitCase c) {
  LargeSite S = large_site(t, branch);
  if (c == SplitCase::Central) return central_split(t, S);
  MoveResult r = identity_move(t);
  auto& sw = r.track.sw;
  if (c == SplitCase::Left) {
    sw[S.u] = {S.d, S.b, S.e0};
    sw[S.v] = {S.a, S.c, S.e1};
    r.elem(S.e, S.b.branch) += 1;
    r.elem(S.e, S.c.branch) += 1;
  } else {
    sw[S.u] = {S.c, S.e0, S.a};
    sw[S.v] = {S.b, S.e1, S.d};
    r.elem(S.e, S.a.branch) += 1;
    r.elem(S.e, S.d.branch) += 1;
  }
  r.event = SplitEvent{branch, c};
  return r;
}

SplitCase split_case(const TrainTrack& t, const Measure& m, int branch) {
  LargeSite S = large_site(t, branch);
  int cmp = compare(m.w[S.a.branch], m.w[S.c.branch]);
  return cmp > 0 ? SplitCase::Left : cmp < 0 ? SplitCase::Right : SplitCase::Central;
}

MoveResult split(const TrainTrack& t, const Measure& m, int branch) {
  if (!switch_conditions_hold(t, m)) domain_error("InvalidMeasure", "measure violates the switch conditions");
  LargeSite S = large_site(t, branch);
  SplitCase c = split_case(t, m, branch);
  MoveResult r = split_combinatorial(t, branch, c);
  Measure nm;
  nm.field = m.field;
  nm.w.assign(static_cast<size_t>(r.track.num_branches()), m.field.zero());
  if (c == SplitCase::Central) {
    for (int nb = 0; nb < r.track.num_branches(); ++nb) {
      // weight of a merged branch is the weight of any constituent
      for (int ob = 0; ob < t.num_branches(); ++ob)
        if (ob != S.e && r.elem(ob, nb) != 0) {
          nm.w[nb] = m.w[ob];
          break;
        }
    }
  } else {
    nm.w = m.w;
    nm.w[S.e] = c == SplitCase::Left ? m.w[S.a.branch] - m.w[S.c.branch] : m.w[S.c.branch] - m.w[S.a.branch];
  }
  r.measure = std::move(nm);
  return r;
}

namespace {

struct MixedSite {
  int f, u, v;
  bool f_left;  // f sits in u's small_left slot
  BranchEnd fu, fv, L, g, p, q;
};

MixedSite mixed_site(const TrainTrack& t, int branch) {
  if (branch < 0 || branch >= t.num_branches()) domain_error("NotShiftable", "no such branch");
  if (!t.generic()) domain_error("NotShiftable", "moves need a generic track");
  auto loc = t.locate();
  const auto& l0 = loc[branch][0];
  const auto& l1 = loc[branch][1];
  if ((l0.slot == 0) == (l1.slot == 0)) domain_error("NotShiftable", "branch " + t.branch_names[branch] + " is not mixed");
  MixedSite s;
  s.f = branch;
  int small_end = l0.slot == 0 ? 1 : 0;
  Dart du = loc[branch][small_end], dv = loc[branch][1 - small_end];
  if (du.sw == dv.sw) domain_error("NotShiftable", "branch is a loop at one switch");
  s.u = du.sw;
  s.v = dv.sw;
  s.f_left = du.slot == 1;
  s.fu = BranchEnd{branch, small_end};
  s.fv = BranchEnd{branch, 1 - small_end};
  s.L = t.large(s.u);
  s.g = s.f_left ? t.small_right(s.u) : t.small_left(s.u);
  s.p = t.small_left(s.v);
  s.q = t.small_right(s.v);
  return s;
}

}  // namespace

MoveResult shift(const TrainTrack& t, int branch) {
  MixedSite S = mixed_site(t, branch);
  MoveResult r = identity_move(t);
  auto& sw = r.track.sw;
  if (S.f_left) {
    sw[S.u] = {S.L, S.p, S.fu};
    sw[S.v] = {S.fv, S.q, S.g};
  } else {
    sw[S.u] = {S.L, S.fu, S.q};
    sw[S.v] = {S.fv, S.g, S.p};
  }
  r.elem(S.f, S.f) = 0;
  r.elem(S.f, S.p.branch) += 1;
  r.elem(S.f, S.q.branch) += 1;
  for (auto& pc : r.track.puncture_cusps) {
    if (pc.sw == S.u)
      pc.sw = S.v;
    else if (pc.sw == S.v)
      pc.sw = S.u;
  }
  r.event = SplitEvent{branch, SplitCase::Central};
  return r;
}

MoveResult shift(const TrainTrack& t, const Measure& m, int branch) {
  if (!switch_conditions_hold(t, m)) domain_error("InvalidMeasure", "measure violates the switch conditions");
  MixedSite S = mixed_site(t, branch);
  MoveResult r = shift(t, branch);
  Measure nm = m;
  nm.w[S.f] = S.f_left ? m.w[S.q.branch] + m.w[S.g.branch] : m.w[S.g.branch] + m.w[S.p.branch];
  r.measure = std::move(nm);
  return r;
}

Folded fold(const TrainTrack& t, const Measure& m, const SplitEvent& ev) {
  if (ev.kase == SplitCase::Central) domain_error("NotFoldable", "a central split cannot be folded from weights");
  if (ev.branch < 0 || ev.branch >= t.num_branches() || !t.generic())
    domain_error("NotFoldable", "event does not match the track");
  auto loc = t.locate();
  Dart d0 = loc[ev.branch][0], d1 = loc[ev.branch][1];
  int u = d0.sw, v = d1.sw;
  int want = ev.kase == SplitCase::Left ? 2 : 1;
  if (u == v || d0.slot != want || d1.slot != want) domain_error("NotFoldable", "event does not match the track");
  Folded f;
  f.track = t;
  f.measure = m;
  BranchEnd e0{ev.branch, 0}, e1{ev.branch, 1};
  BranchEnd a, b, c, d;
  if (ev.kase == SplitCase::Left) {
    d = t.large(u);
    b = t.small_left(u);
    a = t.large(v);
    c = t.small_left(v);
  } else {
    c = t.large(u);
    a = t.small_right(u);
    b = t.large(v);
    d = t.small_right(v);
  }
  f.track.sw[u] = {e0, b, a};
  f.track.sw[v] = {e1, c, d};
  f.measure.w[ev.branch] = m.w[a.branch] + m.w[b.branch];
  return f;
}

MaximalSplit maximal_split(const TrainTrack& t, const Measure& m) {
  auto loc = t.locate();
  std::vector<int> large;
  for (int b = 0; b < t.num_branches(); ++b)
    if (loc[b][0].slot == 0 && loc[b][1].slot == 0) large.push_back(b);
  if (large.empty()) domain_error("NoLargeBranch", "track has no large branch");
  NFElement best = m.w[large[0]];
  for (int b : large)
    if (compare(m.w[b], best) > 0) best = m.w[b];
  if (best.sign() <= 0) domain_error("NoLargeBranch", "large branches carry no positive weight");
  std::vector<int> argmax;
  for (int b : large)
    if (m.w[b] == best) argmax.push_back(b);
  MaximalSplit res;
  res.track = t;
  res.measure = m;
  res.elem = IntMatrix::identity(t.num_branches());
  res.branch_map.resize(static_cast<size_t>(t.num_branches()));
  std::iota(res.branch_map.begin(), res.branch_map.end(), 0);
  for (int b : argmax) {
    int cur = res.branch_map[b];
    if (cur < 0) internal_error("split branch vanished during a maximal split");
    MoveResult r = split(res.track, res.measure, cur);
    res.events.push_back(r.event);
    res.elem = res.elem * r.elem;
    for (auto& x : res.branch_map)
      if (x >= 0) x = r.branch_map[x];
    res.track = std::move(r.track);
    res.measure = std::move(*r.measure);
  }
  return res;
}

std::string projective_key(const Measure& m, const Labeling& L) {
  int l = int(m.w.size());
  std::vector<int> inv(static_cast<size_t>(l));
  for (int b = 0; b < l; ++b) inv[L.br[b]] = b;
  NFElement first = m.w[inv[0]];
  NFElement inv0 = first.is_zero() ? m.field.one() : first.inverse();
  std::string s;
  for (int k = 0; k < l; ++k) s += (m.w[inv[k]] * inv0).str() + ";";
  return s;
}

namespace {

struct StateKey {
  std::string key;
  Labeling labeling;
};

StateKey state_key(const TrainTrack& t, const Measure& m) {
  CanonicalForm cf = canonical_form(t);
  StateKey best;
  bool have = false;
  for (const auto& L : cf.labelings) {
    std::string pk = projective_key(m, L);
    if (!have || pk < best.key) {
      best.key = pk;
      best.labeling = L;
      have = true;
    }
  }
  std::string code;
  for (int x : cf.code) code += std::to_string(x) + ",";
  best.key = code + "|" + best.key;
  return best;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = int(i);
  return r;
}

}  // namespace

AgolCycle find_agol_cycle(const TrainTrack& t, const Measure& m, int max_iters) {
  if (!switch_conditions_hold(t, m)) domain_error("InvalidMeasure", "measure violates the switch conditions");
  for (const auto& x : m.w)
    if (x.sign() <= 0) domain_error("InvalidMeasure", "measure must be positive");
  std::vector<TrainTrack> tracks{t};
  std::vector<Measure> measures{m};
  std::vector<IntMatrix> elems;
  std::vector<std::vector<SplitEvent>> events;
  std::vector<StateKey> keys{state_key(t, m)};
  std::map<std::string, std::vector<int>> seen;
  seen[keys[0].key].push_back(0);
  for (int step = 1; step <= max_iters; ++step) {
    MaximalSplit ms;
    try {
      ms = maximal_split(tracks.back(), measures.back());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Domain || (e.code() != "ClosedLoop" && e.code() != "PunctureLost" && e.code() != "NoLargeBranch")) throw;
      domain_error("NoCycleWithinBudget", "splitting sequence ended at step " + std::to_string(step) + " (" + e.what() + ")");
    }
    tracks.push_back(ms.track);
    measures.push_back(ms.measure);
    elems.push_back(ms.elem);
    events.push_back(ms.events);
    keys.push_back(state_key(ms.track, ms.measure));
    int j = step;
    auto& prev = seen[keys[j].key];
    for (int i : prev) {
      const Labeling &Li = keys[i].labeling, &Lj = keys[j].labeling;
      auto inv_sw = inverse_perm(Li.sw), inv_br = inverse_perm(Li.br);
      AgolCycle c;
      c.iso_sw.resize(Lj.sw.size());
      c.iso_br.resize(Lj.br.size());
      c.iso_flip.resize(Lj.br.size());
      for (size_t w = 0; w < Lj.sw.size(); ++w) c.iso_sw[w] = inv_sw[Lj.sw[w]];
      for (size_t b = 0; b < Lj.br.size(); ++b) {
        int ib = inv_br[Lj.br[b]];
        c.iso_br[b] = ib;
        // end 0 of b has canonical end (0 == first_end ? 0 : 1); that canonical end in τ_i
        int canon = Lj.first_end[b] == 0 ? 0 : 1;
        int end_in_i = canon == 0 ? Li.first_end[ib] : 1 - Li.first_end[ib];
        c.iso_flip[b] = end_in_i;
      }
      const Measure &mi = measures[i], &mj = measures[j];
      NFElement lam = mi.w[c.iso_br[0]] / mj.w[0];
      bool prop = true;
      for (size_t b = 0; b < mj.w.size() && prop; ++b) prop = mi.w[c.iso_br[b]] == lam * mj.w[b];
      if (!prop) internal_error("state keys agree but measures are not proportional");
      if ((lam - m.field.one()).sign() <= 0) continue;
      c.n = i;
      c.m = j - i;
      c.input = t;
      c.input_measure = m;
      c.start = tracks[i];
      c.end = tracks[j];
      c.start_measure = mi;
      c.end_measure = mj;
      c.lambda = lam;
      c.events = events;
      IntMatrix P = IntMatrix::identity(tracks[i].num_branches());
      for (int k = i; k < j; ++k) P = P * elems[k];
      c.period_matrix = P;
      auto inv_iso = inverse_perm(c.iso_br);
      IntMatrix C(P.rows, P.cols);
      for (int r = 0; r < P.rows; ++r)
        for (int k = 0; k < P.cols; ++k) C(r, k) = P(r, inv_iso[k]);
      c.cycle_matrix = C;
      c.lambda_field = pf_eigendata(C).field;
      return c;
    }
    prev.push_back(j);
  }
  domain_error("NoCycleWithinBudget", "no periodic splitting found within " + std::to_string(max_iters) + " maximal splits");
}

std::vector<ReplayStep> replay_period(const AgolCycle& c) {
  std::vector<ReplayStep> out;
  TrainTrack cur = c.start;
  for (int k = c.n; k < c.n + c.m; ++k)
    for (const auto& ev : c.events[k]) {
      ReplayStep st;
      st.before = cur;
      st.event = ev;
      st.result = split_combinatorial(cur, ev.branch, ev.kase);
      cur = st.result.track;
      out.push_back(std::move(st));
    }
  return out;
}

std::string write_cycle(const AgolCycle& c) {
  std::ostringstream os;
  os << "# periodic splitting sequence\n";
  os << "n = " << c.n << "\n";
  os << "m = " << c.m << "\n";
  os << "lambda " << c.lambda_field.declaration() << "\n";
  os << "lambda_approx = " << c.lambda_field.approx() << "\n";
  os << "lambda_in_measure_field = " << c.lambda.str() << "\n";
  int step = 0;
  for (const auto& evs : c.events) {
    os << "step " << step << ":";
    for (const auto& e : evs) os << " " << e.branch << ":" << case_name(e.kase);
    os << "\n";
    ++step;
  }
  os << "iso_switch =";
  for (int x : c.iso_sw) os << " " << x;
  os << "\niso_branch =";
  for (int x : c.iso_br) os << " " << x;
  os << "\niso_flip =";
  for (int x : c.iso_flip) os << " " << x;
  os << "\n";
  auto mat = [&](const char* name, const IntMatrix& M) {
    os << name << " " << M.rows << " " << M.cols << "\n";
    for (int i = 0; i < M.rows; ++i) {
      os << "row";
      for (int j = 0; j < M.cols; ++j) os << " " << M(i, j).get_str();
      os << "\n";
    }
  };
  mat("period_matrix", c.period_matrix);
  mat("cycle_matrix", c.cycle_matrix);
  os << "begin input\n" << write_track(c.input, c.input_measure) << "end input\n";
  os << "begin start\n" << write_track(c.start, c.start_measure) << "end start\n";
  return os.str();
}

AgolCycle parse_cycle(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1, m = -1;
  std::vector<std::vector<SplitEvent>> events;
  std::vector<int> iso_sw, iso_br, iso_flip;
  std::string input_txt, start_txt;
  std::string* block = nullptr;
  bool have_input = false, have_start = false;
  auto ints = [](const std::string& s) {
    std::vector<int> v;
    for (const auto& w : split_ws(s)) {
      Q q = parse_rational(w);
      if (q.get_den() != 1) input_error("CorruptCycle", "expected integers");
      v.push_back(int(q.get_num().get_si()));
    }
    return v;
  };
  auto value = [](const std::string& s) {
    auto eq = s.find('=');
    if (eq == std::string::npos) input_error("CorruptCycle", "expected key = value in '" + s + "'");
    return trim(s.substr(eq + 1));
  };
  try {
    while (std::getline(is, line)) {
      std::string s = trim(line);
      if (block) {
        if (s == "end input" || s == "end start") {
          block = nullptr;
          continue;
        }
        *block += line + "\n";
        continue;
      }
      if (s.empty() || s[0] == '#') continue;
      if (s == "begin input") {
        block = &input_txt;
        have_input = true;
      } else if (s == "begin start") {
        block = &start_txt;
        have_start = true;
      } else if (s.rfind("n =", 0) == 0) {
        n = ints(value(s)).at(0);
      } else if (s.rfind("m =", 0) == 0) {
        m = ints(value(s)).at(0);
      } else if (s.rfind("step ", 0) == 0) {
        auto colon = s.find(':');
        if (colon == std::string::npos) input_error("CorruptCycle", "bad step line");
        std::vector<SplitEvent> evs;
        for (const auto& w : split_ws(s.substr(colon + 1))) {
          auto c2 = w.find(':');
          if (c2 == std::string::npos) input_error("CorruptCycle", "bad event '" + w + "'");
          SplitEvent e;
          e.branch = ints(w.substr(0, c2)).at(0);
          std::string k = w.substr(c2 + 1);
          if (k == "Left")
            e.kase = SplitCase::Left;
          else if (k == "Right")
            e.kase = SplitCase::Right;
          else if (k == "Central")
            e.kase = SplitCase::Central;
          else
            input_error("CorruptCycle", "bad split case '" + k + "'");
          evs.push_back(e);
        }
        events.push_back(std::move(evs));
      } else if (s.rfind("iso_switch", 0) == 0) {
        iso_sw = ints(value(s));
      } else if (s.rfind("iso_branch", 0) == 0) {
        iso_br = ints(value(s));
      } else if (s.rfind("iso_flip", 0) == 0) {
        iso_flip = ints(value(s));
      }
    }
  } catch (const std::out_of_range&) {
    input_error("CorruptCycle", "missing value");
  }
  if (block || !have_input || !have_start || n < 0 || m < 1 || int(events.size()) != n + m)
    input_error("CorruptCycle", "cycle file is incomplete");
  ParsedTrack in, st;
  try {
    in = parse_track(input_txt);
    st = parse_track(start_txt);
  } catch (const Error& e) {
    input_error("CorruptCycle", std::string("embedded track: ") + e.what());
  }
  if (!in.measure || !st.measure) input_error("CorruptCycle", "embedded tracks need measures");
  // recompute the period from τ_n and compare with the recorded data
  AgolCycle c;
  try {
    c = find_agol_cycle(st.track, *st.measure, m);
  } catch (const Error& e) {
    input_error("CorruptCycle", std::string("period does not replay: ") + e.what());
  }
  if (c.n != 0 || c.m != m) input_error("CorruptCycle", "recorded period does not match the replay");
  for (int k = 0; k < m; ++k)
    if (c.events[k] != events[n + k]) input_error("CorruptCycle", "recorded events do not match the replay");
  if (c.iso_sw != iso_sw || c.iso_br != iso_br || c.iso_flip != iso_flip)
    input_error("CorruptCycle", "recorded isomorphism does not match the replay");
  c.n = n;
  c.events = events;
  c.input = in.track;
  c.input_measure = *in.measure;
  return c;
}

}  // namespace ttk
