#include "ttk/bounds.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ttk {

Z r_of_psi(const IntMatrix& M) {
  Z best = 0;
  for (int j = 0; j < M.cols; ++j) {
    Z s = 0;
    for (int i = 0; i < M.rows; ++i) s += M(i, j);
    if (s > best) best = s;
  }
  return best;
}

int power_positive_K(const IntMatrix& M) {
  if (M.rows != M.cols || M.rows == 0) domain_error("NotPrimitive", "matrix must be square and nonempty");
  for (const auto& x : M.a)
    if (x < 0) domain_error("NotPrimitive", "matrix has a negative entry");
  int n = M.rows;
  int cap = (n - 1) * (n - 1) + 1;
  // work with the 0/1 pattern so powers stay small
  IntMatrix B(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B(i, j) = M(i, j) > 0 ? 1 : 0;
  IntMatrix P = B;
  for (int k = 1; k <= cap; ++k) {
    if (strictly_positive(P)) {
      if (!strictly_positive(matrix_power(M, k)) || !strictly_positive(matrix_power(M, k + 1)))
        internal_error("positivity pattern disagrees with the exact power");
      return k;
    }
    P = P * B;
    for (auto& x : P.a)
      if (x > 0) x = 1;
  }
  domain_error("NotPrimitive", "no power up to the Wielandt bound is positive");
}

namespace {

struct CuspFlow {
  std::vector<int> sigma;             // cusp switch of τ -> cusp switch it lands on after one application
  std::vector<std::vector<Z>> g;      // path of ψ(y) in τ, indexed by switch of y
};

CuspFlow cusp_flow(const AgolCycle& c) {
  const TrainTrack& t = c.start;
  int l = t.num_branches(), s = t.num_switches();
  if (!t.generic()) domain_error("NotAnExtension", "extension incidence needs a generic track");
  std::vector<std::vector<Z>> path(static_cast<size_t>(s), std::vector<Z>(static_cast<size_t>(l), Z(0)));
  IntMatrix prefix = IntMatrix::identity(l);
  TrainTrack cur = t;
  for (int k = c.n; k < c.n + c.m; ++k)
    for (const auto& ev : c.events[k]) {
      if (ev.kase == SplitCase::Central) domain_error("CentralInPeriod", "the period contains a central split");
      auto loc = cur.locate();
      int u = loc[ev.branch][0].sw, v = loc[ev.branch][1].sw;
      for (int w : {u, v})
        for (int r = 0; r < l; ++r) path[w][r] += prefix(r, ev.branch);
      MoveResult mv = split_combinatorial(cur, ev.branch, ev.kase);
      prefix = prefix * mv.elem;
      cur = mv.track;
    }
  CuspFlow f;
  f.sigma.resize(static_cast<size_t>(s));
  f.g.resize(static_cast<size_t>(s));
  std::vector<int> inv(static_cast<size_t>(s));
  for (int w = 0; w < s; ++w) inv[c.iso_sw[w]] = w;
  for (int w = 0; w < s; ++w) {
    f.sigma[w] = inv[w];
    f.g[w] = path[inv[w]];
  }
  return f;
}

std::vector<Z> mat_vec(const IntMatrix& M, const std::vector<Z>& v) {
  std::vector<Z> r(static_cast<size_t>(M.rows), Z(0));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) r[i] += M(i, j) * v[j];
  return r;
}

}  // namespace

ExtensionIncidence extension_incidence(const AgolCycle& c, const DiagonalExtension& ext, int K) {
  const TrainTrack& t = c.start;
  if (!is_maximal_extension(t, ext)) domain_error("NotAnExtension", "not a maximal diagonal extension of the track");
  if (K < 1) domain_error("NotAnExtension", "power must be positive");
  int l = t.num_branches(), s = t.num_switches();
  CuspFlow f = cusp_flow(c);
  // iterate the flow K times: path_{k+1}(y) = C path_k(y) + g(land_k(y))
  std::vector<std::vector<Z>> path(static_cast<size_t>(s));
  std::vector<int> land(static_cast<size_t>(s));
  for (int w = 0; w < s; ++w) {
    path[w] = f.g[w];
    land[w] = f.sigma[w];
  }
  for (int k = 1; k < K; ++k)
    for (int w = 0; w < s; ++w) {
      auto p = mat_vec(c.cycle_matrix, path[w]);
      for (int r = 0; r < l; ++r) p[r] += f.g[land[w]][r];
      path[w] = std::move(p);
      land[w] = f.sigma[land[w]];
    }
  auto rd = regions(t);
  ExtensionIncidence out;
  int D = int(ext.diags.size());
  out.N = IntMatrix(l + D, l + D);
  IntMatrix MK = matrix_power(c.cycle_matrix, K);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) out.N(i, j) = MK(i, j);
  for (int k = 0; k < D; ++k) {
    const Diagonal& d = ext.diags[k];
    const Region& R = rd.regions[d.region];
    int wi = R.cusps[d.i].sw, wj = R.cusps[d.j].sw;
    CuspRef ci{land[wi], 0}, cj{land[wj], 0};
    int reg = rd.cusp_region[ci.sw][0];
    if (reg != rd.cusp_region[cj.sw][0]) internal_error("diagonal endpoints land in different regions");
    int a = rd.cusp_index[ci.sw][0], b = rd.cusp_index[cj.sw][0];
    out.ext_prime.diags.push_back(Diagonal{reg, std::min(a, b), std::max(a, b)});
    for (int r = 0; r < l; ++r) out.N(r, l + k) = path[wi][r] + path[wj][r];
    out.N(l + k, l + k) = 1;
  }
  if (!is_maximal_extension(t, out.ext_prime)) internal_error("image extension is not maximal");
  return out;
}

ExtensionIncidence extension_incidence(const AgolCycle& c, const DiagonalExtension& ext) {
  return extension_incidence(c, ext, power_positive_K(c.cycle_matrix));
}

Z c_of_psi(const AgolCycle& c, int K) {
  Z best = 0;
  for (const auto& ext : diagonal_extensions(c.start)) {
    auto ei = extension_incidence(c, ext, K);
    Z mr = 0;
    for (int i = 0; i < ei.N.rows; ++i) {
      Z rs = 0;
      for (int j = 0; j < ei.N.cols; ++j) rs += ei.N(i, j);
      if (rs > mr) mr = rs;
    }
    Z v = 2 * mr + 1;
    if (v > best) best = v;
  }
  return best;
}

Z c_of_psi(const AgolCycle& c) { return c_of_psi(c, power_positive_K(c.cycle_matrix)); }

int diagonal_length(const TrainTrack& t, const Diagonal& d) {
  auto rd = regions(t);
  if (d.region < 0 || d.region >= int(rd.regions.size())) domain_error("NotAnExtension", "no such region");
  const Region& R = rd.regions[d.region];
  int k = R.cusp_count();
  if (!(0 <= d.i && d.i < d.j && d.j < k)) domain_error("NotAnExtension", "bad cusp positions");
  int fwd = 0, total = 0;
  for (int e = 0; e < k; ++e) total += int(R.edges[e].size());
  for (int e = d.i + 1; e <= d.j; ++e) fwd += int(R.edges[e].size());
  return std::min(fwd, total - fwd);
}

int c_prime(const TrainTrack& t) {
  auto rd = regions(t);
  int best = 0;
  for (int r = 0; r < int(rd.regions.size()); ++r) {
    int k = rd.regions[r].cusp_count();
    if (k < 4) continue;
    for (int i = 0; i < k; ++i)
      for (int j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        best = std::max(best, diagonal_length(t, Diagonal{r, i, j}));
      }
  }
  return best;
}

void check_normal(const DualTriangulation& d, const NormalCurve& g) {
  if (int(g.coords.size()) != d.num_edges) domain_error("DimensionMismatch", "coordinate count differs from edge count");
  for (const auto& x : g.coords)
    if (x < 0) domain_error("IncompatibleCoordinates", "negative normal coordinate");
  for (const auto& tr : d.tri) {
    const Z &a = g.coords[tr[0]], &b = g.coords[tr[1]], &c = g.coords[tr[2]];
    Z sum = a + b + c;
    if (a > b + c || b > a + c || c > a + b || mpz_odd_p(sum.get_mpz_t()))
      domain_error("IncompatibleCoordinates", "coordinates fail the triangle conditions");
  }
}

Z curve_length(const NormalCurve& g, const DualTriangulation& d) {
  check_normal(d, g);
  return curve_length(g);
}

Z curve_length(const NormalCurve& g) {
  Z s = 0;
  for (const auto& x : g.coords) {
    if (x < 0) domain_error("IncompatibleCoordinates", "negative normal coordinate");
    s += x;
  }
  return s;
}

Pushed push_curve(const IntMatrix& M, const NormalCurve& g) {
  if (M.cols != int(g.coords.size()) || M.rows != M.cols)
    domain_error("DimensionMismatch", "matrix and curve dimensions differ");
  Pushed p;
  p.v = mat_vec(M, g.coords);
  p.len_bound = 0;
  for (const auto& x : p.v) p.len_bound += x;
  p.int_bound = 0;
  for (size_t i = 0; i < p.v.size(); ++i) p.int_bound += g.coords[i] * p.v[i];
  Z r = r_of_psi(M), len = curve_length(g);
  if (p.len_bound > r * len || p.int_bound > r * len * len) internal_error("pushed curve exceeds the growth bound");
  return p;
}

Z f_psi(const Z& r, const Z& x) { return (1 + r) * x + r * x * x * x; }

Z m_of_psi(int g, const Z& r, const Z& c_total) {
  if (g < 0) domain_error("InvalidArgument", "genus must be nonnegative");
  Z x = c_total;
  for (int i = 0; i < 2 * g; ++i) x = f_psi(r, x);
  return x;
}

namespace {
Z zpow(const Z& b, long e) {
  Z r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}
}  // namespace

Z dd_bound(int g, int s, const Z& M) {
  if (g < 0 || s < 0) domain_error("InvalidArgument", "genus and switch count must be nonnegative");
  Z base = 20 * (g + s) - 18;
  return zpow(base, s) * (zpow(2 * M, 2 * g) + zpow(2 * M + 8, 2 * (g + s - 1)));
}

BoundReport compute_bounds(const AgolCycle& c) {
  BoundReport b;
  b.g = c.start.genus;
  b.s = c.start.num_switches();
  b.l = c.start.num_branches();
  b.r = r_of_psi(c.cycle_matrix);
  b.K = power_positive_K(c.cycle_matrix);
  b.c = c_of_psi(c, b.K);
  b.c_prime = c_prime(c.start);
  b.M_psi = m_of_psi(b.g, b.r, b.c + b.c_prime);
  b.dd_bound = dd_bound(b.g, b.s, b.M_psi);
  return b;
}

std::string BoundReport::str() const {
  std::ostringstream os;
  auto kv = [&](const char* k, const std::string& v) {
    os << k;
    for (size_t i = std::string(k).size(); i < 10; ++i) os << ' ';
    os << v << "\n";
  };
  kv("g", std::to_string(g));
  kv("s", std::to_string(s));
  kv("l", std::to_string(l));
  if (m) kv("m", std::to_string(*m));
  kv("r", r.get_str());
  kv("K", std::to_string(K));
  kv("c", c.get_str());
  kv("c_prime", c_prime.get_str());
  kv("M_psi", M_psi.get_str());
  kv("dd_bound", dd_bound.get_str());
  return os.str();
}

std::string BoundReport::structured() const {
  std::ostringstream os;
  os << "{\"g\": " << g << ", \"s\": " << s << ", \"l\": " << l;
  if (m) os << ", \"m\": " << *m;
  os << ", \"r\": \"" << r.get_str() << "\", \"K\": " << K << ", \"c\": \"" << c.get_str() << "\", \"c_prime\": \""
     << c_prime.get_str() << "\", \"M_psi\": \"" << M_psi.get_str() << "\", \"dd_bound\": \"" << dd_bound.get_str()
     << "\", \"c_choice_dependent\": true}";
  return os.str();
}

BoundReport parse_bound_report(const std::string& text) {
  BoundReport b;
  std::istringstream is(text);
  std::string line;
  std::set<std::string> seen;
  while (std::getline(is, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    auto t = split_ws(line);
    if (t.empty()) continue;
    if (t.size() != 2) input_error("ParseError", "bound report line '" + trim(line) + "'");
    const std::string &k = t[0], &v = t[1];
    try {
      if (k == "g") b.g = std::stoi(v);
      else if (k == "s") b.s = std::stoi(v);
      else if (k == "l") b.l = std::stoi(v);
      else if (k == "m") b.m = std::stoi(v);
      else if (k == "K") b.K = std::stoi(v);
      else if (k == "r") b.r = Z(v);
      else if (k == "c") b.c = Z(v);
      else if (k == "c_prime") b.c_prime = Z(v);
      else if (k == "M_psi") b.M_psi = Z(v);
      else if (k == "dd_bound") b.dd_bound = Z(v);
      else input_error("ParseError", "unknown bound report key " + k);
    } catch (const std::invalid_argument&) {
      input_error("ParseError", "bad value for " + k);
    }
    seen.insert(k);
  }
  for (const char* k : {"g", "s", "M_psi"})
    if (!seen.count(k)) input_error("ParseError", std::string("bound report lacks ") + k);
  if (!seen.count("dd_bound")) b.dd_bound = dd_bound(b.g, b.s, b.M_psi);
  if (b.dd_bound != dd_bound(b.g, b.s, b.M_psi)) input_error("ParseError", "dd_bound inconsistent with g, s, M_psi");
  return b;
}

}  // namespace ttk
