#include "ttk/support.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace ttk {

LaurentPoly LaurentPoly::one(int n) { return monomial(std::vector<int>(n, 0)); }

LaurentPoly LaurentPoly::monomial(std::vector<int> exps) {
  LaurentPoly p(int(exps.size()));
  p.terms_.push_back(std::move(exps));
  return p;
}

LaurentPoly LaurentPoly::variable(int n, int i) {
  std::vector<int> e(n, 0);
  e[i] = 1;
  return monomial(e);
}

void LaurentPoly::canon() {
  std::sort(terms_.begin(), terms_.end());
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < terms_.size();) {
    size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms_[i]);
    i = j;
  }
  terms_ = std::move(out);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (n_ != o.n_) domain_error("VarMismatch", "polynomials live in different rings");
  LaurentPoly r(n_);
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(r.terms_));
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (n_ != o.n_) domain_error("VarMismatch", "polynomials live in different rings");
  LaurentPoly r(n_);
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      std::vector<int> e(n_);
      for (int i = 0; i < n_; ++i) e[i] = a[i] + b[i];
      r.terms_.push_back(std::move(e));
    }
  r.canon();
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (terms_.size() != 1) domain_error("InvalidExpression", "only monomials have Laurent inverses");
    std::vector<int> e = terms_[0];
    for (auto& x : e) x *= k;
    return monomial(e);
  }
  LaurentPoly r = one(n_), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

int LaurentPoly::at_ones() const { return int(terms_.size() % 2); }

int LaurentPoly::partial_at_ones(int i) const {
  int s = 0;
  for (const auto& t : terms_) s ^= (t[i] & 1);
  return s;
}

LaurentPoly LaurentPoly::partial(int i) const {
  LaurentPoly r(n_);
  for (const auto& t : terms_)
    if (t[i] & 1) {
      auto e = t;
      e[i] -= 1;
      r.terms_.push_back(e);
    }
  r.canon();
  return r;
}

LaurentPoly LaurentPoly::normalized() const {
  if (terms_.empty()) return *this;
  std::vector<int> lo = terms_[0];
  for (const auto& t : terms_)
    for (int i = 0; i < n_; ++i) lo[i] = std::min(lo[i], t[i]);
  LaurentPoly r(n_);
  for (auto t : terms_) {
    for (int i = 0; i < n_; ++i) t[i] -= lo[i];
    r.terms_.push_back(t);
  }
  r.canon();
  return r;
}

LaurentPoly LaurentPoly::embed(int n_total, int shift) const {
  LaurentPoly r(n_total);
  for (const auto& t : terms_) {
    std::vector<int> e(n_total, 0);
    for (int i = 0; i < n_; ++i) e[shift + i] = t[i];
    r.terms_.push_back(e);
  }
  r.canon();
  return r;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (size_t k = 0; k < terms_.size(); ++k) {
    if (k) os << " + ";
    bool any = false;
    for (int i = 0; i < n_; ++i) {
      int e = terms_[k][i];
      if (e == 0) continue;
      if (any) os << "*";
      os << names[i];
      if (e != 1) os << "^" << e;
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) internal_error("division by zero polynomial");
  int n = a.n_vars();
  const auto& lb = b.terms().back();  // lex leading term
  LaurentPoly q(n), r = a;
  while (!r.is_zero()) {
    const auto& lr = r.terms().back();
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) {
      e[i] = lr[i] - lb[i];
      if (e[i] < 0) internal_error("inexact polynomial division");
    }
    auto t = LaurentPoly::monomial(e);
    q = q + t;
    r = r + t * b;
  }
  return q;
}

TwistedComplex TwistedComplex::zero(std::vector<std::string> vars, int N) {
  TwistedComplex c;
  int n = int(vars.size());
  c.vars = std::move(vars);
  c.N = N;
  c.d.assign(size_t(N) * N, LaurentPoly(n));
  return c;
}

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  LaurentPoly parse() {
    auto p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  const std::string& s_;
  const std::vector<std::string>& vars_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& m) { input_error("ParseError", "expression '" + s_ + "': " + m); }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  int n() const { return int(vars_.size()); }

  LaurentPoly expr() {
    eat('+');
    eat('-');
    LaurentPoly p = term();
    for (;;) {
      if (eat('+') || eat('-'))
        p = p + term();  // characteristic 2
      else
        return p;
    }
  }
  LaurentPoly term() {
    LaurentPoly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }
  LaurentPoly factor() {
    LaurentPoly p = primary();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("missing exponent");
      int e = std::stoi(s_.substr(st, i_ - st));
      try {
        p = p.pow(neg ? -e : e);
      } catch (const Error&) {
        fail("negative power of a non-monomial");
      }
    }
    return p;
  }
  LaurentPoly primary() {
    skip();
    if (eat('(')) {
      auto p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      int v = (s_[i_ - 1] - '0') & 1;
      return v ? LaurentPoly::one(n()) : LaurentPoly(n());
    }
    size_t st = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (st == i_) fail("expected a term");
    std::string name = s_.substr(st, i_ - st);
    for (int k = 0; k < n(); ++k)
      if (vars_[k] == name) return LaurentPoly::variable(n(), k);
    fail("unknown variable '" + name + "'");
  }
};

}  // namespace

LaurentPoly parse_laurent(const std::string& s, const std::vector<std::string>& vars) {
  return ExprParser(s, vars).parse();
}

TwistedComplex parse_complex(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::optional<std::vector<std::string>> vars;
  int N = -1;
  TwistedComplex c;
  int ln = 0;
  auto fail = [&](const std::string& m) { input_error("ParseError", "line " + std::to_string(ln) + ": " + m); };
  while (std::getline(is, line)) {
    ++ln;
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("ring", 0) == 0) {
      auto eq = line.find('=');
      if (eq == std::string::npos || trim(line.substr(4, eq - 4)) != "vars") fail("expected 'ring vars = ...'");
      std::vector<std::string> vs;
      std::string rest = line.substr(eq + 1);
      std::replace(rest.begin(), rest.end(), ',', ' ');
      for (auto& v : split_ws(rest)) {
        if (std::find(vs.begin(), vs.end(), v) != vs.end()) fail("duplicate variable " + v);
        vs.push_back(v);
      }
      vars = vs;
    } else if (line.rfind("rank", 0) == 0) {
      auto t = split_ws(line);
      if (t.size() != 2) fail("expected 'rank N'");
      try {
        N = std::stoi(t[1]);
      } catch (...) {
        fail("bad rank");
      }
      if (N < 0) fail("negative rank");
      if (!vars) fail("ring must precede rank");
      c = TwistedComplex::zero(*vars, N);
    } else if (line.rfind("d[", 0) == 0) {
      if (N < 0) fail("rank must precede entries");
      int i = -1, j = -1;
      char rest[2];
      if (std::sscanf(line.c_str(), "d[%d][%d] %1[=]", &i, &j, rest) != 3) fail("expected 'd[i][j] = expr'");
      if (i < 0 || j < 0 || i >= N || j >= N) fail("entry index out of range");
      c.at(i, j) = parse_laurent(line.substr(line.find('=') + 1), *vars);
    } else {
      fail("unrecognized line");
    }
  }
  if (N < 0) input_error("ParseError", "missing rank");
  return c;
}

std::string write_complex(const TwistedComplex& c) {
  std::ostringstream os;
  os << "ring vars =";
  for (size_t i = 0; i < c.vars.size(); ++i) os << (i ? ", " : " ") << c.vars[i];
  os << "\nrank " << c.N << "\n";
  for (int i = 0; i < c.N; ++i)
    for (int j = 0; j < c.N; ++j)
      if (!c.at(i, j).is_zero()) os << "d[" << i << "][" << j << "] = " << c.at(i, j).str(c.vars) << "\n";
  return os.str();
}

bool check_differential(const TwistedComplex& c) {
  int n = c.n_vars();
  for (int i = 0; i < c.N; ++i)
    for (int j = 0; j < c.N; ++j) {
      LaurentPoly s(n);
      for (int k = 0; k < c.N; ++k)
        if (!c.at(i, k).is_zero() && !c.at(k, j).is_zero()) s = s + c.at(i, k) * c.at(k, j);
      if (!s.is_zero()) return false;
    }
  return true;
}

LaurentPoly determinant(const std::vector<LaurentPoly>& m0, int n) {
  if (n == 0) internal_error("empty determinant");
  int nv = m0[0].n_vars();
  std::vector<LaurentPoly> m = m0;
  // shift every row by a monomial so all exponents are nonnegative
  for (int i = 0; i < n; ++i) {
    std::vector<int> lo(nv, 0);
    for (int j = 0; j < n; ++j)
      for (const auto& t : m[i * n + j].terms())
        for (int v = 0; v < nv; ++v) lo[v] = std::min(lo[v], t[v]);
    for (auto& x : lo) x = -x;
    auto sh = LaurentPoly::monomial(lo);
    for (int j = 0; j < n; ++j) m[i * n + j] = m[i * n + j] * sh;
  }
  LaurentPoly prev = LaurentPoly::one(nv);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k].is_zero()) {
      int r = k + 1;
      while (r < n && m[r * n + k].is_zero()) ++r;
      if (r == n) return LaurentPoly(nv);
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[r * n + j]);
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        auto num = m[k * n + k] * m[i * n + j] + m[i * n + k] * m[k * n + j];
        m[i * n + j] = exact_divide(num, prev);
      }
    prev = m[k * n + k];
  }
  return m[(n - 1) * n + (n - 1)].normalized();
}

namespace {

LaurentPoly cofactor_raw(const std::vector<LaurentPoly>& m, int n) {
  int nv = m[0].n_vars();
  if (n == 1) return m[0];
  LaurentPoly s(nv);
  for (int j = 0; j < n; ++j) {
    if (m[j].is_zero()) continue;
    std::vector<LaurentPoly> sub;
    for (int i = 1; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (k != j) sub.push_back(m[i * n + k]);
    s = s + m[j] * cofactor_raw(sub, n - 1);
  }
  return s;
}

}  // namespace

LaurentPoly determinant_cofactor(const std::vector<LaurentPoly>& m, int n) {
  if (n == 0) internal_error("empty determinant");
  return cofactor_raw(m, n).normalized();
}

namespace {

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int s) {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = s; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<LaurentPoly> minor_ideal(const TwistedComplex& c) {
  if (c.N % 2 != 0) domain_error("OddRank", "minor criterion needs even rank");
  int k = c.N / 2;
  if (k == 0) return {};
  std::vector<std::vector<int>> S;
  subsets(c.N, k, S);
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<LaurentPoly> out;
  std::vector<LaurentPoly> sub(size_t(k) * k);
  for (const auto& rows : S)
    for (const auto& cols : S) {
      bool zero_row = false;
      for (int a = 0; a < k && !zero_row; ++a) {
        bool all0 = true;
        for (int b = 0; b < k; ++b) {
          sub[a * k + b] = c.at(rows[a], cols[b]);
          if (!sub[a * k + b].is_zero()) all0 = false;
        }
        zero_row = all0;
      }
      if (zero_row) continue;
      auto det = determinant(sub, k);
      if (det.is_zero() || !seen.insert(det.terms()).second) continue;
      out.push_back(det);
    }
  return out;
}

TangentResult support_dim_tangent(const std::vector<LaurentPoly>& gens, int n) {
  TangentResult r;
  for (const auto& g : gens)
    if (g.at_ones() != 0) domain_error("NotInSupport", "a minor does not vanish at the all-ones point");
  std::vector<std::vector<int>> J;
  for (const auto& g : gens) {
    std::vector<int> row(n);
    bool any = false;
    for (int i = 0; i < n; ++i) {
      row[i] = g.partial_at_ones(i);
      any = any || row[i];
    }
    if (!any && !g.is_zero()) r.degenerate = true;
    J.push_back(row);
  }
  int rank = 0;
  for (int col = 0; col < n && rank < int(J.size()); ++col) {
    int p = rank;
    while (p < int(J.size()) && !J[p][col]) ++p;
    if (p == int(J.size())) continue;
    std::swap(J[p], J[rank]);
    for (int i = 0; i < int(J.size()); ++i)
      if (i != rank && J[i][col])
        for (int j = 0; j < n; ++j) J[i][j] ^= J[rank][j];
    ++rank;
  }
  r.rank = rank;
  r.dim = n - rank;
  return r;
}

TangentResult support_dim_tangent(const TwistedComplex& c) { return support_dim_tangent(minor_ideal(c), c.n_vars()); }

GF2k::GF2k(int kk) : k(kk) {
  static const unsigned table[17] = {0,      0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11D,
                                     0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};
  if (k < 1 || k > 16) domain_error("BudgetExceeded", "field degree must be between 1 and 16");
  mod = table[k];
}

unsigned GF2k::mul(unsigned a, unsigned b) const {
  unsigned r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> k & 1) a ^= mod;
  }
  return r;
}

unsigned GF2k::pow(unsigned a, long e) const {
  long q1 = long(size()) - 1;
  e %= q1;
  if (e < 0) e += q1;
  unsigned r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PointCount support_dim_pointcount(const std::vector<LaurentPoly>& gens, int n, int k_max) {
  if (k_max < 2) input_error("InvalidArgument", "k_max must be at least 2");
  const double budget_log2 = 24;
  if (double(k_max) * n > budget_log2) domain_error("BudgetExceeded", "2^(k·n) exceeds the enumeration budget 2^24");
  PointCount pc;
  for (int k = 1; k <= k_max; ++k) {
    GF2k F(k);
    unsigned q1 = F.size() - 1;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= q1;
    int workers = int(std::min<long>(thread_count(), total));
    std::vector<long> partial(workers, 0);
    auto work = [&](int wi) {
      std::vector<unsigned> pt(n, 1);
      for (long idx = wi; idx < total; idx += workers) {
        long r = idx;
        for (int i = 0; i < n; ++i) {
          pt[i] = 1 + unsigned(r % q1);
          r /= q1;
        }
        bool zero = true;
        for (const auto& g : gens) {
          unsigned v = 0;
          for (const auto& t : g.terms()) {
            unsigned m = 1;
            for (int i = 0; i < n; ++i)
              if (t[i]) m = F.mul(m, F.pow(pt[i], t[i]));
            v ^= m;
          }
          if (v) {
            zero = false;
            break;
          }
        }
        if (zero) ++partial[wi];
      }
    };
    std::vector<std::thread> pool;
    for (int wi = 1; wi < workers; ++wi) pool.emplace_back(work, wi);
    work(0);
    for (auto& th : pool) th.join();
    Z count = 0;
    for (long x : partial) count += x;
    pc.counts.push_back(count);
  }
  const Z& a = pc.counts[k_max - 1];
  const Z& b = pc.counts[k_max - 2];
  if (a > 0 && b > 0) {
    int d1 = int(std::lround(std::log2(a.get_d()) / k_max));
    int d2 = int(std::lround(std::log2(a.get_d() / b.get_d())));
    if (d1 == d2) pc.dim = d1;
  }
  return pc;
}

PointCount support_dim_pointcount(const TwistedComplex& c, int k_max) {
  return support_dim_pointcount(minor_ideal(c), c.n_vars(), k_max);
}

TwistedComplex tensor_complex(const TwistedComplex& a, const TwistedComplex& b) {
  std::vector<std::string> vars = a.vars;
  for (const auto& v : b.vars) {
    if (std::find(vars.begin(), vars.end(), v) != vars.end())
      domain_error("VarMismatch", "tensor factors must use disjoint variables");
    vars.push_back(v);
  }
  int n = int(vars.size());
  TwistedComplex c = TwistedComplex::zero(vars, a.N * b.N);
  for (int i1 = 0; i1 < a.N; ++i1)
    for (int j1 = 0; j1 < a.N; ++j1) {
      if (a.at(i1, j1).is_zero()) continue;
      auto e = a.at(i1, j1).embed(n, 0);
      for (int k = 0; k < b.N; ++k) c.at(i1 * b.N + k, j1 * b.N + k) = c.at(i1 * b.N + k, j1 * b.N + k) + e;
    }
  for (int i2 = 0; i2 < b.N; ++i2)
    for (int j2 = 0; j2 < b.N; ++j2) {
      if (b.at(i2, j2).is_zero()) continue;
      auto e = b.at(i2, j2).embed(n, a.n_vars());
      for (int k = 0; k < a.N; ++k) c.at(k * b.N + i2, k * b.N + j2) = c.at(k * b.N + i2, k * b.N + j2) + e;
    }
  return c;
}

TwistedComplex stabilize(const TwistedComplex& c) {
  TwistedComplex s = TwistedComplex::zero(c.vars, c.N + 2);
  for (int i = 0; i < c.N; ++i)
    for (int j = 0; j < c.N; ++j) s.at(i, j) = c.at(i, j);
  s.at(c.N, c.N + 1) = LaurentPoly::one(c.n_vars());
  return s;
}

TwistedComplex change_basis(const TwistedComplex& c, const std::vector<std::vector<int>>& P) {
  int N = c.N;
  if (int(P.size()) != N) domain_error("DimensionMismatch", "basis change has the wrong size");
  std::vector<std::vector<int>> A = P, inv(N, std::vector<int>(N, 0));
  for (int i = 0; i < N; ++i) {
    if (int(A[i].size()) != N) domain_error("DimensionMismatch", "basis change is not square");
    inv[i][i] = 1;
    for (auto& x : A[i]) x &= 1;
  }
  for (int col = 0; col < N; ++col) {
    int p = col;
    while (p < N && !A[p][col]) ++p;
    if (p == N) domain_error("Singular", "basis change is not invertible over F2");
    std::swap(A[p], A[col]);
    std::swap(inv[p], inv[col]);
    for (int i = 0; i < N; ++i)
      if (i != col && A[i][col])
        for (int j = 0; j < N; ++j) {
          A[i][j] ^= A[col][j];
          inv[i][j] ^= inv[col][j];
        }
  }
  int n = c.n_vars();
  TwistedComplex t = TwistedComplex::zero(c.vars, N), r = TwistedComplex::zero(c.vars, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      LaurentPoly s(n);
      for (int k = 0; k < N; ++k)
        if (P[i][k] & 1) s = s + c.at(k, j);
      t.at(i, j) = s;
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      LaurentPoly s(n);
      for (int k = 0; k < N; ++k)
        if (inv[k][j]) s = s + t.at(i, k);
      r.at(i, j) = s;
    }
  return r;
}

SupportReport support(const TwistedComplex& c, int k_max, SupportMethod method) {
  SupportReport rep;
  rep.n_vars = c.n_vars();
  rep.N = c.N;
  if (c.N % 2 != 0) {
    rep.odd_rank = true;
    rep.dim = rep.n_vars;
    return rep;
  }
  auto gens = minor_ideal(c);
  rep.minor_count = int(gens.size());
  if (method != SupportMethod::Points) {
    try {
      auto t = support_dim_tangent(gens, rep.n_vars);
      rep.dim_tangent = t.dim;
      rep.degenerate = t.degenerate;
    } catch (const Error& e) {
      if (e.code() != "NotInSupport") throw;
      rep.not_in_support = true;
    }
  }
  if (method != SupportMethod::Tangent) {
    auto p = support_dim_pointcount(gens, rep.n_vars, k_max);
    rep.dim_points = p.dim;
    rep.counts = p.counts;
  }
  if (rep.dim_tangent && rep.dim_points && *rep.dim_tangent != *rep.dim_points) {
    rep.agreement = false;
    if (!rep.degenerate)
      internal_error("tangent dimension " + std::to_string(*rep.dim_tangent) + " and point-count dimension " +
                     std::to_string(*rep.dim_points) + " disagree without degeneracy");
  }
  if (rep.dim_points && (rep.degenerate || !rep.dim_tangent))
    rep.dim = *rep.dim_points;
  else if (rep.dim_tangent)
    rep.dim = *rep.dim_tangent;
  else
    rep.dim = -1;
  return rep;
}

std::string SupportReport::str() const {
  std::ostringstream os;
  os << "vars         " << n_vars << "\n";
  os << "rank         " << N << "\n";
  if (odd_rank) {
    os << "parity       odd rank, support is the whole spectrum\n";
    os << "dim          " << dim << "\n";
    return os.str();
  }
  os << "minors       " << minor_count << "\n";
  os << "dim_tangent  " << (dim_tangent ? std::to_string(*dim_tangent) : not_in_support ? "not in support" : "-")
     << "\n";
  os << "dim_points   " << (dim_points ? std::to_string(*dim_points) : counts.empty() ? "-" : "inconclusive") << "\n";
  if (!counts.empty()) {
    os << "point_counts";
    for (const auto& x : counts) os << " " << x;
    os << "\n";
  }
  os << "degenerate   " << (degenerate ? "yes" : "no") << "\n";
  os << "agreement    " << (agreement ? "yes" : "no") << "\n";
  os << "dim          " << (dim >= 0 ? std::to_string(dim) : "inconclusive") << "\n";
  return os.str();
}

}  // namespace ttk
