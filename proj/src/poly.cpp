#include "ttk/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ttk::poly {

void normalize(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return int(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

QPoly scale(const QPoly& a, const Q& c) {
  QPoly r(a);
  for (auto& x : r) x *= c;
  normalize(r);
  return r;
}

QPoly divmod(const QPoly& a, const QPoly& b, QPoly& rem) {
  if (b.empty()) domain_error("DivisionByZero", "polynomial division by zero");
  rem = a;
  normalize(rem);
  int db = degree(b);
  if (degree(rem) < db) return {};
  QPoly q(static_cast<size_t>(degree(rem) - db + 1));
  const Q& lead = b.back();
  while (degree(rem) >= db) {
    int shift = degree(rem) - db;
    Q c = rem.back() / lead;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    rem.pop_back();
    normalize(rem);
  }
  normalize(q);
  return q;
}

QPoly mod(const QPoly& a, const QPoly& b) {
  QPoly r;
  divmod(a, b, r);
  return r;
}

QPoly make_monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, 1 / a.back());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  normalize(x);
  normalize(y);
  while (!y.empty()) {
    QPoly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * int(i);
  normalize(r);
  return r;
}

Q eval(const QPoly& p, const Q& x) {
  Q r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

QPoly from_ints(const std::vector<Z>& c) {
  QPoly p(c.begin(), c.end());
  normalize(p);
  return p;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    QPoly r = mod(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    seq.push_back(scale(r, -1));
  }
  return seq;
}

namespace {
int variations(const std::vector<QPoly>& seq, const Q& x) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace

int sturm_count(const std::vector<QPoly>& seq, const Q& lo, const Q& hi) {
  return variations(seq, lo) - variations(seq, hi);
}

Q root_bound(const QPoly& p) {
  Q m = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Q c = abs(p[i] / p.back());
    if (c > m) m = c;
  }
  return m + 1;
}

void interval_eval(const QPoly& p, const Q& lo, const Q& hi, Q& out_lo, Q& out_hi) {
  out_lo = out_hi = 0;
  for (size_t i = p.size(); i-- > 0;) {
    Q c[4] = {out_lo * lo, out_lo * hi, out_hi * lo, out_hi * hi};
    Q mn = c[0], mx = c[0];
    for (int k = 1; k < 4; ++k) {
      if (c[k] < mn) mn = c[k];
      if (c[k] > mx) mx = c[k];
    }
    out_lo = mn + p[i];
    out_hi = mx + p[i];
  }
}

std::string format(const QPoly& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i].get_str();
  return os.str();
}

}  // namespace ttk::poly
