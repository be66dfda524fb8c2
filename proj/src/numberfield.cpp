#include "ttk/numberfield.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace ttk {

namespace {

QPoly as_poly(const std::vector<Q>& c) {
  QPoly p(c);
  poly::normalize(p);
  return p;
}

std::vector<Q> reduce(const QPoly& p, const NumberField& f) {
  QPoly r = poly::mod(p, f.minpoly());
  std::vector<Q> c(static_cast<size_t>(f.degree()));
  for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
  return c;
}

// s with s*a = gcd(a, b) mod b
QPoly xgcd_inverse(const QPoly& a, const QPoly& b, QPoly& g) {
  QPoly r0 = b, r1 = a, s0, s1{Q(1)};
  while (!r1.empty()) {
    QPoly r;
    QPoly q = poly::divmod(r0, r1, r);
    QPoly s = poly::sub(s0, poly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Q lead = r0.back();
  g = poly::scale(r0, 1 / lead);
  return poly::scale(s0, 1 / lead);
}

}  // namespace

NumberField NumberField::create(const std::vector<Z>& minpoly, const Q& lo, const Q& hi) {
  std::vector<Z> c(minpoly);
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.size() < 2 || c.back() != 1) domain_error("NonMonic", "minimal polynomial must be monic of degree >= 1");
  if (!(lo < hi)) domain_error("NotIsolating", "interval must satisfy lo < hi");
  auto d = std::make_shared<Data>();
  d->coeffs = c;
  d->minpoly = poly::from_ints(c);
  d->lo = lo;
  d->hi = hi;
  d->sturm = poly::sturm_sequence(d->minpoly);
  int cnt = poly::sturm_count(d->sturm, lo, hi);
  if (cnt != 1) domain_error("NotIsolating", "interval contains " + std::to_string(cnt) + " roots");
  Q a = lo, b = hi;
  const Q width = Q(1, 1 << 30);
  while (b - a > width) {
    Q mid = (a + b) / 2;
    if (poly::eval(d->minpoly, mid) == 0) {
      a = b = mid;
      break;
    }
    if (poly::sturm_count(d->sturm, a, mid) == 1)
      b = mid;
    else
      a = mid;
  }
  if (a != b && poly::eval(d->minpoly, b) == 0) a = b;
  d->narrow_lo = a;
  d->narrow_hi = b;
  NumberField f;
  f.d_ = std::move(d);
  return f;
}

NumberField NumberField::rationals() { return create({Z(0), Z(1)}, Q(-1), Q(1)); }

bool NumberField::same(const NumberField& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  if (d_->coeffs != o.d_->coeffs) return false;
  Q a = std::max(d_->lo, o.d_->lo), b = std::min(d_->hi, o.d_->hi);
  return a < b && poly::sturm_count(d_->sturm, a, b) == 1;
}

double NumberField::approx() const {
  Q lo = d_->narrow_lo, hi = d_->narrow_hi;
  const Q eps(1, Z(1) << 64);
  while (Q(hi - lo) > eps) {
    Q mid = (lo + hi) / 2;
    if (poly::sturm_count(d_->sturm, lo, mid) == 1) hi = mid;
    else lo = mid;
  }
  return Q((lo + hi) / 2).get_d();
}

NFElement NumberField::zero() const { return element({}); }
NFElement NumberField::one() const { return element({Q(1)}); }
NFElement NumberField::gen() const { return element({Q(0), Q(1)}); }
NFElement NumberField::from_rational(const Q& q) const { return element({q}); }
NFElement NumberField::element(std::vector<Q> coeffs) const { return NFElement(*this, std::move(coeffs)); }

std::string NumberField::declaration() const {
  std::ostringstream os;
  os << "field minpoly =";
  for (const auto& c : d_->coeffs) os << " " << c.get_str();
  os << " root in (" << d_->lo.get_str() << ", " << d_->hi.get_str() << ")";
  return os.str();
}

NumberField NumberField::parse_declaration(const std::string& line) {
  std::string s = trim(line);
  const std::string head = "field";
  if (s.rfind(head, 0) != 0) input_error("ParseError", "expected 'field'");
  size_t eq = s.find('=');
  size_t root = s.find("root in");
  if (eq == std::string::npos || root == std::string::npos || root < eq)
    input_error("ParseError", "field syntax: field minpoly = <coeffs> root in (<lo>, <hi>)");
  if (trim(s.substr(head.size(), eq - head.size())) != "minpoly") input_error("ParseError", "expected 'minpoly'");
  std::vector<Z> coeffs;
  for (const auto& w : split_ws(s.substr(eq + 1, root - eq - 1))) {
    Q q = parse_rational(w);
    if (q.get_den() != 1) input_error("ParseError", "minpoly coefficients must be integers");
    coeffs.push_back(q.get_num());
  }
  std::string iv = trim(s.substr(root + 7));
  if (iv.size() < 5 || iv.front() != '(' || iv.back() != ')') input_error("ParseError", "bad root interval");
  iv = iv.substr(1, iv.size() - 2);
  size_t comma = iv.find(',');
  if (comma == std::string::npos) input_error("ParseError", "bad root interval");
  return create(coeffs, parse_rational(iv.substr(0, comma)), parse_rational(iv.substr(comma + 1)));
}

NFElement::NFElement(NumberField f, std::vector<Q> c) : f_(std::move(f)) {
  for (auto& x : c) x.canonicalize();
  c_ = reduce(as_poly(c), f_);
}

bool NFElement::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

int NFElement::sign() const {
  if (is_zero()) return 0;
  const auto& d = *f_.d_;
  QPoly a = as_poly(c_);
  Q lo = d.narrow_lo, hi = d.narrow_hi;
  if (lo == hi) return sgn(poly::eval(a, lo));
  QPoly g = poly::gcd(a, d.minpoly);
  if (poly::degree(g) >= 1 && poly::sturm_count(poly::sturm_sequence(g), lo, hi) >= 1) return 0;
  for (;;) {
    Q vlo, vhi;
    poly::interval_eval(a, lo, hi, vlo, vhi);
    if (vlo > 0) return 1;
    if (vhi < 0) return -1;
    Q mid = (lo + hi) / 2;
    if (poly::eval(d.minpoly, mid) == 0) return sgn(poly::eval(a, mid));
    if (poly::sturm_count(d.sturm, lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
}

double NFElement::approx() const {
  double x = f_.approx(), r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].get_d();
  return r;
}

std::string NFElement::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].get_str();
  os << ")";
  return os.str();
}

NFElement NFElement::parse(const NumberField& f, const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') input_error("ParseError", "element literal must be (c0, c1, ...)");
  s = s.substr(1, s.size() - 2);
  std::vector<Q> c;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) c.push_back(parse_rational(part));
  if (int(c.size()) > f.degree()) input_error("ParseError", "element has more coordinates than the field degree");
  return NFElement(f, c);
}

static void check_same(const NFElement& a, const NFElement& b) {
  if (!a.field().same(b.field())) domain_error("FieldMismatch", "elements from different fields");
}

NFElement operator+(const NFElement& a, const NFElement& b) {
  check_same(a, b);
  std::vector<Q> c(a.c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  NFElement r;
  r.f_ = a.f_;
  r.c_ = std::move(c);
  return r;
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  check_same(a, b);
  std::vector<Q> c(a.c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  NFElement r;
  r.f_ = a.f_;
  r.c_ = std::move(c);
  return r;
}

NFElement NFElement::operator-() const {
  NFElement r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  check_same(a, b);
  return NFElement(a.f_, poly::mul(as_poly(a.c_), as_poly(b.c_)));
}

NFElement NFElement::inverse() const {
  if (is_zero()) domain_error("DivisionByZero", "inverse of zero");
  QPoly g;
  QPoly s = xgcd_inverse(as_poly(c_), f_.minpoly(), g);
  if (poly::degree(g) > 0) {
    if (sign() == 0) domain_error("DivisionByZero", "element vanishes at the root");
    domain_error("ReducibleMinpoly", "element is a zero divisor modulo the minimal polynomial");
  }
  return NFElement(f_, s);
}

NFElement operator/(const NFElement& a, const NFElement& b) {
  check_same(a, b);
  return a * b.inverse();
}

bool NFElement::operator==(const NFElement& o) const { return f_.same(o.f_) && c_ == o.c_; }

int compare(const NFElement& a, const NFElement& b) { return (a - b).sign(); }

QPoly charpoly(const IntMatrix& m) {
  int n = m.rows;
  std::vector<Q> A(size_t(n) * n), Mk(size_t(n) * n, Q(0)), tmp(size_t(n) * n);
  for (int i = 0; i < n * n; ++i) A[i] = m.a[i];
  QPoly c(size_t(n) + 1);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    // Mk = A*Mk + c[n-k+1] I
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Q s = 0;
        for (int t = 0; t < n; ++t) s += A[i * n + t] * Mk[t * n + j];
        tmp[i * n + j] = s;
      }
    for (int i = 0; i < n; ++i) tmp[i * n + i] += c[n - k + 1];
    Mk.swap(tmp);
    Q tr = 0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) tr += A[i * n + t] * Mk[t * n + i];
    c[n - k] = -tr / k;
  }
  return c;
}

namespace {

bool is_primitive(const IntMatrix& m) {
  int n = m.rows;
  std::vector<char> b(size_t(n) * n), p(size_t(n) * n), t(size_t(n) * n);
  for (int i = 0; i < n * n; ++i) b[i] = p[i] = m.a[i] > 0;
  for (int k = 1; k <= n * n; ++k) {
    if (std::all_of(p.begin(), p.end(), [](char x) { return x != 0; })) return true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        char s = 0;
        for (int r = 0; r < n && !s; ++r) s = p[i * n + r] && b[r * n + j];
        t[i * n + j] = s;
      }
    p.swap(t);
  }
  return false;
}

// Smallest factor of g (monic, integral, square-free) having the isolated root, found from
// numerical roots and confirmed by exact division; falls back to g itself.
QPoly dominant_factor(const QPoly& g, const Q& lo, const Q& hi) {
  int d = poly::degree(g);
  if (d <= 1) return g;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -g[i].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  using C = std::complex<long double>;
  std::vector<C> roots;
  for (int i = 0; i < d; ++i) roots.emplace_back(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
  long double target = Q((lo + hi) / 2).get_d();
  size_t li = 0;
  for (size_t i = 1; i < roots.size(); ++i)
    if (std::abs(roots[i] - C(target)) < std::abs(roots[li] - C(target))) li = i;
  C lambda(roots[li].real(), 0);
  std::vector<std::vector<C>> groups;
  std::vector<char> used(roots.size(), 0);
  used[li] = 1;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = 1;
    if (std::abs(roots[i].imag()) < 1e-9L) {
      groups.push_back({C(roots[i].real(), 0)});
      continue;
    }
    size_t best = roots.size();
    for (size_t j = 0; j < roots.size(); ++j)
      if (!used[j] && (best == roots.size() || std::abs(roots[j] - std::conj(roots[i])) <
                                                   std::abs(roots[best] - std::conj(roots[i]))))
        best = j;
    if (best == roots.size()) return g;
    used[best] = 1;
    groups.push_back({roots[i], std::conj(roots[i])});
  }
  size_t ng = groups.size();
  if (ng > 22) return g;
  auto sturm_ok = [&](const QPoly& h) { return poly::sturm_count(poly::sturm_sequence(h), lo, hi) == 1; };
  std::vector<size_t> order(size_t(1) << ng);
  for (size_t mask = 0; mask < order.size(); ++mask) order[mask] = mask;
  auto deg_of = [&](size_t mask) {
    int s = 1;
    for (size_t k = 0; k < ng; ++k)
      if (mask >> k & 1) s += int(groups[k].size());
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return deg_of(a) < deg_of(b); });
  for (size_t mask : order) {
    if (deg_of(mask) >= d) break;
    std::vector<C> h{-lambda, C(1)};
    for (size_t k = 0; k < ng; ++k) {
      if (!(mask >> k & 1)) continue;
      for (const C& r : groups[k]) {
        std::vector<C> nh(h.size() + 1, C(0));
        for (size_t i = 0; i < h.size(); ++i) {
          nh[i + 1] += h[i];
          nh[i] -= r * h[i];
        }
        h.swap(nh);
      }
    }
    QPoly cand;
    bool near = true;
    for (const C& x : h) {
      long double r = std::round(x.real());
      if (std::abs(x.real() - r) > 1e-3L * std::max(1.0L, std::abs(r)) || std::abs(x.imag()) > 1e-3L) {
        near = false;
        break;
      }
      cand.push_back(Q(Z(std::to_string(static_cast<long long>(r)))));
    }
    if (!near) continue;
    poly::normalize(cand);
    QPoly rem;
    poly::divmod(g, cand, rem);
    if (rem.empty() && sturm_ok(cand)) return cand;
  }
  return g;
}

}  // namespace

PFEigen pf_eigendata(const IntMatrix& m) {
  if (m.rows != m.cols || m.rows == 0) domain_error("NotPerronFrobenius", "matrix must be square and nonempty");
  for (const auto& x : m.a)
    if (x < 0) domain_error("NotPerronFrobenius", "matrix has a negative entry");
  if (!is_primitive(m)) domain_error("NotPerronFrobenius", "no power up to dimension^2 is positive");
  int n = m.rows;
  QPoly f = charpoly(m);
  QPoly rem;
  QPoly g = poly::divmod(f, poly::gcd(f, poly::derivative(f)), rem);
  auto seq = poly::sturm_sequence(g);
  Q hi = poly::root_bound(g), lo = -hi;
  while (poly::sturm_count(seq, lo, hi) != 1) {
    Q mid = (lo + hi) / 2;
    if (poly::sturm_count(seq, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  QPoly h = dominant_factor(g, lo, hi);
  for (;;) {
    std::vector<Z> hc;
    for (const auto& c : h) {
      if (c.get_den() != 1) internal_error("non-integral factor of the characteristic polynomial");
      hc.push_back(c.get_num());
    }
    NumberField F = NumberField::create(hc, lo, hi);
    NFElement lam = F.gen();
    std::vector<std::vector<NFElement>> A(size_t(n), std::vector<NFElement>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        A[i][j] = F.from_rational(Q(m(i, j)));
        if (i == j) A[i][j] = A[i][j] - lam;
      }
    bool restart = false;
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < n && r < n && !restart; ++c) {
      int p = -1;
      for (int i = r; i < n && p < 0; ++i) {
        if (A[i][c].is_zero()) continue;
        if (A[i][c].sign() == 0) {
          h = poly::gcd(h, as_poly(A[i][c].coeffs()));
          restart = true;
          break;
        }
        p = i;
      }
      if (restart || p < 0) continue;
      std::swap(A[r], A[p]);
      NFElement inv = A[r][c].inverse();
      for (int j = 0; j < n; ++j) A[r][j] = A[r][j] * inv;
      for (int i = 0; i < n; ++i) {
        if (i == r || A[i][c].is_zero()) continue;
        NFElement fct = A[i][c];
        for (int j = 0; j < n; ++j) A[i][j] = A[i][j] - fct * A[r][j];
      }
      pivcol.push_back(c);
      ++r;
    }
    if (restart) continue;
    if (r != n - 1) internal_error("dominant eigenvalue is not simple");
    int free = -1;
    for (int c = 0, k = 0; c < n; ++c) {
      if (k < int(pivcol.size()) && pivcol[k] == c)
        ++k;
      else
        free = c;
    }
    std::vector<NFElement> v(size_t(n), F.zero());
    v[free] = F.one();
    for (int i = 0; i < r; ++i) v[pivcol[i]] = -A[i][free];
    if (v[0].is_zero()) internal_error("Perron eigenvector has a zero first entry");
    NFElement inv0 = v[0].inverse();
    for (auto& x : v) {
      x = x * inv0;
      if (x.sign() <= 0) internal_error("Perron eigenvector is not positive");
    }
    return PFEigen{F, lam, v};
  }
}

}  // namespace ttk
