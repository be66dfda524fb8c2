#include "ttk/common.hpp"

#include <atomic>

#include <sstream>

namespace ttk {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int n) { g_threads = n < 1 ? 1 : n; }
int thread_count() { return g_threads; }


IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) domain_error("DimensionMismatch", "matrix product shapes differ");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Z& xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

std::vector<Z> operator*(const IntMatrix& m, const std::vector<Z>& v) {
  if (int(v.size()) != m.cols) domain_error("DimensionMismatch", "matrix-vector shapes differ");
  std::vector<Z> r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
  return r;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

IntMatrix matrix_power(const IntMatrix& m, int k) {
  IntMatrix r = IntMatrix::identity(m.rows), b = m;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool strictly_positive(const IntMatrix& m) {
  for (const auto& x : m.a)
    if (x <= 0) return false;
  return true;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

Q parse_rational(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) input_error("ParseError", "empty rational");
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  size_t slash = s.find('/');
  auto digits = [&](size_t b, size_t e) {
    if (b >= e) return false;
    for (size_t i = b; i < e; ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  size_t end_num = slash == std::string::npos ? s.size() : slash;
  if (!digits(start, end_num) || (slash != std::string::npos && !digits(slash + 1, s.size())))
    input_error("ParseError", "bad rational '" + s + "'");
  if (s[0] == '+') s = s.substr(1);
  Q q;
  if (slash != std::string::npos && Z(s.substr(s.find('/') + 1)) == 0)
    input_error("ParseError", "zero denominator in '" + s + "'");
  q.set_str(s, 10);
  q.canonicalize();
  return q;
}

}  // namespace ttk

namespace ttk {

Z determinant(const IntMatrix& m) {
  if (m.rows != m.cols) domain_error("DimensionMismatch", "determinant of a non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  Z prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Z trace(const IntMatrix& m) {
  Z t = 0;
  for (int i = 0; i < std::min(m.rows, m.cols); ++i) t += m(i, i);
  return t;
}

namespace {

void row_op(IntMatrix& M, int dst, int src, const Z& f) {
  for (int j = 0; j < M.cols; ++j) M(dst, j) += f * M(src, j);
}
void col_op(IntMatrix& M, int dst, int src, const Z& f) {
  for (int i = 0; i < M.rows; ++i) M(i, dst) += f * M(i, src);
}
void row_swap(IntMatrix& M, int x, int y) {
  for (int j = 0; j < M.cols; ++j) std::swap(M(x, j), M(y, j));
}
void col_swap(IntMatrix& M, int x, int y) {
  for (int i = 0; i < M.rows; ++i) std::swap(M(i, x), M(i, y));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  int m = A.rows, n = A.cols;
  SmithForm s;
  s.D = A;
  s.U = s.Uinv = IntMatrix::identity(m);
  s.V = s.Vinv = IntMatrix::identity(n);
  IntMatrix& D = s.D;
  // row ops on D act as U ← E·U, Uinv ← Uinv·E⁻¹; column ops as V ← V·E, Vinv ← E⁻¹·Vinv
  auto rop = [&](int dst, int src, const Z& f) {
    row_op(D, dst, src, f);
    row_op(s.U, dst, src, f);
    col_op(s.Uinv, src, dst, -f);
  };
  auto rswap = [&](int x, int y) {
    row_swap(D, x, y);
    row_swap(s.U, x, y);
    col_swap(s.Uinv, x, y);
  };
  auto rneg = [&](int x) {
    for (int j = 0; j < n; ++j) D(x, j) = -D(x, j);
    for (int j = 0; j < m; ++j) s.U(x, j) = -s.U(x, j);
    for (int i = 0; i < m; ++i) s.Uinv(i, x) = -s.Uinv(i, x);
  };
  auto cop = [&](int dst, int src, const Z& f) {
    col_op(D, dst, src, f);
    col_op(s.V, dst, src, f);
    row_op(s.Vinv, src, dst, -f);
  };
  auto cswap = [&](int x, int y) {
    col_swap(D, x, y);
    col_swap(s.V, x, y);
    row_swap(s.Vinv, x, y);
  };
  int t = 0;
  while (t < m && t < n) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (D(i, j) != 0 && (pi < 0 || abs(D(i, j)) < abs(D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    rswap(t, pi);
    cswap(t, pj);
    bool done = false;
    while (!done) {
      done = true;
      for (int i = t + 1; i < m; ++i)
        if (D(i, t) != 0) {
          Z q;
          mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
          rop(i, t, -q);
          if (D(i, t) != 0) {
            rswap(t, i);
            done = false;
          }
        }
      for (int j = t + 1; j < n; ++j)
        if (D(t, j) != 0) {
          Z q;
          mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
          cop(j, t, -q);
          if (D(t, j) != 0) {
            cswap(t, j);
            done = false;
          }
        }
      if (done) {
        // enforce divisibility of the rest of the block
        for (int i = t + 1; i < m && done; ++i)
          for (int j = t + 1; j < n && done; ++j)
            if (D(i, j) % D(t, t) != 0) {
              rop(t, i, 1);
              done = false;
            }
      }
    }
    if (D(t, t) < 0) rneg(t);
    ++t;
  }
  s.rank = t;
  return s;
}

}  // namespace ttk
