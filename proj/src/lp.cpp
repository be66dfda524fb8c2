#include "ttk/lp.hpp"

namespace ttk {

namespace {

struct Tableau {
  int m, n;  // rows, columns (without rhs)
  std::vector<std::vector<Q>> t;  // m+1 rows, n+1 cols; last row objective (reduced costs), last col rhs
  std::vector<int> basis;

  void pivot(int r, int c) {
    Q p = t[r][c];
    for (auto& x : t[r]) x /= p;
    for (int i = 0; i <= m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Q f = t[i][c];
      for (int j = 0; j <= n; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Minimizes the objective row (stored as reduced costs of "z - c x" form: we maximize by
  // entering columns with negative reduced cost). Returns false when unbounded.
  bool run(const std::vector<char>& allowed) {
    for (;;) {
      int c = -1;
      for (int j = 0; j < n; ++j)
        if (allowed[j] && t[m][j] < 0) {
          c = j;
          break;
        }
      if (c < 0) return true;
      int r = -1;
      Q best;
      for (int i = 0; i < m; ++i) {
        if (t[i][c] <= 0) continue;
        Q ratio = t[i][n] / t[i][c];
        if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) return false;
      pivot(r, c);
    }
  }
};

}  // namespace

std::optional<LPResult> lp_maximize(const std::vector<std::vector<Q>>& A, const std::vector<Q>& b,
                                    const std::vector<Q>& c) {
  int m = int(A.size()), nv = int(c.size());
  Tableau T;
  T.m = m;
  T.n = nv + m;  // originals + artificials
  T.t.assign(size_t(m) + 1, std::vector<Q>(size_t(T.n) + 1));
  T.basis.assign(size_t(m), 0);
  for (int i = 0; i < m; ++i) {
    Q s = b[i] < 0 ? -1 : 1;
    for (int j = 0; j < nv; ++j) T.t[i][j] = s * A[i][j];
    T.t[i][nv + i] = 1;
    T.t[i][T.n] = s * b[i];
    T.basis[i] = nv + i;
  }
  // phase 1: maximize -sum(artificials)
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= T.n; ++j)
      if (j < nv || j == T.n) T.t[m][j] -= T.t[i][j];
  std::vector<char> allowed(size_t(T.n), 1);
  if (!T.run(allowed)) internal_error("phase one unbounded");
  if (T.t[m][T.n] != 0) return std::nullopt;
  // drive artificials out of the basis where possible
  for (int i = 0; i < m; ++i) {
    if (T.basis[i] < nv) continue;
    for (int j = 0; j < nv; ++j)
      if (T.t[i][j] != 0) {
        T.pivot(i, j);
        break;
      }
  }
  for (int j = nv; j < T.n; ++j) allowed[j] = 0;
  // phase 2 objective row: reduced costs of -c
  for (int j = 0; j <= T.n; ++j) T.t[m][j] = 0;
  for (int j = 0; j < nv; ++j) T.t[m][j] = -c[j];
  for (int i = 0; i < m; ++i) {
    int bj = T.basis[i];
    if (bj >= nv || c[bj] == 0) continue;
    Q f = T.t[m][bj];
    for (int j = 0; j <= T.n; ++j) T.t[m][j] -= f * T.t[i][j];
  }
  if (!T.run(allowed)) domain_error("Unbounded", "linear program is unbounded");
  LPResult res;
  res.x.assign(size_t(nv), Q(0));
  for (int i = 0; i < m; ++i)
    if (T.basis[i] < nv) res.x[T.basis[i]] = T.t[i][T.n];
  res.value = 0;
  for (int j = 0; j < nv; ++j) res.value += c[j] * res.x[j];
  return res;
}

}  // namespace ttk
