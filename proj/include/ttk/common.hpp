#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ttk {

using Q = mpq_class;
using Z = mpz_class;

enum class ErrorKind { Input, Domain, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), kind_(kind), code_(std::move(code)) {}
  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void domain_error(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Domain, code, msg);
}
[[noreturn]] inline void input_error(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Input, code, msg);
}
[[noreturn]] inline void internal_error(const std::string& msg) {
  throw Error(ErrorKind::Internal, "Internal", msg);
}

/// Dense integer matrix, row major.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Z> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}
  static IntMatrix identity(int n);

  Z& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const Z& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
std::vector<Z> operator*(const IntMatrix& m, const std::vector<Z>& v);
IntMatrix transpose(const IntMatrix& m);
IntMatrix matrix_power(const IntMatrix& m, int k);
bool strictly_positive(const IntMatrix& m);
std::string format_matrix(const IntMatrix& m);
Z determinant(const IntMatrix& m);
Z trace(const IntMatrix& m);

/// U·A·V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
struct SmithForm {
  IntMatrix U, Uinv, V, Vinv, D;
  int rank = 0;
};
SmithForm smith_normal_form(const IntMatrix& A);

/// Worker count for the parallel loops; at least 1.
void set_thread_count(int n);
int thread_count();

std::string trim(const std::string& s);
std::vector<std::string> split_ws(const std::string& s);
/// Parses "p", "-p" or "p/q".
Q parse_rational(const std::string& s);

}  // namespace ttk
