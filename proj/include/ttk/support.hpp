#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttk/common.hpp"

namespace ttk {

/// Laurent polynomial over F₂: the set of exponent vectors with coefficient 1.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int n_vars) : n_(n_vars) {}
  static LaurentPoly one(int n_vars);
  static LaurentPoly monomial(std::vector<int> exps);
  static LaurentPoly variable(int n_vars, int i);

  int n_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::vector<int>>& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly pow(int k) const;
  bool operator==(const LaurentPoly& o) const = default;

  /// Value at the all-ones point.
  int at_ones() const;
  /// ∂/∂x_i evaluated at the all-ones point, mod 2.
  int partial_at_ones(int i) const;
  /// Formal partial derivative.
  LaurentPoly partial(int i) const;
  /// Divides by the largest monomial dividing every term; the result has nonnegative exponents.
  LaurentPoly normalized() const;
  /// Same terms in a ring with extra variables appended (shift = index of the first old variable).
  LaurentPoly embed(int n_total, int shift) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> terms_;  // sorted, no duplicates
  void canon();
};

/// Exact quotient of polynomials (nonnegative exponents). Throws Internal when not exact.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

struct TwistedComplex {
  std::vector<std::string> vars;
  int N = 0;
  std::vector<LaurentPoly> d;  // row major N×N

  int n_vars() const { return int(vars.size()); }
  LaurentPoly& at(int i, int j) { return d[size_t(i) * N + j]; }
  const LaurentPoly& at(int i, int j) const { return d[size_t(i) * N + j]; }
  static TwistedComplex zero(std::vector<std::string> vars, int N);
};

LaurentPoly parse_laurent(const std::string& s, const std::vector<std::string>& vars);
TwistedComplex parse_complex(const std::string& text);
std::string write_complex(const TwistedComplex& c);

bool check_differential(const TwistedComplex& c);
/// Determinant by fraction-free elimination after a monomial shift; monomial-normalized.
LaurentPoly determinant(const std::vector<LaurentPoly>& m, int n);
/// Determinant by cofactor expansion; monomial-normalized.
LaurentPoly determinant_cofactor(const std::vector<LaurentPoly>& m, int n);
/// All N/2 × N/2 minors, monomial-normalized, zeros and duplicates removed. Throws OddRank.
std::vector<LaurentPoly> minor_ideal(const TwistedComplex& c);

struct TangentResult {
  int dim = 0;
  int rank = 0;
  bool degenerate = false;  // some nonzero generator has zero gradient at the all-ones point
};
/// Throws NotInSupport, OddRank.
TangentResult support_dim_tangent(const std::vector<LaurentPoly>& gens, int n_vars);
TangentResult support_dim_tangent(const TwistedComplex& c);

struct PointCount {
  std::vector<Z> counts;   // counts[k-1] for k = 1..k_max
  std::optional<int> dim;  // empty when inconclusive
};
/// Throws BudgetExceeded.
PointCount support_dim_pointcount(const std::vector<LaurentPoly>& gens, int n_vars, int k_max);
PointCount support_dim_pointcount(const TwistedComplex& c, int k_max);

TwistedComplex tensor_complex(const TwistedComplex& a, const TwistedComplex& b);
TwistedComplex stabilize(const TwistedComplex& c);
/// P·d·P⁻¹ for an invertible F₂ matrix P (0/1 entries). Throws Singular.
TwistedComplex change_basis(const TwistedComplex& c, const std::vector<std::vector<int>>& P);

enum class SupportMethod { Tangent, Points, Both };

struct SupportReport {
  int n_vars = 0, N = 0;
  bool odd_rank = false;
  int minor_count = 0;
  std::optional<int> dim_tangent, dim_points;
  bool degenerate = false;
  bool not_in_support = false;
  bool agreement = true;
  int dim = 0;  // reported dimension
  std::vector<Z> counts;
  std::string str() const;
};

/// Throws Internal when the methods disagree without the degeneracy flag.
SupportReport support(const TwistedComplex& c, int k_max, SupportMethod method);

/// Multiplication in GF(2^k) for k ≤ 16 with a fixed primitive modulus.
struct GF2k {
  int k = 1;
  unsigned mod = 0;
  explicit GF2k(int k);
  unsigned mul(unsigned a, unsigned b) const;
  unsigned pow(unsigned a, long e) const;
  unsigned size() const { return 1u << k; }
};

}  // namespace ttk
