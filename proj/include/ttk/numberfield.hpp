#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ttk/common.hpp"
#include "ttk/poly.hpp"

namespace ttk {

class NFElement;

/// Q(λ) for a real root λ of a monic integer polynomial, λ isolated by (lo, hi].
class NumberField {
 public:
  NumberField() = default;
  /// Throws NonMonic, NotIsolating.
  static NumberField create(const std::vector<Z>& minpoly, const Q& lo, const Q& hi);
  static NumberField rationals();

  int degree() const { return int(d_->minpoly.size()) - 1; }
  const QPoly& minpoly() const { return d_->minpoly; }
  const std::vector<Z>& int_minpoly() const { return d_->coeffs; }
  const Q& lo() const { return d_->lo; }
  const Q& hi() const { return d_->hi; }
  bool valid() const { return bool(d_); }
  /// Same polynomial and same isolated root.
  bool same(const NumberField& o) const;
  double approx() const;

  NFElement zero() const;
  NFElement one() const;
  NFElement gen() const;
  NFElement from_rational(const Q& q) const;
  NFElement element(std::vector<Q> coeffs) const;

  /// `field minpoly = c0 c1 ... root in (lo, hi)`
  std::string declaration() const;
  static NumberField parse_declaration(const std::string& line);

 private:
  struct Data {
    QPoly minpoly;
    std::vector<Z> coeffs;
    Q lo, hi;
    Q narrow_lo, narrow_hi;  // subinterval used to seed sign evaluation
    std::vector<QPoly> sturm;
  };
  std::shared_ptr<const Data> d_;
  friend class NFElement;
};

class NFElement {
 public:
  NFElement() = default;
  NFElement(NumberField f, std::vector<Q> c);

  const NumberField& field() const { return f_; }
  const std::vector<Q>& coeffs() const { return c_; }
  bool is_zero() const;
  /// Sign of the real number a(λ).
  int sign() const;
  double approx() const;
  std::string str() const;
  /// Parses "(c0, c1, ...)" padding missing coordinates with zero.
  static NFElement parse(const NumberField& f, const std::string& text);

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  NFElement operator-() const;
  NFElement inverse() const;
  bool operator==(const NFElement& o) const;
  bool operator!=(const NFElement& o) const { return !(*this == o); }

 private:
  NumberField f_;
  std::vector<Q> c_;
};

int compare(const NFElement& a, const NFElement& b);

/// Field of the dominant eigenvalue and the eigenvector with first entry 1.
struct PFEigen {
  NumberField field;
  NFElement lambda;
  std::vector<NFElement> vec;
};

/// Throws NotPerronFrobenius.
PFEigen pf_eigendata(const IntMatrix& m);

/// Characteristic polynomial det(xI − M), monic, low to high.
QPoly charpoly(const IntMatrix& m);

}  // namespace ttk
