#pragma once

#include "ttk/common.hpp"

namespace ttk {

/// Univariate rational polynomial, coefficients low to high, no trailing zeros.
using QPoly = std::vector<Q>;

namespace poly {

void normalize(QPoly& p);
int degree(const QPoly& p);  // -1 for zero
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Q& c);
/// Returns quotient, sets rem.
QPoly divmod(const QPoly& a, const QPoly& b, QPoly& rem);
QPoly mod(const QPoly& a, const QPoly& b);
QPoly make_monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
Q eval(const QPoly& p, const Q& x);
QPoly from_ints(const std::vector<Z>& c);

/// Sturm sequence of a nonzero polynomial.
std::vector<QPoly> sturm_sequence(const QPoly& p);
/// Number of distinct real roots in (lo, hi].
int sturm_count(const std::vector<QPoly>& seq, const Q& lo, const Q& hi);

/// Bound B with every real root in (-B, B).
Q root_bound(const QPoly& p);

/// Enclosure of p over [lo, hi] by interval Horner evaluation.
void interval_eval(const QPoly& p, const Q& lo, const Q& hi, Q& out_lo, Q& out_hi);

std::string format(const QPoly& p);

}  // namespace poly
}  // namespace ttk
