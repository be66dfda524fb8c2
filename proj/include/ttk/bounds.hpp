#pragma once

#include <optional>
#include <vector>

#include "ttk/splitting.hpp"

namespace ttk {

/// Normal coordinates, one per dual edge (branch).
struct NormalCurve {
  std::vector<Z> coords;
  int components = 1;
};

struct BoundReport {
  Z r;
  int K = 0;
  Z c, c_prime, M_psi, dd_bound;
  int g = 0, s = 0, l = 0;
  std::optional<int> m;
  std::string str() const;
  std::string structured() const;
};

Z r_of_psi(const IntMatrix& M);
int power_positive_K(const IntMatrix& M);

struct ExtensionIncidence {
  DiagonalExtension ext_prime;
  IntMatrix N;
};
/// Carrying of ψ^K applied to the extended track by the extension ext′.
ExtensionIncidence extension_incidence(const AgolCycle& c, const DiagonalExtension& ext, int K);
ExtensionIncidence extension_incidence(const AgolCycle& c, const DiagonalExtension& ext);
Z c_of_psi(const AgolCycle& c);
Z c_of_psi(const AgolCycle& c, int K);

/// Edge crossings of the diagonal between two cusps of a region.
int diagonal_length(const TrainTrack& t, const Diagonal& d);
int c_prime(const TrainTrack& t);

void check_normal(const DualTriangulation& d, const NormalCurve& g);
Z curve_length(const NormalCurve& g, const DualTriangulation& d);
Z curve_length(const NormalCurve& g);

struct Pushed {
  std::vector<Z> v;
  Z len_bound, int_bound;
};
Pushed push_curve(const IntMatrix& M, const NormalCurve& g);

Z f_psi(const Z& r, const Z& x);
Z m_of_psi(int g, const Z& r, const Z& c_total);
Z dd_bound(int g, int s, const Z& M_psi);

BoundReport compute_bounds(const AgolCycle& c);
/// Reads the key-value form written by BoundReport::str.
BoundReport parse_bound_report(const std::string& text);

}  // namespace ttk
