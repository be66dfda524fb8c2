#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "ttk/lp.hpp"
#include "ttk/splitting.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TTK_FIXTURES) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ttk::ParsedTrack track(const std::string& name) { return ttk::parse_track(fixture(name)); }

inline const char* kTrackFixtures[] = {"torus.track", "sphere4.track", "genus2_hexagon.track"};

/// Switch conditions checked directly from the slot table.
inline bool switch_ok(const ttk::TrainTrack& t, const ttk::Measure& m) {
  for (int w = 0; w < t.num_switches(); ++w) {
    const auto& s = t.sw[w];
    ttk::NFElement sum = m.field.zero();
    for (size_t k = 1; k < s.size(); ++k) sum = sum + m.w[s[k].branch];
    if (sum != m.w[s[0].branch]) return false;
  }
  return true;
}

inline bool all_positive(const ttk::Measure& m) {
  return std::all_of(m.w.begin(), m.w.end(), [](const ttk::NFElement& x) { return x.sign() > 0; });
}

/// Random generic track with s switches; punctures are placed in every region with fewer than three cusps.
inline std::optional<ttk::TrainTrack> random_track(std::mt19937& rng, int s) {
  int nb = 3 * s / 2;
  std::vector<int> darts(2 * nb);
  for (int i = 0; i < 2 * nb; ++i) darts[i] = i;
  std::shuffle(darts.begin(), darts.end(), rng);
  ttk::TrainTrack t;
  for (int b = 0; b < nb; ++b) t.branch_names.push_back("b" + std::to_string(b));
  for (int w = 0; w < s; ++w) t.switch_names.push_back("s" + std::to_string(w));
  t.sw.assign(s, std::vector<ttk::BranchEnd>(3));
  for (int b = 0; b < nb; ++b)
    for (int e = 0; e < 2; ++e) {
      int d = darts[2 * b + e];
      t.sw[d / 3][d % 3] = ttk::BranchEnd{b, e};
    }
  if (!ttk::connected(t)) return std::nullopt;
  auto rd = ttk::regions(t);
  for (size_t r = 0; r < rd.regions.size(); ++r)
    if (rd.regions[r].cusp_count() < 3) {
      if (rd.regions[r].cusp_count() == 0) return std::nullopt;
      t.puncture_cusps.push_back(rd.regions[r].cusps[0]);
    }
  t.punctures = int(t.puncture_cusps.size());
  t.genus = ttk::computed_genus(t, int(rd.regions.size()));
  if (!ttk::is_filling(t)) return std::nullopt;
  return t;
}

/// Strictly positive rational measure: an interior point plus random vertices of the measure polytope.
inline std::optional<ttk::Measure> random_measure(std::mt19937& rng, const ttk::TrainTrack& t) {
  auto base = ttk::positive_rational_measure(t);
  if (!base) return std::nullopt;
  int nb = t.num_branches();
  std::vector<std::vector<ttk::Q>> A;
  std::vector<ttk::Q> b;
  for (int w = 0; w < t.num_switches(); ++w) {
    std::vector<ttk::Q> row(nb, 0);
    row[t.sw[w][0].branch] += 1;
    for (int k = 1; k < 3; ++k) row[t.sw[w][k].branch] -= 1;
    A.push_back(row);
    b.push_back(0);
  }
  A.push_back(std::vector<ttk::Q>(nb, 1));
  b.push_back(1);
  std::vector<ttk::Q> w = *base;
  std::uniform_int_distribution<int> coef(-5, 5), mult(0, 7);
  for (int k = 0; k < 3; ++k) {
    std::vector<ttk::Q> c(nb);
    for (auto& x : c) x = coef(rng);
    auto r = ttk::lp_maximize(A, b, c);
    if (!r) continue;
    int f = mult(rng);
    for (int i = 0; i < nb; ++i) w[i] += f * r->x[i];
  }
  ttk::Measure m{ttk::NumberField::rationals(), {}};
  for (const auto& x : w) m.w.push_back(m.field.from_rational(x));
  return m;
}

inline bool same_measure(const ttk::Measure& a, const ttk::Measure& b) {
  if (a.w.size() != b.w.size()) return false;
  for (size_t i = 0; i < a.w.size(); ++i)
    if (a.w[i] != b.w[i]) return false;
  return true;
}

/// old = elem · new, checked entrywise.
inline bool carried(const ttk::IntMatrix& elem, const ttk::Measure& before, const ttk::Measure& after) {
  for (int i = 0; i < elem.rows; ++i) {
    ttk::NFElement s = before.field.zero();
    for (int j = 0; j < elem.cols; ++j)
      if (elem(i, j) != 0) s = s + before.field.from_rational(ttk::Q(elem(i, j))) * after.w[j];
    if (s != before.w[i]) return false;
  }
  return true;
}

}  // namespace testutil
