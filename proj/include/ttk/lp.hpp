#pragma once

#include <optional>

#include "ttk/common.hpp"

namespace ttk {

/// Maximize c·x subject to A x = b, x >= 0, exactly over Q (two-phase simplex, Bland's rule).
/// Returns nullopt when infeasible; unbounded problems report Internal.
struct LPResult {
  Q value;
  std::vector<Q> x;
};
std::optional<LPResult> lp_maximize(const std::vector<std::vector<Q>>& A, const std::vector<Q>& b,
                                    const std::vector<Q>& c);

}  // namespace ttk
