#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "optoa/designs.hpp"

namespace optoa {

// Restrict `a` to the columns not listed. Defaults to dropping the last s
// columns; 1 <= s <= k-2.
OrthogonalArray delete_columns(const OrthogonalArray& a, int s,
                               const std::optional<std::vector<int>>& columns = std::nullopt);

// Largest s with s < (k(n-1)+1)^2 / ((n-1)(lambda n^2 + k(n-1)+1)); 0 if none.
// Throws Error(infeasible) unless (m, lambda, k, n) is a feasible quadruple.
int max_safe_deletions(int k, int n, std::int64_t lambda);

// Whether m = lambda n^2/(k(n-1)+1) equals floor(lambda n^2/((k-s)(n-1)+1)).
bool m_optimal_after_deletion(int k, int n, std::int64_t lambda, int s);

}  // namespace optoa
