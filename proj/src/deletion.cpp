#include "optoa/deletion.hpp"

#include <algorithm>

#include "optoa/bounds.hpp"
#include "optoa/error.hpp"

namespace optoa {

OrthogonalArray delete_columns(const OrthogonalArray& a, int s, const std::optional<std::vector<int>>& columns) {
  const int k = a.k();
  require(s >= 1 && s <= k - 2, Errc::invalid_argument,
          "s = " + std::to_string(s) + " is outside [1, k-2] = [1, " + std::to_string(k - 2) + "]");
  std::vector<bool> drop(static_cast<std::size_t>(k), false);
  if (columns) {
    require(static_cast<int>(columns->size()) == s, Errc::invalid_argument,
            "expected " + std::to_string(s) + " column indices");
    for (int c : *columns) {
      require(c >= 0 && c < k, Errc::invalid_argument, "column index " + std::to_string(c) + " out of range");
      require(!drop[c], Errc::invalid_argument, "column index " + std::to_string(c) + " repeated");
      drop[c] = true;
    }
  } else {
    for (int c = k - s; c < k; ++c) drop[c] = true;
  }

  std::vector<Symbol> cells;
  cells.reserve(a.row_count() * static_cast<std::size_t>(k - s));
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    auto r = a.row(i);
    for (int c = 0; c < k; ++c)
      if (!drop[c]) cells.push_back(r[c]);
  }
  return OrthogonalArray(k - s, a.n(), a.lambda(), std::move(cells));
}

int max_safe_deletions(int k, int n, std::int64_t lambda) {
  const Rational bound = rao_repeat_bound(k, n, lambda);
  const Quadruple q{bound.numerator(), lambda, k, n};
  require(bound.denominator() == 1 && q.feasible(), Errc::infeasible,
          "(k, n, lambda) = (" + std::to_string(k) + ", " + std::to_string(n) + ", " + std::to_string(lambda) +
              ") is not a feasible optimal parameter set");
  // s (n-1)(lambda n^2 + D) < D^2 with D = k(n-1)+1.
  const std::int64_t d = std::int64_t{k} * (n - 1) + 1;
  const std::int64_t den = checked_mul(n - 1, checked_add(checked_mul(lambda, std::int64_t{n} * n), d));
  const std::int64_t num = checked_mul(d, d);
  return static_cast<int>((num - 1) / den);
}

bool m_optimal_after_deletion(int k, int n, std::int64_t lambda, int s) {
  require(s >= 0 && s < k, Errc::invalid_argument, "s must lie in [0, k-1]");
  const Rational bound = rao_repeat_bound(k, n, lambda);
  require(bound.denominator() == 1, Errc::infeasible, "lambda n^2 / (k(n-1)+1) is not an integer");
  const std::int64_t m = bound.numerator();
  const Rational after(checked_mul(lambda, std::int64_t{n} * n), std::int64_t{k - s} * (n - 1) + 1);
  return m == floor_of(after);
}

}  // namespace optoa
