#pragma once

#include <cstdint>
#include <vector>

#include "optoa/designs.hpp"

namespace optoa {

// Pair counts at each cyclic distance d = 1..floor(k/2), summed over all
// starting rows with the modular development folded in. Symbols are indexed in
// the final alphabet (0 = infinity, z+1 = z).
class DistanceProfile {
public:
  DistanceProfile(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int distances() const noexcept { return k_ / 2; }

  std::int64_t count(int d, int x, int y) const { return counts_[index(d, x, y)]; }
  std::int64_t total(int d) const;

  void add(int d, int x, int y, std::int64_t c) { counts_[index(d, x, y)] += c; }
  const std::vector<std::int64_t>& raw() const noexcept { return counts_; }

  bool operator==(const DistanceProfile&) const = default;

private:
  std::size_t index(int d, int x, int y) const {
    return (static_cast<std::size_t>(d - 1) * n_ + x) * n_ + y;
  }

  int k_;
  int n_;
  std::vector<std::int64_t> counts_;
};

// Rotate every base row k times, develop each rotation over Z_{n-1} with
// infinity fixed, adjoin m constant rows (placed first) and relabel to
// 0..n-1. Throws if the row count is not a multiple of n^2.
OrthogonalArray develop(const StartingRowSet& s);

DistanceProfile distance_profile(const StartingRowSet& s);

struct DistanceCheck {
  bool ok = false;
  DistanceProfile profile;
};

// Decides whether develop(s) is an OA of index target_lambda from the distance
// profile alone.
DistanceCheck distance_check(const StartingRowSet& s, std::int64_t target_lambda);

// Row rotated right by `shift`: out[j] = row[(j - shift) mod k].
std::vector<int> rotate_row(const std::vector<int>& row, int shift);

// Each base row replaced by the least member of its orbit under rotation and
// translation of finite entries, rows sorted. Develops to the same row multiset.
StartingRowSet canonical_form(const StartingRowSet& s);

// Backtracking search over canonical starting-row sets for a feasible
// (m, lambda, k, n). Every base row has exactly (k-1)/n infinities and is the
// lexicographically least member of its rotation/translation orbit; base rows
// are nondecreasing. Results are in lexicographic order.
std::vector<StartingRowSet> search_starting_rows(int k, int n, std::int64_t m,
                                                 std::int64_t lambda, std::size_t limit = 1);

}  // namespace optoa
