#include "optoa/cyclic.hpp"

#include <algorithm>
#include <unordered_map>

#include "optoa/error.hpp"

namespace optoa {

namespace {

constexpr int kInf = StartingRowSet::kInfinity;

// Final-alphabet symbol of a starting-row entry translated by c.
inline int lift(int x, int c, int n) { return x == kInf ? 0 : (x + c) % (n - 1) + 1; }

std::vector<int> translate(const std::vector<int>& row, int c, int n) {
  std::vector<int> out(row);
  for (int& x : out)
    if (x != kInf) x = (x + c) % (n - 1);
  return out;
}

std::vector<int> orbit_min(const std::vector<int>& row, int n) {
  std::vector<int> best = row;
  const int k = static_cast<int>(row.size());
  for (int shift = 0; shift < k; ++shift) {
    auto rot = rotate_row(row, shift);
    for (int c = 0; c < n - 1; ++c) {
      auto t = translate(rot, c, n);
      if (t < best) best = std::move(t);
    }
  }
  return best;
}

struct ProfileHash {
  std::size_t operator()(const std::vector<std::int16_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::uint16_t>(x)) * 1099511628211ull;
    return h;
  }
};

class StartingRowSearch {
public:
  StartingRowSearch(int k, int n, int m, std::int64_t lambda, std::size_t limit)
      : k_(k), n_(n), m_(m), limit_(limit), abar_((k - 1) / n) {
    const std::size_t cells = static_cast<std::size_t>(k / 2) * n * n;
    target_.assign(cells, 0);
    for (int d = 1; d <= k / 2; ++d)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          target_[cell(d, x, y)] = static_cast<std::int16_t>(lambda - (x == 0 && y == 0 ? m : 0));
    std::vector<int> row(static_cast<std::size_t>(k));
    generate(row, 0, 0, false);
    for (std::size_t i = 0; i < candidates_.size(); ++i) by_profile_[profiles_[i]].push_back(i);
  }

  std::vector<StartingRowSet> run() {
    std::vector<std::size_t> chosen;
    std::vector<std::int16_t> sum(target_.size(), 0);
    descend(chosen, sum, 0);
    return std::move(found_);
  }

private:
  std::size_t cell(int d, int x, int y) const {
    return (static_cast<std::size_t>(d - 1) * n_ + x) * n_ + y;
  }

  // Rows with exactly abar infinities, starting with infinity, first finite
  // entry 0, kept only if orbit-minimal. Lexicographic order (inf < 0 < 1 ...).
  void generate(std::vector<int>& row, int pos, int infs, bool seen_finite) {
    if (pos == k_) {
      if (infs == abar_ && orbit_min(row, n_) == row) add_candidate(row);
      return;
    }
    const int remaining = k_ - pos;
    if (infs < abar_ && !(pos > 0 && infs + remaining < abar_)) {
      row[pos] = kInf;
      generate(row, pos + 1, infs + 1, seen_finite);
    }
    if (pos == 0) return;
    if (abar_ - infs >= remaining) return;
    const int top = seen_finite ? n_ - 1 : 1;
    for (int x = 0; x < top; ++x) {
      row[pos] = x;
      generate(row, pos + 1, infs, true);
    }
  }

  void add_candidate(const std::vector<int>& row) {
    std::vector<std::int16_t> prof(target_.size(), 0);
    for (int d = 1; d <= k_ / 2; ++d)
      for (int j = 0; j < k_; ++j)
        for (int c = 0; c < n_ - 1; ++c)
          ++prof[cell(d, lift(row[j], c, n_), lift(row[(j + d) % k_], c, n_))];
    for (std::size_t i = 0; i < prof.size(); ++i)
      if (prof[i] > target_[i]) return;
    candidates_.push_back(row);
    profiles_.push_back(std::move(prof));
  }

  void record(const std::vector<std::size_t>& chosen) {
    std::vector<std::vector<int>> rows;
    for (auto i : chosen) rows.push_back(candidates_[i]);
    found_.emplace_back(k_, n_, std::move(rows));
  }

  void descend(std::vector<std::size_t>& chosen, std::vector<std::int16_t>& sum, std::size_t start) {
    if (found_.size() >= limit_) return;
    const int left = m_ - static_cast<int>(chosen.size());
    if (left == 1) {
      std::vector<std::int16_t> need(target_.size());
      for (std::size_t i = 0; i < need.size(); ++i) need[i] = static_cast<std::int16_t>(target_[i] - sum[i]);
      auto it = by_profile_.find(need);
      if (it == by_profile_.end()) return;
      for (auto idx : it->second) {
        if (idx < start) continue;
        chosen.push_back(idx);
        record(chosen);
        chosen.pop_back();
        if (found_.size() >= limit_) return;
      }
      return;
    }
    for (std::size_t idx = start; idx < candidates_.size(); ++idx) {
      const auto& prof = profiles_[idx];
      bool ok = true;
      for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = static_cast<std::int16_t>(sum[i] + prof[i]);
        ok &= sum[i] <= target_[i];
      }
      if (ok) {
        chosen.push_back(idx);
        descend(chosen, sum, idx);
        chosen.pop_back();
      }
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = static_cast<std::int16_t>(sum[i] - prof[i]);
      if (found_.size() >= limit_) return;
    }
  }

  int k_;
  int n_;
  int m_;
  std::size_t limit_;
  int abar_;
  std::vector<std::int16_t> target_;
  std::vector<std::vector<int>> candidates_;
  std::vector<std::vector<std::int16_t>> profiles_;
  std::unordered_map<std::vector<std::int16_t>, std::vector<std::size_t>, ProfileHash> by_profile_;
  std::vector<StartingRowSet> found_;
};

}  // namespace

DistanceProfile::DistanceProfile(int k, int n)
    : k_(k), n_(n), counts_(static_cast<std::size_t>(k / 2) * n * n, 0) {}

std::int64_t DistanceProfile::total(int d) const {
  std::int64_t t = 0;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) t += count(d, x, y);
  return t;
}

std::vector<int> rotate_row(const std::vector<int>& row, int shift) {
  const int k = static_cast<int>(row.size());
  std::vector<int> out(row.size());
  for (int j = 0; j < k; ++j) out[j] = row[((j - shift) % k + k) % k];
  return out;
}

OrthogonalArray develop(const StartingRowSet& s) {
  const int k = s.k(), n = s.n(), m = s.m();
  const std::int64_t total = checked_add(checked_mul(checked_mul(m, k), n - 1), m);
  const std::int64_t sq = std::int64_t{n} * n;
  require(total % sq == 0, Errc::invalid_argument,
          "developed row count " + std::to_string(total) + " is not a multiple of n^2");

  std::vector<Symbol> cells;
  cells.reserve(static_cast<std::size_t>(total) * k);
  cells.insert(cells.end(), static_cast<std::size_t>(m) * k, Symbol{0});
  for (const auto& base : s.base_rows()) {
    for (int shift = 0; shift < k; ++shift) {
      const auto rot = rotate_row(base, shift);
      for (int c = 0; c < n - 1; ++c)
        for (int x : rot) cells.push_back(static_cast<Symbol>(lift(x, c, n)));
    }
  }
  return OrthogonalArray(k, n, total / sq, std::move(cells));
}

DistanceProfile distance_profile(const StartingRowSet& s) {
  const int k = s.k(), n = s.n();
  DistanceProfile prof(k, n);
  for (const auto& row : s.base_rows())
    for (int d = 1; d <= k / 2; ++d)
      for (int j = 0; j < k; ++j)
        for (int c = 0; c < n - 1; ++c) prof.add(d, lift(row[j], c, n), lift(row[(j + d) % k], c, n), 1);
  return prof;
}

DistanceCheck distance_check(const StartingRowSet& s, std::int64_t target_lambda) {
  DistanceCheck out{true, distance_profile(s)};
  for (int d = 1; d <= s.k() / 2 && out.ok; ++d)
    for (int x = 0; x < s.n(); ++x)
      for (int y = 0; y < s.n(); ++y) {
        const std::int64_t expected = target_lambda - (x == 0 && y == 0 ? s.m() : 0);
        if (out.profile.count(d, x, y) != expected) out.ok = false;
      }
  return out;
}

StartingRowSet canonical_form(const StartingRowSet& s) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : s.base_rows()) rows.push_back(orbit_min(r, s.n()));
  std::sort(rows.begin(), rows.end());
  return StartingRowSet(s.k(), s.n(), std::move(rows));
}

std::vector<StartingRowSet> search_starting_rows(int k, int n, std::int64_t m, std::int64_t lambda,
                                                 std::size_t limit) {
  const Quadruple q{m, lambda, k, n};
  require(q.feasible(), Errc::infeasible,
          "(m, lambda, k, n) = (" + std::to_string(m) + ", " + std::to_string(lambda) + ", " +
              std::to_string(k) + ", " + std::to_string(n) + ") is not feasible");
  require(lambda < 32768, Errc::too_large, "lambda too large for the search tables");
  if (limit == 0) return {};
  return StartingRowSearch(k, n, static_cast<int>(m), lambda, limit).run();
}

}  // namespace optoa
