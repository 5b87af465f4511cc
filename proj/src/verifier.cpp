#include "optoa/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "optoa/bounds.hpp"
#include "optoa/error.hpp"

namespace optoa {

namespace {

// True when every row fits a base-n key in 64 bits.
bool fits_packed(int k, int n) {
  std::uint64_t span = 1;
  for (int i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(span, static_cast<std::uint64_t>(n), &span)) return false;
  }
  return true;
}

template <typename Key>
std::pair<Key, std::int64_t> most_repeated(std::vector<Key>& keys, const std::map<Key, std::int64_t>& extra) {
  std::sort(keys.begin(), keys.end());
  std::pair<Key, std::int64_t> best{};
  bool have = false;
  auto consider = [&](const Key& key, std::int64_t count) {
    if (!have || count > best.second || (count == best.second && key < best.first)) {
      best = {key, count};
      have = true;
    }
  };
  auto ex = extra.begin();
  std::size_t i = 0;
  while (i < keys.size() || ex != extra.end()) {
    if (ex != extra.end() && (i == keys.size() || ex->first < keys[i])) {
      consider(ex->first, ex->second);
      ++ex;
      continue;
    }
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    std::int64_t count = static_cast<std::int64_t>(j - i);
    if (ex != extra.end() && ex->first == keys[i]) {
      count += ex->second;
      ++ex;
    }
    consider(keys[i], count);
    i = j;
  }
  return best;
}

}  // namespace

std::string Classification::to_string() const {
  std::string out;
  auto add = [&](const char* s) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  };
  if (optimal) add("optimal");
  if (basic) add("basic");
  if (m_optimal) add("m-optimal");
  return out.empty() ? "none" : out;
}

StreamingVerifier::StreamingVerifier(int k, int n, std::int64_t lambda)
    : k_(k), n_(n), lambda_(lambda), packed_(fits_packed(k, n)) {
  require(k >= 2, Errc::invalid_argument, "k must be at least 2");
  require(n >= 2 && n <= kMaxAlphabet, Errc::invalid_argument, "n out of range");
  require(lambda >= 1, Errc::invalid_argument, "lambda must be at least 1");
  const std::size_t pairs = static_cast<std::size_t>(k) * (k - 1) / 2;
  counts_.assign(pairs * static_cast<std::size_t>(n) * n, 0);
  zero_hist_.assign(static_cast<std::size_t>(k) + 1, 0);
}

void StreamingVerifier::count_row(std::span<const Symbol> row, std::int64_t copies) {
  require(static_cast<int>(row.size()) == k_, Errc::invalid_argument, "row of wrong length");
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  std::int64_t* cell = counts_.data();
  int zeros = 0;
  for (int i = 0; i < k_; ++i) {
    const Symbol x = row[i];
    require(x < n_, Errc::invalid_argument, "symbol out of range");
    zeros += x == 0;
    const std::size_t base = static_cast<std::size_t>(x) * n_;
    for (int j = i + 1; j < k_; ++j) {
      cell[base + row[j]] += copies;
      cell += nn;
    }
  }
  zero_hist_[zeros] += copies;
  rows_ += static_cast<std::uint64_t>(copies);
}

void StreamingVerifier::push(std::span<const Symbol> row) {
  count_row(row, 1);
  if (packed_) {
    std::uint64_t key = 0;
    for (Symbol x : row) key = key * static_cast<std::uint64_t>(n_) + x;
    packed_keys_.push_back(key);
  } else {
    wide_keys_.emplace_back(row.begin(), row.end());
  }
}

void StreamingVerifier::push_repeated(std::span<const Symbol> row, std::int64_t copies) {
  require(copies >= 0, Errc::invalid_argument, "negative copy count");
  if (copies == 0) return;
  count_row(row, copies);
  if (packed_) {
    std::uint64_t key = 0;
    for (Symbol x : row) key = key * static_cast<std::uint64_t>(n_) + x;
    packed_extra_[key] += copies;
  } else {
    wide_extra_[std::vector<Symbol>(row.begin(), row.end())] += copies;
  }
}

VerificationReport StreamingVerifier::finish() {
  VerificationReport rep;
  rep.rows_seen = rows_;

  rep.is_oa = true;
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  std::size_t p = 0;
  bool uniform = true;
  for (int a = 0; a < k_; ++a) {
    for (int b = a + 1; b < k_; ++b, ++p) {
      for (std::size_t cell = 0; cell < nn; ++cell) {
        const std::int64_t c = counts_[p * nn + cell];
        if (c != counts_[0]) uniform = false;
        if (c != lambda_ && rep.is_oa) {
          rep.is_oa = false;
          rep.offending = PairWitness{a, b, static_cast<Symbol>(cell / n_),
                                      static_cast<Symbol>(cell % n_), c};
        }
      }
    }
  }
  if (uniform) rep.lambda_observed = counts_[0];

  if (rows_ > 0) {
    if (packed_) {
      auto [key, count] = most_repeated(packed_keys_, packed_extra_);
      rep.repeated_row.assign(static_cast<std::size_t>(k_), 0);
      for (int i = k_ - 1; i >= 0; --i) {
        rep.repeated_row[i] = static_cast<Symbol>(key % static_cast<std::uint64_t>(n_));
        key /= static_cast<std::uint64_t>(n_);
      }
      rep.m_observed = count;
    } else {
      auto [row, count] = most_repeated(wide_keys_, wide_extra_);
      rep.repeated_row = row;
      rep.m_observed = count;
    }
  }

  auto hist = zero_hist_;
  if (rep.m_observed > 0) {
    const auto zeros = std::count(rep.repeated_row.begin(), rep.repeated_row.end(), Symbol{0});
    hist[zeros] -= rep.m_observed;
  }
  for (std::size_t z = 0; z < hist.size(); ++z)
    if (hist[z] != 0) rep.zero_count_histogram[static_cast<int>(z)] = hist[z];

  if (rep.is_oa) rep.classification = classify(k_, n_, lambda_, rep.m_observed);
  return rep;
}

VerificationReport verify_strength2(const OrthogonalArray& a) {
  StreamingVerifier v(a.k(), a.n(), a.lambda());
  for (std::size_t i = 0; i < a.row_count(); ++i) v.push(a.row(i));
  return v.finish();
}

std::pair<std::vector<Symbol>, std::int64_t> repeated_row(const OrthogonalArray& a) {
  auto rows = sorted_rows(a);
  std::pair<std::vector<Symbol>, std::int64_t> best{{}, 0};
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    // Sorted ascending, so a strict improvement keeps the smallest row on ties.
    if (static_cast<std::int64_t>(j - i) > best.second) best = {rows[i], static_cast<std::int64_t>(j - i)};
    i = j;
  }
  return best;
}

bool zero_count_check(const OrthogonalArray& a) {
  auto [row, m] = repeated_row(a);
  require(std::all_of(row.begin(), row.end(), [](Symbol x) { return x == 0; }),
          Errc::invalid_argument, "the most repeated row is not all-zero; relabel symbols first");
  if ((a.k() - 1) % a.n() != 0) return false;
  const int abar = (a.k() - 1) / a.n();
  std::int64_t constant = 0;
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    auto r = a.row(i);
    const auto zeros = std::count(r.begin(), r.end(), Symbol{0});
    if (zeros == a.k()) {
      ++constant;
    } else if (zeros != abar) {
      return false;
    }
  }
  return constant == m;
}

Classification classify(int k, int n, std::int64_t lambda, std::int64_t m) {
  Classification c;
  const Rational bound = rao_repeat_bound(k, n, lambda);
  c.optimal = Rational(m) == bound;
  c.basic = c.optimal && std::gcd(m, lambda) == 1;
  c.m_optimal = m == floor_of(bound);
  return c;
}

Classification classify(const OrthogonalArray& a) { return verify_strength2(a).classification; }

}  // namespace optoa
