#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "optoa/designs.hpp"

namespace optoa {

struct PairWitness {
  int col_a = 0;
  int col_b = 0;
  Symbol sym_a = 0;
  Symbol sym_b = 0;
  std::int64_t count = 0;

  bool operator==(const PairWitness&) const = default;
};

struct Classification {
  bool optimal = false;
  bool basic = false;
  bool m_optimal = false;

  bool operator==(const Classification&) const = default;
  // Space-separated labels, e.g. "optimal basic m-optimal"; "none" if empty.
  std::string to_string() const;
};

struct VerificationReport {
  bool is_oa = false;
  std::optional<std::int64_t> lambda_observed;
  std::optional<PairWitness> offending;
  std::vector<Symbol> repeated_row;
  std::int64_t m_observed = 0;
  // Zero count a_i -> number of rows, excluding the m_observed copies of
  // repeated_row.
  std::map<int, std::int64_t> zero_count_histogram;
  Classification classification;
  std::uint64_t rows_seen = 0;

  bool operator==(const VerificationReport&) const = default;
};

// Accepts rows one at a time and keeps only the pair-count tables and row
// keys, so arrays that are never materialized can be checked.
class StreamingVerifier {
public:
  StreamingVerifier(int k, int n, std::int64_t lambda);

  void push(std::span<const Symbol> row);
  void push_repeated(std::span<const Symbol> row, std::int64_t copies);

  // Sorts the collected row keys; call once after the last push.
  VerificationReport finish();

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::int64_t lambda() const noexcept { return lambda_; }

private:
  void count_row(std::span<const Symbol> row, std::int64_t copies);

  int k_;
  int n_;
  std::int64_t lambda_;
  std::uint64_t rows_ = 0;
  // counts_[pair * n*n + x*n + y] for unordered column pairs in (i<j) order.
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> zero_hist_;
  bool packed_;
  std::vector<std::uint64_t> packed_keys_;
  std::map<std::uint64_t, std::int64_t> packed_extra_;
  std::vector<std::vector<Symbol>> wide_keys_;
  std::map<std::vector<Symbol>, std::int64_t> wide_extra_;
};

// Exhaustive pair counting over all k(k-1)/2 column pairs.
VerificationReport verify_strength2(const OrthogonalArray& a);

// Lexicographically smallest row of maximum multiplicity.
std::pair<std::vector<Symbol>, std::int64_t> repeated_row(const OrthogonalArray& a);

// True iff every row other than the repeated all-zero rows has exactly
// (k-1)/n zeros. Throws Error(invalid_argument) if the most repeated row is not
// all-zero.
bool zero_count_check(const OrthogonalArray& a);

Classification classify(const OrthogonalArray& a);
Classification classify(int k, int n, std::int64_t lambda, std::int64_t m);

}  // namespace optoa
