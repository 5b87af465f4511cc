#pragma once

// Optimal OAs from all k-tuples with exactly (k-1)/n zeros, and their
// partitions by modular row sums.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "optoa/designs.hpp"
#include "optoa/verifier.hpp"

namespace optoa {

inline constexpr std::uint64_t kDefaultMaterializeLimit = std::uint64_t{1} << 24;

struct EnumerationParams {
  int k = 0;
  int n = 0;
  int abar = 0;
  std::int64_t lambda = 0;       // C(k-2, abar-1) (n-1)^(k-abar-1)
  std::int64_t m = 0;            // lambda n^2 / (k(n-1)+1)
  std::int64_t tuple_count = 0;  // C(k, abar) (n-1)^(k-abar)
};

// Validates n^2 <= k(n-1)+1 and that (k-1)/n is a positive integer; throws
// Error(infeasible) naming the failed condition.
EnumerationParams enumeration_params(int k, int n);

// Calls `sink` on every tuple with exactly abar zeros, ordered by zero-position
// subset (lexicographic) and then by the nonzero assignment (last column
// fastest). The span is only valid during the call.
void for_each_enumerated_row(int k, int n,
                             const std::function<void(std::span<const Symbol>)>& sink);

// Tuples followed by the block of m zero rows.
OrthogonalArray enumerate_oa(int k, int n, std::uint64_t max_rows = kDefaultMaterializeLimit);

// Column classes for the (n-1)^gamma refinement.
struct PartitionSpec {
  std::vector<int> class_sizes;

  int gamma() const noexcept { return static_cast<int>(class_sizes.size()); }
  int parts(int n) const;
};

// gamma = floor(k/(abar+3)) classes: gamma-1 of size abar+3, the last taking
// the remainder. Throws if gamma = 0.
PartitionSpec default_partition_spec(int k, int n);

// Checks each class has at least abar+3 columns and the sizes sum to k.
void validate_partition_spec(const PartitionSpec& spec, int k, int n);

// Type vector of a final-alphabet row: per class, the sum of (x-1) over the
// nonzero entries x, mod n-1.
std::vector<int> row_type(std::span<const Symbol> row, int n, const PartitionSpec& spec);

// Mixed-radix index of a type vector, first class most significant.
std::size_t type_index(std::span<const int> tau, int n);
std::vector<int> type_from_index(std::size_t index, int n, int gamma);

// Add kappa_i mod n-1 to the first finite entry of class i past that class's
// second column. Rows are over {inf} U Z_{n-1} (StartingRowSet::kInfinity).
std::vector<int> shift_bijection(const std::vector<int>& row, int n,
                                 std::span<const int> class_sizes, std::span<const int> kappa);

struct PartParams {
  std::int64_t lambda = 0;
  std::int64_t m = 0;
};

PartParams part_params(const EnumerationParams& p, int gamma);

// n-1 optimal OA_{lambda/(n-1)}(k, n). (n, k) = (2, 3) returns the single
// full array.
std::vector<OrthogonalArray> partition_oa(int k, int n,
                                          std::uint64_t max_rows = kDefaultMaterializeLimit);

// (n-1)^gamma optimal OA_{lambda/(n-1)^gamma}(k, n), ordered by type index.
std::vector<OrthogonalArray> multi_partition_oa(
    int k, int n, std::optional<PartitionSpec> spec = std::nullopt,
    std::uint64_t max_rows = kDefaultMaterializeLimit);

// Streams every part row by row: tuples in enumeration order, then each
// part's m/(n-1)^gamma zero rows. `sink(part, row)`.
void stream_multi_partition(int k, int n, const PartitionSpec& spec,
                            const std::function<void(std::size_t, std::span<const Symbol>)>& sink);

// Verify enumerate_oa(k, n) without materializing it.
VerificationReport verify_enumeration_streaming(int k, int n);

// One report per part, without materializing any part.
std::vector<VerificationReport> verify_multi_partition_streaming(int k, int n,
                                                                 const PartitionSpec& spec);

// enumerate_oa(k, n) written to `path` row by row.
void write_enumeration_file(int k, int n, const std::string& path);

// "class t_1 ... t_gamma" for the part with this type index.
std::string partition_class_label(std::size_t index, int n, int gamma);

// Write each part to `<stem>.<index>.txt` with a `# class <tau>` comment line.
std::vector<std::string> write_multi_partition_files(int k, int n, const PartitionSpec& spec,
                                                     const std::string& stem);

}  // namespace optoa
