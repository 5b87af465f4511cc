#pragma once

// Core value types: orthogonal arrays, parameter quadruples, cyclic starting
// rows, block designs and Hadamard matrices, plus their text formats.
//
// Every type validates its structural invariants on construction and is
// immutable afterwards.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "optoa/arith.hpp"

namespace optoa {

using Symbol = std::uint8_t;

// Alphabets are stored one byte per cell.
inline constexpr int kMaxAlphabet = 256;

// A lambda*n^2 by k array over {0, ..., n-1}. The strength-2 balance property
// is not assumed here; see verifier.hpp.
class OrthogonalArray {
public:
  OrthogonalArray(int k, int n, std::int64_t lambda, std::vector<Symbol> cells);

  static OrthogonalArray from_rows(int k, int n, std::int64_t lambda,
                                   const std::vector<std::vector<int>>& rows);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::int64_t lambda() const noexcept { return lambda_; }
  std::size_t row_count() const noexcept { return cells_.size() / static_cast<std::size_t>(k_); }

  std::span<const Symbol> row(std::size_t i) const {
    return {cells_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  std::span<const Symbol> cells() const noexcept { return cells_; }

  bool operator==(const OrthogonalArray&) const = default;

private:
  int k_;
  int n_;
  std::int64_t lambda_;
  std::vector<Symbol> cells_;
};

// `copies` copies of every row, in blocks; an OA_{copies*lambda}(k, n).
OrthogonalArray stack(const OrthogonalArray& a, int copies);

// Rows sorted lexicographically, for multiset comparisons.
std::vector<std::vector<Symbol>> sorted_rows(const OrthogonalArray& a);

struct Quadruple {
  std::int64_t m = 0;
  std::int64_t lambda = 0;
  int k = 0;
  int n = 0;

  Rational abar() const { return Rational(k - 1, n); }
  Rational rho() const { return Rational(std::int64_t{n} * n, std::int64_t{k} * (n - 1) + 1); }

  bool feasible() const;
  bool basic() const;

  bool operator==(const Quadruple&) const = default;
};

// Starting rows over {inf} U Z_{n-1}. Infinity is kInfinity; finite entries are
// 0..n-2. One base row per constant row, so base_rows.size() == m.
class StartingRowSet {
public:
  static constexpr int kInfinity = -1;

  StartingRowSet(int k, int n, std::vector<std::vector<int>> base_rows);

  // Rows written in the final alphabet, 0 being the repeated symbol:
  // 0 -> inf, j -> j-1.
  static StartingRowSet from_final_alphabet(int k, int n,
                                            const std::vector<std::vector<int>>& rows);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<int>>& base_rows() const noexcept { return rows_; }

  bool operator==(const StartingRowSet&) const = default;

private:
  int k_;
  int n_;
  std::vector<std::vector<int>> rows_;
};

// Rows are blocks, columns are points.
class BlockDesign {
public:
  // Derives (b, r, k, lambda) from the incidence matrix and throws unless all
  // five BIBD invariants hold.
  BlockDesign(int v, std::vector<std::vector<std::uint8_t>> blocks);

  int v() const noexcept { return v_; }
  int b() const noexcept { return static_cast<int>(blocks_.size()); }
  int r() const noexcept { return r_; }
  int block_size() const noexcept { return block_size_; }
  int lambda() const noexcept { return lambda_; }
  bool symmetric() const noexcept { return b() == v_; }

  const std::vector<std::vector<std::uint8_t>>& incidence() const noexcept { return blocks_; }

  bool operator==(const BlockDesign&) const = default;

private:
  int v_;
  int r_ = 0;
  int block_size_ = 0;
  int lambda_ = 0;
  std::vector<std::vector<std::uint8_t>> blocks_;
};

class HadamardMatrix {
public:
  // Entries must be +1/-1 and H * H^T must equal order * I.
  HadamardMatrix(int order, std::vector<std::int8_t> entries);

  int order() const noexcept { return order_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
  std::span<const std::int8_t> entries() const noexcept { return entries_; }

  bool operator==(const HadamardMatrix&) const = default;

private:
  int order_;
  std::vector<std::int8_t> entries_;
};

// Text formats. Readers throw Error(parse) on malformed input; `#` lines
// after the header are comments. Writers emit the canonical form.
struct OaHeader {
  int k = 0;
  int n = 0;
  std::int64_t lambda = 0;
};

// Row-at-a-time reader for the OA format; read_oa is built on it.
class OaReader {
public:
  explicit OaReader(std::istream& in);

  const OaHeader& header() const noexcept { return header_; }
  // False at end of input. Throws on a bad row, and at end of input when the
  // row count differs from lambda n^2.
  bool next(std::vector<Symbol>& row);

private:
  std::istream& in_;
  OaHeader header_;
  std::uint64_t expected_ = 0;
  std::uint64_t seen_ = 0;
  std::size_t line_no_ = 1;
};

OrthogonalArray read_oa(std::istream& in);
OrthogonalArray parse_oa(std::string_view text);
void write_oa(std::ostream& out, const OrthogonalArray& a, std::string_view comment = {});
std::string format_oa(const OrthogonalArray& a);

BlockDesign read_bibd(std::istream& in);
void write_bibd(std::ostream& out, const BlockDesign& d);

HadamardMatrix read_hadamard(std::istream& in);
void write_hadamard(std::ostream& out, const HadamardMatrix& h);

StartingRowSet read_start(std::istream& in);
void write_start(std::ostream& out, const StartingRowSet& s);

}  // namespace optoa
