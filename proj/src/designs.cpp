#include "optoa/designs.hpp"

#include <algorithm>
#include <numeric>

#include "optoa/error.hpp"

namespace optoa {

namespace {

void check_dimensions(int k, int n) {
  require(k >= 2, Errc::invalid_argument, "k must be at least 2");
  require(n >= 2 && n <= kMaxAlphabet, Errc::invalid_argument,
          "n must lie in [2, " + std::to_string(kMaxAlphabet) + "]");
}

}  // namespace

OrthogonalArray::OrthogonalArray(int k, int n, std::int64_t lambda, std::vector<Symbol> cells)
    : k_(k), n_(n), lambda_(lambda), cells_(std::move(cells)) {
  check_dimensions(k, n);
  require(lambda >= 1, Errc::invalid_argument, "lambda must be at least 1");
  require(cells_.size() % static_cast<std::size_t>(k) == 0, Errc::invalid_argument,
          "cell count is not a multiple of k");
  const std::int64_t expected = checked_mul(lambda, std::int64_t{n} * n);
  require(static_cast<std::int64_t>(row_count()) == expected, Errc::invalid_argument,
          "row count " + std::to_string(row_count()) + " differs from lambda*n^2 = " +
              std::to_string(expected));
  for (Symbol s : cells_)
    require(s < n, Errc::invalid_argument, "symbol " + std::to_string(s) + " out of range");
}

OrthogonalArray OrthogonalArray::from_rows(int k, int n, std::int64_t lambda,
                                           const std::vector<std::vector<int>>& rows) {
  check_dimensions(k, n);
  std::vector<Symbol> cells;
  cells.reserve(rows.size() * static_cast<std::size_t>(k));
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == k, Errc::invalid_argument, "row of wrong length");
    for (int x : row) {
      require(x >= 0 && x < n, Errc::invalid_argument, "symbol out of range");
      cells.push_back(static_cast<Symbol>(x));
    }
  }
  return OrthogonalArray(k, n, lambda, std::move(cells));
}

OrthogonalArray stack(const OrthogonalArray& a, int copies) {
  require(copies >= 1, Errc::invalid_argument, "copies must be positive");
  std::vector<Symbol> cells;
  cells.reserve(a.cells().size() * static_cast<std::size_t>(copies));
  for (int c = 0; c < copies; ++c) cells.insert(cells.end(), a.cells().begin(), a.cells().end());
  return OrthogonalArray(a.k(), a.n(), checked_mul(a.lambda(), copies), std::move(cells));
}

std::vector<std::vector<Symbol>> sorted_rows(const OrthogonalArray& a) {
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(a.row_count());
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    auto r = a.row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

bool Quadruple::feasible() const {
  if (k < 2 || n < 2 || m < 1 || lambda < 1) return false;
  if ((k - 1) % n != 0 || (k - 1) / n < 1) return false;
  const std::int64_t denom = std::int64_t{k} * (n - 1) + 1;
  return checked_mul(m, denom) == checked_mul(lambda, std::int64_t{n} * n);
}

bool Quadruple::basic() const { return feasible() && std::gcd(m, lambda) == 1; }

StartingRowSet::StartingRowSet(int k, int n, std::vector<std::vector<int>> base_rows)
    : k_(k), n_(n), rows_(std::move(base_rows)) {
  check_dimensions(k, n);
  require(!rows_.empty(), Errc::invalid_argument, "starting-row set is empty");
  for (const auto& row : rows_) {
    require(static_cast<int>(row.size()) == k, Errc::invalid_argument,
            "starting row of wrong length");
    for (int x : row)
      require(x == kInfinity || (x >= 0 && x < n - 1), Errc::invalid_argument,
              "starting-row symbol out of range");
  }
}

StartingRowSet StartingRowSet::from_final_alphabet(int k, int n,
                                                   const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<int>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<int> r;
    r.reserve(row.size());
    for (int x : row) {
      require(x >= 0 && x < n, Errc::invalid_argument, "symbol out of range");
      r.push_back(x == 0 ? kInfinity : x - 1);
    }
    out.push_back(std::move(r));
  }
  return StartingRowSet(k, n, std::move(out));
}

BlockDesign::BlockDesign(int v, std::vector<std::vector<std::uint8_t>> blocks)
    : v_(v), blocks_(std::move(blocks)) {
  require(v >= 2, Errc::invalid_argument, "a design needs at least 2 points");
  require(!blocks_.empty(), Errc::invalid_argument, "a design needs at least one block");

  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& blk = blocks_[i];
    require(static_cast<int>(blk.size()) == v, Errc::invalid_argument, "block row of wrong length");
    int size = 0;
    for (auto x : blk) {
      require(x <= 1, Errc::invalid_argument, "incidence entries must be 0 or 1");
      size += x;
    }
    if (i == 0) block_size_ = size;
    require(size == block_size_, Errc::invalid_argument,
            "block " + std::to_string(i) + " has size " + std::to_string(size) + ", expected " +
                std::to_string(block_size_));
  }

  for (int p = 0; p < v; ++p) {
    int rep = 0;
    for (const auto& blk : blocks_) rep += blk[p];
    if (p == 0) r_ = rep;
    require(rep == r_, Errc::invalid_argument,
            "point " + std::to_string(p) + " has replication " + std::to_string(rep) +
                ", expected " + std::to_string(r_));
  }

  for (int p = 0; p < v; ++p) {
    for (int q = p + 1; q < v; ++q) {
      int both = 0;
      for (const auto& blk : blocks_) both += blk[p] & blk[q];
      if (p == 0 && q == 1) lambda_ = both;
      require(both == lambda_, Errc::invalid_argument,
              "points " + std::to_string(p) + "," + std::to_string(q) + " lie in " +
                  std::to_string(both) + " blocks, expected " + std::to_string(lambda_));
    }
  }

  // Both identities follow from the counts above; kept as explicit checks.
  require(std::int64_t{b()} * block_size_ == std::int64_t{v_} * r_, Errc::invalid_argument,
          "bk != vr");
  require(std::int64_t{lambda_} * (v_ - 1) == std::int64_t{r_} * (block_size_ - 1),
          Errc::invalid_argument, "lambda(v-1) != r(k-1)");
}

HadamardMatrix::HadamardMatrix(int order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
  require(order >= 1, Errc::invalid_argument, "order must be positive");
  require(entries_.size() == static_cast<std::size_t>(order) * order, Errc::invalid_argument,
          "entry count differs from order^2");
  for (auto e : entries_) require(e == 1 || e == -1, Errc::invalid_argument, "entries must be +1/-1");
  for (int i = 0; i < order; ++i) {
    for (int j = i; j < order; ++j) {
      std::int64_t dot = 0;
      for (int c = 0; c < order; ++c) dot += at(i, c) * at(j, c);
      require(dot == (i == j ? order : 0), Errc::invalid_argument,
              "rows " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal");
    }
  }
}

}  // namespace optoa
